"""Command line front end.

Every subcommand prints one JSON report to stdout with the keys
``command``, ``instance``, ``results``, ``checks``, ``timing``, and
``version``.  All exact counts and coefficients are rendered as decimal
strings so arbitrary precision survives serialization.  The process exits
0 iff every check in the report passed; operational errors (bad files,
size guards) exit 2 with a message on stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
import warnings

from . import __version__
from .bounds import (
    PreconditionError,
    check_component_bounds,
    check_edge_bound,
    check_shared_color_bounds,
    difference_lower_bound,
    stratum_gap,
    threshold,
    threshold_margin,
    weierstrass_product_bound,
)
from .chromatic import (
    chromatic_count_brute,
    chromatic_poly_broken,
    chromatic_poly_stratified,
    chromatic_poly_whitney,
)
from .cycles import broken_cycles, delta_cycles, stratify
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    SizeLimitError,
    is_connected,
    parse,
    sort_edges_lex,
)
from .improper import (
    build_star,
    improper_count_brute,
    improper_count_via_star,
    improper_threshold,
)
from .listcount import (
    ListAssignment,
    edge_deficiency,
    list_count_broken,
    list_count_brute,
    list_count_inclusion_exclusion,
    parse_lists,
    total_deficiency,
)
from .verify import SearchSpec, VerificationFailure, explore_below_threshold, verify_theorem_main

DEFAULT_EDGE_CAP = 20


def _mask_to_indices(mask: int) -> list[int]:
    out = []
    while mask:
        bit = mask & -mask
        out.append(bit.bit_length() - 1)
        mask ^= bit
    return out


def _load_hypergraph(args) -> Hypergraph:
    with open(args.input, encoding="utf-8") as fh:
        h = parse(fh.read())
    if getattr(args, "sort_edges", "input") == "lex":
        h = sort_edges_lex(h)
    cap = getattr(args, "max_edges", DEFAULT_EDGE_CAP)
    if h.m > cap:
        raise SizeLimitError(f"instance has {h.m} edges, above the cap of {cap} (raise --max-edges)")
    return h


def _instance_section(h: Hypergraph) -> dict:
    return {
        "n": h.n,
        "m": h.m,
        "r": h.r,
        "connected": is_connected(h),
    }


def _check(name: str, ok: bool, witness: str | None = None) -> dict:
    entry = {"name": name, "passed": bool(ok)}
    if witness:
        entry["witness"] = witness
    return entry


def _emit(report: dict, args, started: float) -> int:
    report["timing"] = {"seconds": time.perf_counter() - started}
    report["version"] = __version__
    text = json.dumps(report, indent=2, sort_keys=True)
    print(text)
    if getattr(args, "json", None):
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0 if all(c["passed"] for c in report["checks"]) else 1


def cmd_poly(args) -> int:
    started = time.perf_counter()
    h = _load_hypergraph(args)
    whitney = chromatic_poly_whitney(h)
    broken = chromatic_poly_broken(h)
    strata = stratify(h)
    stratified = chromatic_poly_stratified(strata)
    checks = [
        _check("whitney_equals_broken", whitney == broken),
        _check("whitney_equals_stratified", whitney == stratified),
    ]
    evaluations = {str(k): str(whitney.eval(k)) for k in range(0, 4)}
    try:
        ok = all(whitney.eval(k) == chromatic_count_brute(h, k) for k in range(0, 4))
        checks.append(_check("evaluations_match_brute", ok))
    except SizeLimitError:
        pass
    report = {
        "command": "poly",
        "instance": _instance_section(h),
        "results": {
            "coefficients": [str(c) for c in whitney.coeffs],
            "pretty": str(whitney),
            "strata": {f"{i},{j}": str(c) for (i, j), c in sorted(strata.counts.items())},
            "evaluations": evaluations,
        },
        "checks": checks,
    }
    return _emit(report, args, started)


def cmd_cycles(args) -> int:
    started = time.perf_counter()
    h = _load_hypergraph(args)
    delta = delta_cycles(h)
    broken = broken_cycles(h, delta)
    strata = stratify(h)
    checks = [
        _check(
            "delta_cycles_have_three_edges",
            all(mask.bit_count() >= 3 for mask in delta.members),
        ),
        _check(
            "broken_cycles_have_two_edges",
            all(mask.bit_count() >= 2 for mask in broken.members),
        ),
    ]
    report = {
        "command": "cycles",
        "instance": _instance_section(h),
        "results": {
            "delta_cycles": [_mask_to_indices(m) for m in delta.members],
            "broken_cycles": [_mask_to_indices(m) for m in broken.members],
            "removed_max_edges": list(broken.removed),
            "strata": {f"{i},{j}": str(c) for (i, j), c in sorted(strata.counts.items())},
            "family_size": str(strata.total()),
        },
        "checks": checks,
    }
    return _emit(report, args, started)


def cmd_listcount(args) -> int:
    started = time.perf_counter()
    h = _load_hypergraph(args)
    with open(args.lists, encoding="utf-8") as fh:
        lists = parse_lists(fh.read())
    brute = list_count_brute(h, lists)
    via_ie = list_count_inclusion_exclusion(h, lists)
    via_broken = list_count_broken(h, lists)
    checks = [
        _check("brute_equals_inclusion_exclusion", brute == via_ie),
        _check("brute_equals_broken", brute == via_broken),
    ]
    report = {
        "command": "listcount",
        "instance": _instance_section(h),
        "results": {
            "count": str(brute),
            "k": lists.k,
            "universe": lists.universe,
            "edge_deficiencies": [str(edge_deficiency(h, lists, e)) for e in range(h.m)],
            "total_deficiency": str(total_deficiency(h, lists)),
        },
        "checks": checks,
    }
    return _emit(report, args, started)


def _verify_battery(h: Hypergraph, lists_sample: list[ListAssignment], strata, seed: int) -> list[dict]:
    """Inequality checks run during cmd_verify: structural ones over B(G)
    members, numeric ones over a sample of searched assignments."""
    checks = []
    ok_edges = True
    ok_comps = True
    witness = None
    assert strata.members is not None
    for (i, j), masks in strata.members.items():
        if i == 0:
            continue
        if i > h.n - strata.r + 1:
            ok_edges = False
            witness = f"stratum ({i},{j}) breaks the edge bound"
        floor = strata.component_floor(i)
        ceiling = strata.component_ceiling(i)
        if not floor <= j <= ceiling:
            ok_comps = False
            witness = f"stratum ({i},{j}) outside [{floor}, {ceiling}]"
        if (strata.r == 2 or i == 1) and j != ceiling:
            ok_comps = False
            witness = f"stratum ({i},{j}) misses forced ceiling {ceiling}"
    checks.append(_check("edge_bound_over_family", ok_edges, witness if not ok_edges else None))
    checks.append(_check("component_bounds_over_family", ok_comps, witness if not ok_comps else None))

    rng = random.Random(seed)
    ok = True
    witness = None
    for _ in range(200):
        t = rng.randint(1, 9)
        entries = tuple(rng.randint(0, t) for _ in range(rng.randint(1, 6)))
        lhs, rhs, verdict = weierstrass_product_bound(t, entries)
        if not verdict:
            ok, witness = False, f"t={t}, a={entries}: {lhs} < {rhs}"
            break
    checks.append(_check("weierstrass_product_bound", ok, witness))

    if h.m == 0:
        return checks
    ok_beta = True
    ok_gap = True
    ok_diff = True
    witness_beta = witness_gap = witness_diff = None
    for lists in lists_sample:
        outcome = check_shared_color_bounds(h, lists, max_edges=4)
        if not outcome.ok:
            ok_beta, witness_beta = False, outcome.witness
        try:
            for i in range(1, max(1, h.n - strata.r + 1) + 1):
                stratum_gap(h, lists, i, strata=strata)
        except ArithmeticError as exc:
            ok_gap, witness_gap = False, str(exc)
        actual, floor_val, verdict = difference_lower_bound(h, lists)
        if not verdict:
            ok_diff, witness_diff = False, f"difference {actual} below floor {floor_val}"
    checks.append(_check("shared_color_bounds", ok_beta, witness_beta))
    checks.append(_check("stratum_gap_bounds", ok_gap, witness_gap))
    checks.append(_check("difference_lower_bound", ok_diff, witness_diff))
    return checks


def cmd_verify(args) -> int:
    started = time.perf_counter()
    h = _load_hypergraph(args)
    cutoff = threshold(max(h.m, 1))
    k = args.k if args.k is not None else cutoff.k_min
    spec = SearchSpec(
        k=k,
        strategy=args.strategy,
        universe=args.universe,
        samples=args.samples,
        seed=args.seed,
    )
    assertion_mode = k >= cutoff.k_min
    strict_expected = assertion_mode
    if assertion_mode:
        try:
            report = verify_theorem_main(h, spec)
        except VerificationFailure as failure:
            report = failure.report
    else:
        report = explore_below_threshold(h, spec)

    strata = stratify(h, keep_members=True)
    constant = ListAssignment.constant(h.n, k, report.universe)
    sample = [constant, report.argmin]
    sample.extend(report.sharpness_witnesses[:8])
    checks = [
        _check(
            "constant_lists_specialize_to_polynomial",
            list_count_broken(h, constant, strata=strata) == report.constant_count,
        ),
    ]
    if strict_expected:
        checks.append(
            _check(
                "constant_is_strict_minimizer",
                report.strict,
                None if report.strict else "non-constant assignment reached the constant count",
            )
        )
    checks.extend(_verify_battery(h, sample, strata, args.seed))
    report_json = {
        "command": "verify",
        "instance": _instance_section(h),
        "results": {
            "k": report.k,
            "universe": report.universe,
            "strategy": report.strategy,
            "threshold": str(cutoff.threshold),
            "k_min": cutoff.k_min,
            "coefficient": str(cutoff.coefficient),
            "assertion_mode": assertion_mode,
            "constant_count": str(report.constant_count),
            "minimum": str(report.minimum),
            "argmin_lists": [list(report.argmin.colors_of(v)) for v in range(h.n)],
            "strict": report.strict,
            "searched": report.searched,
            "sharpness_witnesses": [
                [list(w.colors_of(v)) for v in range(h.n)] for w in report.sharpness_witnesses[:8]
            ],
        },
        "checks": checks,
    }
    return _emit(report_json, args, started)


def cmd_improper(args) -> int:
    started = time.perf_counter()
    g = _load_hypergraph(args)
    d = args.d
    k = args.k if args.k is not None else 2
    star = build_star(g, d)
    brute = improper_count_brute(g, d, k)
    via_star = improper_count_via_star(g, d, k)
    star_connected = is_connected(star.hypergraph)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        cutoff = improper_threshold(g, d) if star.p else None
    checks = [
        _check("brute_equals_star_reduction", brute == via_star),
    ]
    if d == 0:
        checks.append(_check("star_at_zero_is_input", set(star.hypergraph.edges) == set(g.edges)))
    report = {
        "command": "improper",
        "instance": _instance_section(g),
        "results": {
            "d": d,
            "k": k,
            "count": str(brute),
            "star_edges": [list(e) for e in star.hypergraph.edges],
            "p": star.p,
            "star_connected": star_connected,
            "threshold": str(cutoff.threshold) if cutoff else None,
            "k_min": cutoff.k_min if cutoff else None,
        },
        "checks": checks,
    }
    return _emit(report, args, started)


def cmd_threshold(args) -> int:
    started = time.perf_counter()
    if args.edges is not None:
        m = args.edges
        instance = {"n": None, "m": m, "r": None, "connected": None}
    elif args.input:
        h = _load_hypergraph(args)
        m = h.m
        instance = _instance_section(h)
    else:
        raise PreconditionError("provide --edges or --input")
    cutoff = threshold(m)
    margin_at_root = threshold_margin(float(cutoff.root))
    checks = [
        _check("k_min_brackets_threshold", cutoff.k_min > cutoff.threshold >= cutoff.k_min - 1),
        _check("margin_vanishes_at_root", abs(margin_at_root) < 1e-12),
    ]
    report = {
        "command": "threshold",
        "instance": instance,
        "results": {
            "m": m,
            "root": str(cutoff.root),
            "threshold": str(cutoff.threshold),
            "coefficient": str(cutoff.coefficient),
            "k_min": cutoff.k_min,
        },
        "checks": checks,
    }
    return _emit(report, args, started)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperchrom", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, lists=False, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="hypergraph file (edge-list format)")
        if lists:
            p.add_argument("--lists", required=True, help="list assignment file")
        p.add_argument("--max-edges", type=int, default=DEFAULT_EDGE_CAP, help="refuse larger instances")
        p.add_argument("--json", help="also write the report to this path")
        p.add_argument("--sort-edges", choices=["lex", "input"], default="input", help="edge order normalization")
        p.add_argument("--threads", type=int, default=0, help="worker cap; 0 means all cores (execution is currently serial)")

    p = sub.add_parser("poly", help="chromatic polynomial by three routes")
    common(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("cycles", help="delta-cycles, broken cycles, strata")
    common(p)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("listcount", help="list-coloring count by three routes")
    common(p, lists=True)
    p.set_defaults(func=cmd_listcount)

    p = sub.add_parser("verify", help="minimizer search plus inequality battery")
    common(p)
    p.add_argument("-k", type=int, default=None, help="list size; defaults to k_min")
    p.add_argument("--universe", type=int, default=None, help="color universe size; defaults to k+2")
    p.add_argument("--strategy", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--samples", type=int, default=1000, help="draws for the random strategy")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("improper", help="d-improper counts via the derived hypergraph")
    common(p)
    p.add_argument("-d", type=int, required=True, help="impropriety bound")
    p.add_argument("-k", type=int, default=None, help="color count (default 2)")
    p.set_defaults(func=cmd_improper)

    p = sub.add_parser("threshold", help="cutoff k_min for an edge count")
    common(p, needs_input=False)
    p.add_argument("--input", help="hypergraph file; its edge count is used")
    p.add_argument("-m", "--edges", type=int, default=None, help="edge count")
    p.set_defaults(func=cmd_threshold)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (HypergraphError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
