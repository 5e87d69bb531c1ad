"""Desk-scale search for the list assignment minimizing the coloring count.

The claim under test: on a connected uniform hypergraph with m edges, once
k exceeds (m-1)/ln(1+sqrt(2)), the constant assignment (all lists equal) is
the unique minimizer of P(G, L) among k-lists, up to renaming colors.

Coloring counts are invariant under permuting the color universe, so the
exhaustive strategy walks one representative per orbit of that action.  A
representative is the tuple of list masks that is lexicographically least
in its orbit; candidates are restricted to first-vertex list {0..k-1} and
compared against the permutations stabilizing that list, which is exact.
Beyond universe size 8 the stabilizer grows too large and a first-occurrence
relabeling filter is used instead; that form can keep several members of an
orbit (never zero), so the search stays complete but may revisit orbits.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, permutations, product

from .bounds import PreconditionError, threshold
from .chromatic import chromatic_poly_broken
from .cycles import stratify
from .hypergraph import Hypergraph, SizeLimitError, is_connected
from .listcount import ListAssignment, list_count_broken, list_count_brute

_EXACT_CANONICAL_UNIVERSE = 8
_ASSIGNMENT_BUDGET = 10**7
_UNIVERSE_HEADROOM = 4
_SPOT_CHECK_RATE = 0.01


@dataclass(frozen=True)
class SearchSpec:
    """How to walk the assignment space.

    ``strategy`` is "exhaustive" (canonical orbit enumeration) or "random"
    (``samples`` draws after the constant assignment).  ``universe`` defaults
    to k + 2 when None.
    """

    k: int
    strategy: str = "exhaustive"
    universe: int | None = None
    samples: int = 1000
    seed: int = 0

    def resolved_universe(self) -> int:
        return self.k + 2 if self.universe is None else self.universe


@dataclass(frozen=True)
class MinimizerReport:
    """Outcome of one search: the minimum found and whether it was strict."""

    k: int
    universe: int
    strategy: str
    constant_count: int
    minimum: int
    argmin: ListAssignment
    strict: bool
    searched: int
    sharpness_witnesses: tuple[ListAssignment, ...] = ()


class VerificationFailure(Exception):
    """A non-constant assignment matched or beat the constant count."""

    def __init__(self, report: MinimizerReport):
        super().__init__(
            f"minimum {report.minimum} at a non-constant assignment, constant gives {report.constant_count}"
        )
        self.report = report


def _permuted_mask(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    while mask:
        bit = mask & -mask
        out |= 1 << perm[bit.bit_length() - 1]
        mask ^= bit
    return out


def _first_occurrence_form(masks: tuple[int, ...], universe: int) -> tuple[int, ...]:
    """Relabel colors in order of first appearance, scanning vertices then colors."""
    relabel: dict[int, int] = {}
    for mask in masks:
        t = mask
        while t:
            bit = t & -t
            c = bit.bit_length() - 1
            if c not in relabel:
                relabel[c] = len(relabel)
            t ^= bit
    for c in range(universe):
        if c not in relabel:
            relabel[c] = len(relabel)
    perm = tuple(relabel[c] for c in range(universe))
    return tuple(_permuted_mask(m, perm) for m in masks)


def enumerate_canonical_assignments(n: int, k: int, universe: int):
    """Yield one k-list assignment per color-permutation orbit.

    The stream is deterministic and starts with the constant assignment.
    Guards: universe <= k + 4 and (universe choose k)^n <= 10^7.
    """
    if k < 1 or universe < k or n < 1:
        raise PreconditionError("need n >= 1 and universe >= k >= 1")
    if universe > k + _UNIVERSE_HEADROOM:
        raise SizeLimitError(f"universe {universe} exceeds k + {_UNIVERSE_HEADROOM}")
    if math.comb(universe, k) ** n > _ASSIGNMENT_BUDGET:
        raise SizeLimitError("assignment space exceeds the enumeration budget")

    low = (1 << k) - 1
    all_masks = sorted(_mask(c) for c in combinations(range(universe), k))
    if universe <= _EXACT_CANONICAL_UNIVERSE:
        # permutations fixing {0..k-1} as a set; identity excluded
        stab = []
        for head in permutations(range(k)):
            for tail in permutations(range(k, universe)):
                perm = head + tail
                if perm != tuple(range(universe)):
                    stab.append(perm)
        tables = [{m: _permuted_mask(m, perm) for m in all_masks} for perm in stab]
        for rest in product(all_masks, repeat=n - 1):
            masks = (low, *rest)
            if any(_maps_below(masks, table) for table in tables):
                continue
            yield ListAssignment(universe, k, masks)
    else:
        for rest in product(all_masks, repeat=n - 1):
            masks = (low, *rest)
            if _first_occurrence_form(masks, universe) == masks:
                yield ListAssignment(universe, k, masks)


def _mask(colors: tuple[int, ...]) -> int:
    m = 0
    for c in colors:
        m |= 1 << c
    return m


def _maps_below(masks: tuple[int, ...], table: dict[int, int]) -> bool:
    """True iff applying the permutation gives a lexicographically smaller tuple."""
    for m in masks:
        t = table[m]
        if t < m:
            return True
        if t > m:
            return False
    return False


def random_assignments(n: int, k: int, universe: int, samples: int, seed: int):
    """The constant assignment followed by ``samples`` uniform draws."""
    yield ListAssignment.constant(n, k, universe)
    rng = random.Random(seed)
    colors = range(universe)
    for _ in range(samples):
        masks = tuple(_mask(tuple(rng.sample(colors, k))) for _ in range(n))
        yield ListAssignment(universe, k, masks)


def _search(h: Hypergraph, spec: SearchSpec) -> MinimizerReport:
    universe = spec.resolved_universe()
    if spec.strategy == "exhaustive":
        stream = enumerate_canonical_assignments(h.n, spec.k, universe)
    elif spec.strategy == "random":
        stream = random_assignments(h.n, spec.k, universe, spec.samples, spec.seed)
    else:
        raise ValueError(f"unknown strategy {spec.strategy!r}")

    strata = stratify(h, keep_members=True)
    constant_count = chromatic_poly_broken(h).eval(spec.k)
    spot = random.Random(spec.seed ^ 0x5EED)
    minimum: int | None = None
    argmin: ListAssignment | None = None
    strict = True
    searched = 0
    witnesses: list[ListAssignment] = []
    for lists in stream:
        count = list_count_broken(h, lists, strata=strata)
        if spot.random() < _SPOT_CHECK_RATE:
            brute = list_count_brute(h, lists)
            if brute != count:
                raise ArithmeticError(f"count mismatch: broken-cycle {count}, brute {brute}")
        searched += 1
        if minimum is None or count < minimum:
            minimum, argmin = count, lists
        if not lists.is_constant() and count <= constant_count:
            strict = False
            if len(witnesses) < 100:
                witnesses.append(lists)
    assert minimum is not None and argmin is not None
    return MinimizerReport(
        k=spec.k,
        universe=universe,
        strategy=spec.strategy,
        constant_count=constant_count,
        minimum=minimum,
        argmin=argmin,
        strict=strict,
        searched=searched,
        sharpness_witnesses=tuple(witnesses),
    )


def verify_theorem_main(h: Hypergraph, spec: SearchSpec) -> MinimizerReport:
    """Assert the strict-minimizer claim above the threshold.

    Requires a connected uniform hypergraph and k >= k_min(m).  Raises
    :class:`VerificationFailure` if any searched non-constant assignment
    reaches or beats the constant count.
    """
    h.uniformity()
    if not is_connected(h):
        raise PreconditionError("the claim concerns connected hypergraphs")
    cutoff = threshold(max(h.m, 1))
    if spec.k < cutoff.k_min:
        raise PreconditionError(
            f"k={spec.k} is below k_min={cutoff.k_min}; use explore_below_threshold"
        )
    report = _search(h, spec)
    if not report.strict:
        raise VerificationFailure(report)
    return report


def explore_below_threshold(h: Hypergraph, spec: SearchSpec) -> MinimizerReport:
    """Run the same search without asserting; ties and wins are collected.

    Any non-constant assignment with count <= constant count appears in
    ``sharpness_witnesses``.
    """
    h.uniformity()
    if not is_connected(h):
        raise PreconditionError("the claim concerns connected hypergraphs")
    return _search(h, spec)
