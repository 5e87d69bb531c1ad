"""Inequalities linking list-coloring counts to the chromatic polynomial.

The central quantity is the per-size gap

    g_i = sum over (i, j) strata of ( |B_i^j| k^j  -  sum over members S of
          prod over components of shared colors ),

for which   P(G, L) - P(G, k) = sum over i of (-1)^(i-1) g_i.   Each gap
satisfies 0 <= g_i <= k^(n-i+1-r) C(m-1, i-1) D, where D is the total edge
deficiency of L, with equality g_1 = D k^(n-r) at i = 1.  Chaining these
with the Weierstrass product bound yields

    P(G, L) - P(G, k) >= D k^(n-r) (1 - sinh((m-1)/k)),

so every k strictly above (m-1)/ln(1+sqrt(2)) makes the right side
nonnegative, and positive unless D = 0.  ``threshold`` computes that cutoff
to 40 significant digits.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from decimal import Decimal, getcontext
from itertools import combinations

from .chromatic import chromatic_poly_broken
from .cycles import Stratification, delta_cycles, stratify
from .hypergraph import Hypergraph, is_connected, subset_component_count
from .listcount import (
    ListAssignment,
    edge_deficiency,
    inclusion_exclusion_term,
    list_count_broken,
    shared_colors,
    total_deficiency,
    validate_assignment,
)


class PreconditionError(ValueError):
    """An operation was applied outside its stated hypotheses."""


class BoundViolation(ArithmeticError):
    """A mathematically guaranteed inequality failed; indicates a bug."""


@dataclass(frozen=True)
class CheckOutcome:
    """Result of one inequality check: overall verdict plus a counterexample."""

    ok: bool
    checked: int
    witness: str | None = None


def _require_uniform(h: Hypergraph) -> int:
    r = h.uniformity()
    if h.n < r:
        raise PreconditionError(f"{h.n} vertices cannot carry {r}-edges")
    return r


def check_edge_bound(h: Hypergraph) -> CheckOutcome:
    """Edge count of a delta-cycle-free uniform hypergraph is at most n - r + 1.

    Requires at least one edge and no delta-cycle; both are checked.
    """
    if h.m == 0:
        raise PreconditionError("edge bound needs at least one edge")
    r = _require_uniform(h)
    if delta_cycles(h).members:
        raise PreconditionError("hypergraph contains a delta-cycle")
    ok = h.m <= h.n - r + 1
    witness = None if ok else f"m={h.m} exceeds n-r+1={h.n - r + 1}"
    return CheckOutcome(ok, 1, witness)


def check_component_bounds(h: Hypergraph) -> CheckOutcome:
    """Component count of a delta-cycle-free uniform hypergraph lies in
    [max(1, n - (r-1) m), n - m + 2 - r], hitting the ceiling when r = 2 or m = 1.
    """
    if h.m == 0:
        raise PreconditionError("component bounds need at least one edge")
    r = _require_uniform(h)
    if delta_cycles(h).members:
        raise PreconditionError("hypergraph contains a delta-cycle")
    c = subset_component_count(h, h.full_mask())
    floor = max(1, h.n - (r - 1) * h.m)
    ceiling = h.n - h.m + 2 - r
    ok = floor <= c <= ceiling
    if ok and (r == 2 or h.m == 1):
        ok = c == ceiling
    witness = None if ok else f"c={c} outside [{floor}, {ceiling}] (r={r}, m={h.m})"
    return CheckOutcome(ok, 1, witness)


def check_shared_color_bounds(
    h: Hypergraph, lists: ListAssignment, max_edges: int = 6
) -> CheckOutcome:
    """For every connected sub-hypergraph (W, F) with |F| <= max_edges,

        k >= shared colors of W >= k - sum of deficiencies over F,

    with the right inequality tight when |W| is 1 or r.  Singleton vertex
    sets are included (F empty, bound k - 0).
    """
    validate_assignment(lists, h)
    r = h.uniformity() if h.edges else None
    k = lists.k
    checked = 0
    for v in range(h.n):
        checked += 1
        b = shared_colors(lists, (v,))
        # the empty-F bound is k >= b >= k, so this must be an equality
        if b != k:
            return CheckOutcome(False, checked, f"singleton {v}: shared={b}, k={k}")
    for size in range(1, min(max_edges, h.m) + 1):
        for combo in combinations(range(h.m), size):
            vertices = set()
            for e in combo:
                vertices.update(h.edges[e])
            mask = 0
            for e in combo:
                mask |= 1 << e
            # connected as a sub-hypergraph: one component plus isolated rest
            if subset_component_count(h, mask) != h.n - len(vertices) + 1:
                continue
            checked += 1
            b = shared_colors(lists, vertices)
            slack = sum(edge_deficiency(h, lists, e) for e in combo)
            if not (k >= b >= k - slack):
                return CheckOutcome(False, checked, f"F={combo}: shared={b} outside [{k - slack}, {k}]")
            if r is not None and len(vertices) in (1, r) and b != k - slack:
                return CheckOutcome(False, checked, f"F={combo}: expected tight bound, shared={b} != {k - slack}")
    return CheckOutcome(True, checked, None)


def weierstrass_product_bound(t, a):
    """Return (product of (t - a_i), t^s - t^(s-1) * sum(a), verdict).

    Requires 0 <= a_i <= t.  The verdict is the left side being at least
    the right side; exact for int or Fraction inputs, with a small relative
    tolerance when floats are involved.  Both sides coincide when at most
    one entry is positive.
    """
    a = tuple(a)
    for x in a:
        if x < 0 or x > t:
            raise ValueError(f"entry {x} outside [0, {t}]")
    lhs = 1
    for x in a:
        lhs = lhs * (t - x)
    s = len(a)
    rhs = t**s - t ** (s - 1) * sum(a) if s else 1
    ok = lhs >= rhs
    if not ok and (isinstance(lhs, float) or isinstance(rhs, float)):
        ok = math.isclose(lhs, rhs, rel_tol=1e-12, abs_tol=1e-12)
    return lhs, rhs, ok


@dataclass(frozen=True)
class StratumGap:
    """The gap g_i for one subset size, with its guaranteed ceiling."""

    i: int
    value: int
    ceiling: int


def stratum_gap(
    h: Hypergraph,
    lists: ListAssignment,
    i: int,
    strata: Stratification | None = None,
) -> StratumGap:
    """Compute g_i exactly from the member lists of the (i, *) strata.

    Raises :class:`BoundViolation` if the result leaves [0, ceiling]; that
    is never expected.
    """
    validate_assignment(lists, h)
    r = h.uniformity()
    if i < 1:
        raise PreconditionError("sizes start at 1")
    if h.m == 0:
        raise PreconditionError("stratum gaps need at least one edge")
    if strata is None or strata.members is None:
        strata = stratify(h, keep_members=True)
    k = lists.k
    value = 0
    for (size, j), masks in strata.members.items():
        if size != i:
            continue
        for mask in masks:
            value += k**j - abs(inclusion_exclusion_term(h, lists, mask))
    deficiency = total_deficiency(h, lists)
    exponent = h.n - i + 1 - r
    ceiling = (k**exponent if exponent >= 0 else 0) * math.comb(h.m - 1, i - 1) * deficiency
    if not 0 <= value <= ceiling:
        raise BoundViolation(f"g_{i} = {value} outside [0, {ceiling}]")
    if i == 1 and value != deficiency * k ** (h.n - r):
        raise BoundViolation(f"g_1 = {value} != deficiency * k^(n-r) = {deficiency * k ** (h.n - r)}")
    return StratumGap(i, value, ceiling)


# ln(1 + sqrt(2)), the root of 1 - sinh(x), to 40 significant digits.
def _high_precision_root() -> Decimal:
    ctx = getcontext().copy()
    ctx.prec = 40
    return ctx.ln(ctx.add(Decimal(1), ctx.sqrt(Decimal(2))))


LN_1_PLUS_SQRT2: Decimal = _high_precision_root()


def threshold_margin(x: float) -> float:
    """1 - sinh(x): positive below ln(1+sqrt(2)), zero there, negative above."""
    return 1.0 - math.sinh(x)


@dataclass(frozen=True)
class ThresholdReport:
    """The color-count cutoff (m-1)/ln(1+sqrt(2)) for an edge count m."""

    m: int
    root: Decimal
    threshold: Decimal
    coefficient: Decimal
    k_min: int


def threshold(m: int) -> ThresholdReport:
    """Least integer k strictly above (m-1)/ln(1+sqrt(2)).

    Warns if the threshold is within relative 1e-12 of an integer, where
    floor rounding would be at the mercy of the arithmetic.
    """
    if m < 1:
        raise PreconditionError("edge count must be at least 1")
    ctx = getcontext().copy()
    ctx.prec = 40
    root = LN_1_PLUS_SQRT2
    value = ctx.divide(Decimal(m - 1), root) if m > 1 else Decimal(0)
    coefficient = ctx.divide(Decimal(1), root)
    nearest = value.to_integral_value()
    if m > 1 and abs(value - nearest) / value < Decimal("1e-12"):
        warnings.warn(f"threshold {value} sits within 1e-12 of integer {nearest}", stacklevel=2)
    k_min = int(value) + 1  # int() truncates toward zero; value >= 0
    return ThresholdReport(m=m, root=root, threshold=value, coefficient=coefficient, k_min=k_min)


def difference_lower_bound(h: Hypergraph, lists: ListAssignment) -> tuple[int, float, bool]:
    """P(G, L) - P(G, k) against its closed-form floor.

    Returns (exact difference, D k^(n-r) (1 - sinh((m-1)/k)), verdict),
    where the verdict allows the float floor a 1e-9 tolerance.  Holds for
    every k >= 1 on a connected uniform hypergraph; no threshold assumption.
    """
    validate_assignment(lists, h)
    r = _require_uniform(h)
    if not is_connected(h):
        raise PreconditionError("difference bound needs a connected hypergraph")
    if lists.k < 1:
        raise PreconditionError("lists must be nonempty")
    k = lists.k
    actual = list_count_broken(h, lists) - chromatic_poly_broken(h).eval(k)
    deficiency = total_deficiency(h, lists)
    floor = deficiency * k ** (h.n - r) * threshold_margin((h.m - 1) / k)
    return actual, floor, actual >= floor - 1e-9
