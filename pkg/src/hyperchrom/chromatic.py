"""Chromatic polynomials of hypergraphs by three independent routes.

A proper coloring assigns each vertex a color so that no edge is
monochromatic.  The three routes, which must agree exactly:

* ``chromatic_poly_whitney``:   full expansion over all 2^m edge subsets,
  sum of (-1)^|S| k^c(V,S).
* ``chromatic_poly_broken``:    the same sum restricted to subsets containing
  no broken cycle; all other terms cancel in pairs.
* ``chromatic_poly_stratified``: reconstruction from the stratum counts
  |B_i^j| alone.

``chromatic_count_brute`` counts colorings directly and serves as the ground
truth for evaluation at small k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .cycles import Stratification, broken_cycle_free_subsets, stratify
from .hypergraph import Hypergraph, SizeLimitError, check_subset_budget

# Guard for brute-force coloring: refuse when k^n exceeds 2^25 or so.
_BRUTE_LOG2_BUDGET = 25.0


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial stored as coefficients indexed by power."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_power_counts(cls, counts: dict[int, int]) -> "Polynomial":
        if not counts:
            return cls(())
        top = max(counts)
        return cls(tuple(counts.get(p, 0) for p in range(top + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, k: int) -> int:
        """Evaluate by Horner's rule; exact for integer k."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for p in range(self.degree, -1, -1):
            c = self.coeffs[p]
            if c == 0:
                continue
            term = "k" if p == 1 else f"k^{p}" if p else ""
            mag = abs(c)
            body = term if mag == 1 and p else f"{mag}*{term}" if p else f"{mag}"
            parts.append(("-" if c < 0 else "+", body))
        # leading term drops its sign when positive
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def chromatic_poly_whitney(h: Hypergraph) -> Polynomial:
    """Full subset expansion; the independent oracle for the other routes."""
    check_subset_budget(h)
    n = h.n
    edge_masks = h.edge_masks
    counts: dict[int, int] = {}
    # every node of this DFS is one subset, visited exactly once
    stack: list[tuple[int, int, tuple[int, ...]]] = [(0, 0, ())]
    while stack:
        start, size, comps = stack.pop()
        covered = 0
        for c in comps:
            covered += c.bit_count()
        j = len(comps) + n - covered
        counts[j] = counts.get(j, 0) + (-1) ** size
        for e in range(start, h.m):
            merged = _merge(comps, edge_masks[e])
            stack.append((e + 1, size + 1, merged))
    return Polynomial.from_power_counts(counts)


def _merge(comps: tuple[int, ...], mask: int) -> tuple[int, ...]:
    acc = mask
    rest = []
    for c in comps:
        if c & acc:
            acc |= c
        else:
            rest.append(c)
    rest.append(acc)
    return tuple(rest)


def chromatic_poly_broken(h: Hypergraph) -> Polynomial:
    """Signed sum over the broken-cycle-free family only."""
    n = h.n
    counts: dict[int, int] = {}
    for mask, comps in broken_cycle_free_subsets(h):
        covered = 0
        for c in comps:
            covered += c.bit_count()
        j = len(comps) + n - covered
        counts[j] = counts.get(j, 0) + (-1) ** mask.bit_count()
    return Polynomial.from_power_counts(counts)


def chromatic_poly_stratified(source: Hypergraph | Stratification) -> Polynomial:
    """Rebuild the polynomial from stratum counts: sum of (-1)^i |B_i^j| k^j."""
    strata = stratify(source) if isinstance(source, Hypergraph) else source
    counts: dict[int, int] = {}
    for (i, j), c in strata.counts.items():
        counts[j] = counts.get(j, 0) + (-1) ** i * c
    return Polynomial.from_power_counts(counts)


def chromatic_count_brute(h: Hypergraph, k: int) -> int:
    """Count proper colorings by direct enumeration of all k^n assignments."""
    if k < 0:
        raise ValueError("color count must be nonnegative")
    if k == 0:
        return 1 if h.n == 0 else 0
    if k > 1 and h.n * math.log2(k) > _BRUTE_LOG2_BUDGET:
        raise SizeLimitError(f"{k}^{h.n} colorings exceed the brute-force budget")
    edges = h.edges
    count = 0
    for coloring in product(range(k), repeat=h.n):
        for e in edges:
            first = coloring[e[0]]
            if all(coloring[v] == first for v in e[1:]):
                break
        else:
            count += 1
    return count
