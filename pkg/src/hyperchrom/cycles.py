"""Delta-cycles, broken cycles, and the stratified broken-cycle-free family.

A delta-cycle is a minimal nonempty edge set F such that removing any single
edge of F leaves the component count of (V, F) unchanged.  For 2-uniform
hypergraphs these are exactly the edge sets of simple graph cycles.  A broken
cycle is a delta-cycle with its maximum edge (under the input edge order)
removed; every broken cycle therefore has at least 2 edges.

B(G) is the family of edge subsets containing no broken cycle.  Stratifying
B(G) by subset size i and component count j gives the coefficient table of
the chromatic polynomial:

    P(G, k) = sum over strata of (-1)^i |B_i^j| k^j.

Each delta-cycle of an r-uniform hypergraph has at most n - r + 2 edges:
dropping one edge leaves a delta-cycle-free set, which has at most n - r + 1
edges.  The default enumeration uses that cap; pass ``size_cap=None`` to
search every subset size instead (the two modes are cross-checked in tests).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .hypergraph import (
    Hypergraph,
    SizeLimitError,
    check_subset_budget,
    merge_component_masks,
    subset_component_count,
)


@dataclass(frozen=True)
class DeltaCycleFamily:
    """All delta-cycles of a hypergraph, as edge-index bitmasks.

    Members are listed in (size, mask) order, which is deterministic for a
    fixed edge order.
    """

    host: Hypergraph
    members: tuple[int, ...]


@dataclass(frozen=True)
class BrokenCycleFamily:
    """Distinct broken cycles plus, per member, the removed maximum edge.

    ``removed`` holds the index of the maximum edge of one witness
    delta-cycle (the first found) for each member.
    """

    host: Hypergraph
    members: tuple[int, ...]
    removed: tuple[int, ...]


@dataclass(frozen=True)
class Stratification:
    """Counts |B_i^j| of broken-cycle-free subsets by (size, components).

    ``members`` maps (i, j) to the subset bitmasks of that stratum when the
    stratification was built with ``keep_members=True``, else it is None.
    """

    n: int
    m: int
    r: int
    counts: dict[tuple[int, int], int]
    members: dict[tuple[int, int], tuple[int, ...]] | None = None

    def component_floor(self, i: int) -> int:
        """Least possible component count of an i-edge member: max(1, n - (r-1) i)."""
        return max(1, self.n - (self.r - 1) * i)

    def component_ceiling(self, i: int) -> int:
        """Greatest possible component count of a nonempty i-edge member: n - i + 2 - r."""
        return self.n - i + 2 - self.r

    def size_total(self, i: int) -> int:
        """|B_i|: members of size i across all component counts."""
        return sum(c for (s, _), c in self.counts.items() if s == i)

    def total(self) -> int:
        """|B(G)|."""
        return sum(self.counts.values())


def is_cyclic_set(h: Hypergraph, subset: int) -> bool:
    """True iff every edge of the nonempty subset is redundant for connectivity."""
    if subset == 0:
        raise ValueError("the empty set is not eligible")
    base = subset_component_count(h, subset)
    s = subset
    while s:
        bit = s & -s
        if subset_component_count(h, subset ^ bit) != base:
            return False
        s ^= bit
    return True


def delta_cycles(h: Hypergraph, size_cap: int | str | None = "auto") -> DeltaCycleFamily:
    """Enumerate all delta-cycles by increasing subset size.

    A candidate that contains a previously recorded delta-cycle cannot be
    minimal and is skipped before the cyclic test.  ``size_cap="auto"``
    limits candidates to n - r + 2 edges for uniform instances, which is
    exhaustive; ``None`` scans every size.
    """
    check_subset_budget(h)
    m = h.m
    if size_cap == "auto":
        cap = m if h.r is None else min(m, max(0, h.n - h.r + 2))
    elif size_cap is None:
        cap = m
    else:
        cap = min(m, int(size_cap))
    found: list[int] = []
    for size in range(1, cap + 1):
        for combo in combinations(range(m), size):
            mask = 0
            for e in combo:
                mask |= 1 << e
            if any(dc & mask == dc for dc in found):
                continue
            if is_cyclic_set(h, mask):
                found.append(mask)
    return DeltaCycleFamily(h, tuple(found))


def broken_cycles(h: Hypergraph, delta: DeltaCycleFamily | None = None) -> BrokenCycleFamily:
    """Delta-cycles minus their maximum edge, deduplicated.

    When two delta-cycles break to the same set, the first witness wins.
    """
    if delta is None:
        delta = delta_cycles(h)
    members: list[int] = []
    removed: list[int] = []
    seen: set[int] = set()
    for dc in delta.members:
        top = dc.bit_length() - 1
        broken = dc ^ (1 << top)
        if broken not in seen:
            seen.add(broken)
            members.append(broken)
            removed.append(top)
    return BrokenCycleFamily(h, tuple(members), tuple(removed))


def _rest_by_max(m: int, broken: tuple[int, ...]) -> list[list[int]]:
    """Group broken cycles by their maximum edge, keeping the remainder mask."""
    table: list[list[int]] = [[] for _ in range(m)]
    for b in broken:
        top = b.bit_length() - 1
        table[top].append(b ^ (1 << top))
    return table


def broken_cycle_free_subsets(
    h: Hypergraph, broken: BrokenCycleFamily | None = None
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield (mask, component masks) for every member of B(G).

    Subsets are grown edge by edge in index order; adding edge e is refused
    as soon as some broken cycle with maximum edge e has the rest of its
    edges already present.  Component masks cover only non-isolated
    vertices, so c(V, S) = len(comps) + n - (covered vertices).
    """
    check_subset_budget(h)
    if broken is None:
        broken = broken_cycles(h)
    m = h.m
    rest_by_max = _rest_by_max(m, broken.members)
    edge_masks = h.edge_masks

    stack: list[tuple[int, int, tuple[int, ...]]] = [(0, 0, ())]
    while stack:
        start, mask, comps = stack.pop()
        yield mask, comps
        for e in range(start, m):
            if any(rest & mask == rest for rest in rest_by_max[e]):
                continue
            stack.append((e + 1, mask | (1 << e), merge_component_masks(comps, edge_masks[e])))


def stratify(h: Hypergraph, keep_members: bool = False) -> Stratification:
    """Count B(G) members per (size, component count) stratum."""
    r = h.uniformity() if h.edges or h.r is not None else 2
    counts: dict[tuple[int, int], int] = {}
    members: dict[tuple[int, int], list[int]] | None = {} if keep_members else None
    n = h.n
    for mask, comps in broken_cycle_free_subsets(h):
        covered = 0
        for c in comps:
            covered += c.bit_count()
        key = (mask.bit_count(), len(comps) + n - covered)
        counts[key] = counts.get(key, 0) + 1
        if members is not None:
            members.setdefault(key, []).append(mask)
    frozen = None
    if members is not None:
        frozen = {key: tuple(v) for key, v in members.items()}
    return Stratification(n=n, m=h.m, r=r, counts=counts, members=frozen)
