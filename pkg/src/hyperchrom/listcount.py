"""Exact list-coloring counts via inclusion-exclusion and broken cycles.

A list assignment gives every vertex a set of k allowed colors drawn from a
universe 0..U-1; lists are stored as bitmasks.  P(G, L) counts colorings
that pick each vertex's color from its list with no monochromatic edge.

The subset term for an edge subset S is

    f(S) = (-1)^|S| * prod over components C of (V, S) of |common colors of C|,

isolated vertices included (each contributes a factor k).  Summing f over
all subsets gives P(G, L); summing over the broken-cycle-free family alone
gives the same value, since terms with a contained broken cycle cancel in
pairs.  ``list_count_brute`` enumerates colorings directly as ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .cycles import Stratification, broken_cycle_free_subsets
from .hypergraph import (
    FormatError,
    Hypergraph,
    InvalidHypergraphError,
    SizeLimitError,
    check_subset_budget,
)

_BRUTE_CHOICE_BUDGET = 1 << 25


class InvalidAssignmentError(InvalidHypergraphError):
    """A list assignment violates a structural invariant."""


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex color lists of common size k out of universe 0..U-1."""

    universe: int
    k: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "masks", tuple(self.masks))

    @classmethod
    def from_lists(cls, universe: int, lists: Iterable[Iterable[int]]) -> "ListAssignment":
        masks = []
        sizes = set()
        for colors in lists:
            colors = tuple(colors)
            mask = 0
            for c in colors:
                mask |= 1 << c
            masks.append(mask)
            sizes.add(mask.bit_count())
        if len(sizes) != 1:
            raise InvalidAssignmentError("lists must share one size")
        la = cls(universe, sizes.pop(), tuple(masks))
        validate_assignment(la)
        return la

    @classmethod
    def constant(cls, n: int, k: int, universe: int | None = None) -> "ListAssignment":
        """The assignment giving every vertex the same list {0, ..., k-1}."""
        u = k if universe is None else universe
        return cls(u, k, ((1 << k) - 1,) * n)

    @property
    def n(self) -> int:
        return len(self.masks)

    def is_constant(self) -> bool:
        return len(set(self.masks)) <= 1

    def colors_of(self, v: int) -> tuple[int, ...]:
        return tuple(c for c in range(self.universe) if self.masks[v] >> c & 1)


def validate_assignment(lists: ListAssignment, h: Hypergraph | None = None) -> None:
    """Check list sizes, universe bounds, and (optionally) the vertex count."""
    if lists.k < 0 or lists.universe < lists.k:
        raise InvalidAssignmentError(f"universe {lists.universe} cannot hold {lists.k}-lists")
    for v, mask in enumerate(lists.masks):
        if mask < 0 or mask >> lists.universe:
            raise InvalidAssignmentError(f"list of vertex {v} leaves the universe")
        if mask.bit_count() != lists.k:
            raise InvalidAssignmentError(f"list of vertex {v} has size {mask.bit_count()}, expected {lists.k}")
    if h is not None and h.n != lists.n:
        raise InvalidAssignmentError(f"assignment covers {lists.n} vertices, hypergraph has {h.n}")


def shared_colors(lists: ListAssignment, vertices: Iterable[int]) -> int:
    """Number of colors common to every list over a nonempty vertex set."""
    mask = -1
    empty = True
    for v in vertices:
        mask &= lists.masks[v]
        empty = False
    if empty:
        raise ValueError("vertex set must be nonempty")
    return mask.bit_count()


def edge_deficiency(h: Hypergraph, lists: ListAssignment, edge: int) -> int:
    """k minus the number of colors shared along edge ``edge``; 0 iff the lists agree there."""
    return lists.k - shared_colors(lists, h.edges[edge])


def total_deficiency(h: Hypergraph, lists: ListAssignment) -> int:
    """Sum of edge deficiencies over all edges."""
    return sum(edge_deficiency(h, lists, e) for e in range(h.m))


def _component_product(n: int, comps: Sequence[int], lists: ListAssignment) -> int:
    """Product of shared-color counts over components, isolated vertices included."""
    prod_val = 1
    covered = 0
    for comp in comps:
        inter = -1
        t = comp
        while t:
            b = t & -t
            inter &= lists.masks[b.bit_length() - 1]
            t ^= b
        covered |= comp
        prod_val *= inter.bit_count()
        if prod_val == 0:
            break
    if prod_val:
        for v in range(n):
            if not covered >> v & 1:
                prod_val *= lists.masks[v].bit_count()
    return prod_val


def inclusion_exclusion_term(h: Hypergraph, lists: ListAssignment, subset: int) -> int:
    """f(S) for one edge subset given as a bitmask."""
    comps: tuple[int, ...] = ()
    s = subset
    while s:
        bit = s & -s
        e = bit.bit_length() - 1
        comps = _merge(comps, h.edge_masks[e])
        s ^= bit
    sign = -1 if subset.bit_count() & 1 else 1
    return sign * _component_product(h.n, comps, lists)


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


def list_count_brute(h: Hypergraph, lists: ListAssignment) -> int:
    """Count list colorings by direct enumeration of all choice functions."""
    validate_assignment(lists, h)
    if lists.k > 1 and lists.k ** h.n > _BRUTE_CHOICE_BUDGET:
        raise SizeLimitError(f"{lists.k}^{h.n} choice functions exceed the brute-force budget")
    choices = [lists.colors_of(v) for v in range(h.n)]
    edges = h.edges
    count = 0
    for coloring in product(*choices):
        for e in edges:
            first = coloring[e[0]]
            if all(coloring[v] == first for v in e[1:]):
                break
        else:
            count += 1
    return count


def list_count_inclusion_exclusion(h: Hypergraph, lists: ListAssignment) -> int:
    """P(G, L) as the signed sum of f(S) over every edge subset."""
    validate_assignment(lists, h)
    check_subset_budget(h)
    return sum(inclusion_exclusion_term(h, lists, mask) for mask in range(1 << h.m))


def list_count_broken(
    h: Hypergraph,
    lists: ListAssignment,
    strata: Stratification | None = None,
) -> int:
    """P(G, L) as the sum of f(S) over the broken-cycle-free family.

    Pass a member-keeping :class:`~hyperchrom.cycles.Stratification` to reuse
    an existing enumeration across many assignments.
    """
    validate_assignment(lists, h)
    n = h.n
    if strata is not None and strata.members is not None:
        return sum(
            inclusion_exclusion_term(h, lists, mask)
            for masks in strata.members.values()
            for mask in masks
        )
    total = 0
    for mask, comps in broken_cycle_free_subsets(h):
        sign = -1 if mask.bit_count() & 1 else 1
        total += sign * _component_product(n, comps, lists)
    return total


def parse_lists(text: str) -> ListAssignment:
    """Read the list format: line 1 is ``n k U``, then one list per vertex.

    Each of the n following lines holds exactly k ascending color indices
    below U.  Lines starting with ``#`` are comments.
    """
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("empty input")
    header = lines[0].split()
    if len(header) != 3:
        raise FormatError(f"header must be 'n k U', got {lines[0]!r}")
    try:
        n, k, universe = (int(tok) for tok in header)
    except ValueError:
        raise FormatError(f"header must be three integers, got {lines[0]!r}") from None
    if len(lines) - 1 != n:
        raise FormatError(f"expected {n} list lines, found {len(lines) - 1}")
    masks = []
    for ln in lines[1:]:
        try:
            colors = [int(tok) for tok in ln.split()]
        except ValueError:
            raise FormatError(f"list line is not integers: {ln!r}") from None
        if len(colors) != k:
            raise FormatError(f"expected {k} colors per line, got {len(colors)}: {ln!r}")
        if any(a >= b for a, b in zip(colors, colors[1:])):
            raise FormatError(f"colors must be strictly ascending: {ln!r}")
        mask = 0
        for c in colors:
            mask |= 1 << c
        masks.append(mask)
    la = ListAssignment(universe, k, tuple(masks))
    validate_assignment(la)
    return la


def serialize_lists(lists: ListAssignment) -> str:
    """Inverse of :func:`parse_lists`."""
    lines = [f"{lists.n} {lists.k} {lists.universe}"]
    lines.extend(" ".join(str(c) for c in lists.colors_of(v)) for v in range(lists.n))
    return "\n".join(lines) + "\n"
