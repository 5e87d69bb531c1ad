"""Hypergraph representation, component counting, and the edge-list text format.

A hypergraph is a vertex count n together with an ordered tuple of edges,
each edge a strictly ascending tuple of vertex indices.  Edge order is
significant: downstream broken-cycle computations fix the linear order
e_0 < e_1 < ... < e_{m-1} by position.

Edge subsets are plain ints used as bitmasks over edge indices (bit i set
means edge i is in the subset).  Component counts are always taken over the
full vertex set, so isolated vertices count as components.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

# Hard cap for any operation that enumerates edge subsets.
MAX_SUBSET_EDGES = 24


class HypergraphError(Exception):
    """Base class for errors raised by this package."""


class InvalidHypergraphError(HypergraphError):
    """An instance violates a structural invariant."""


class FormatError(HypergraphError):
    """A text input does not follow the edge-list format."""


class SizeLimitError(HypergraphError):
    """An operation would exceed its enumeration guard."""


@dataclass(frozen=True)
class Hypergraph:
    """Vertices 0..n-1 plus an ordered tuple of edges.

    ``r`` is the declared uniformity.  When not supplied it is filled in
    from the edges if they all share one size >= 2; it stays None for
    non-uniform or edgeless instances.  Construction does not validate;
    call :func:`validate` (or build through :meth:`from_edges` / parse).
    """

    n: int
    edges: tuple[tuple[int, ...], ...]
    r: int | None = None
    # vertex bitmask per edge, derived once; excluded from equality
    edge_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.r is None and edges:
            sizes = {len(e) for e in edges}
            if len(sizes) == 1 and (size := sizes.pop()) >= 2:
                object.__setattr__(self, "r", size)
        masks = tuple(_vertex_mask(e) for e in edges)
        object.__setattr__(self, "edge_masks", masks)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]], r: int | None = None) -> "Hypergraph":
        """Build with each edge sorted, then validate."""
        h = cls(n, tuple(tuple(sorted(e)) for e in edges), r)
        validate(h)
        return h

    @property
    def m(self) -> int:
        return len(self.edges)

    def full_mask(self) -> int:
        """Bitmask selecting every edge."""
        return (1 << self.m) - 1

    def uniformity(self) -> int:
        """The common edge size, or raise if the instance is not uniform."""
        if self.r is None:
            raise InvalidHypergraphError("hypergraph is not uniform")
        for i, e in enumerate(self.edges):
            if len(e) != self.r:
                raise InvalidHypergraphError(f"edge {i} has size {len(e)}, expected {self.r}")
        return self.r


@dataclass(frozen=True)
class ComponentLabeling:
    """Per-vertex component labels (0-based, in order of first occurrence)."""

    labels: tuple[int, ...]
    count: int


def _vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def validate(h: Hypergraph) -> None:
    """Check all structural invariants, raising on the first violation.

    Checks, in order per edge: indices in range, strictly ascending list,
    declared uniformity; then parallel edges across the whole instance.
    """
    if h.n < 0:
        raise InvalidHypergraphError(f"vertex count {h.n} is negative")
    if h.r is not None and h.r < 2:
        raise InvalidHypergraphError(f"uniformity {h.r} is below 2")
    seen: dict[tuple[int, ...], int] = {}
    for i, e in enumerate(h.edges):
        if not e:
            raise InvalidHypergraphError(f"edge {i} is empty")
        if any(v < 0 or v >= h.n for v in e):
            raise InvalidHypergraphError(f"edge {i} has a vertex outside [0, {h.n})")
        if any(a >= b for a, b in zip(e, e[1:])):
            raise InvalidHypergraphError(f"edge {i} is not strictly ascending")
        if h.r is not None and len(e) != h.r:
            raise InvalidHypergraphError(f"edge {i} has size {len(e)}, expected {h.r}")
        if e in seen:
            raise InvalidHypergraphError(f"edges {seen[e]} and {i} are parallel")
        seen[e] = i


def merge_component_masks(comps: tuple[int, ...], mask: int) -> tuple[int, ...]:
    """Fold one vertex mask into a tuple of disjoint component masks."""
    acc = mask
    rest = []
    for c in comps:
        if c & acc:
            acc |= c
        else:
            rest.append(c)
    rest.append(acc)
    return tuple(rest)


def subset_component_count(h: Hypergraph, subset: int) -> int:
    """c(V, S): components of (V, S) for an edge subset given as a bitmask."""
    comps: tuple[int, ...] = ()
    covered = 0
    s = subset
    while s:
        e = s & -s
        comps = merge_component_masks(comps, h.edge_masks[e.bit_length() - 1])
        covered |= h.edge_masks[e.bit_length() - 1]
        s ^= e
    return len(comps) + h.n - covered.bit_count()


def component_count(h: Hypergraph, subset: int | None = None) -> ComponentLabeling:
    """Components of (V, S); S defaults to the full edge set.

    Labels are assigned in order of first occurrence along 0..n-1, so the
    labeling is deterministic and independent of edge order.
    """
    if subset is None:
        subset = h.full_mask()
    comps: tuple[int, ...] = ()
    s = subset
    while s:
        e = s & -s
        comps = merge_component_masks(comps, h.edge_masks[e.bit_length() - 1])
        s ^= e
    mask_of = {}
    for c in comps:
        t = c
        while t:
            b = t & -t
            mask_of[b.bit_length() - 1] = c
            t ^= b
    labels = []
    next_label = 0
    assigned: dict[int, int] = {}
    for v in range(h.n):
        c = mask_of.get(v, 1 << v)
        if c not in assigned:
            assigned[c] = next_label
            next_label += 1
        labels.append(assigned[c])
    return ComponentLabeling(tuple(labels), next_label)


def is_connected(h: Hypergraph) -> bool:
    """True iff c(V, E) == 1.  A single isolated vertex is connected."""
    if h.n == 0:
        return False
    return subset_component_count(h, h.full_mask()) == 1


def parse(text: str) -> Hypergraph:
    """Read the edge-list format.

    Line 1 is ``n m``; the next m lines hold one edge each as space-separated
    ascending vertex indices.  Lines starting with ``#`` are comments.  The
    parsed instance is validated before being returned.
    """
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise FormatError(f"header must be two integers, got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            edges.append(tuple(int(tok) for tok in ln.split()))
        except ValueError:
            raise FormatError(f"edge line is not integers: {ln!r}") from None
    h = Hypergraph(n, tuple(edges))
    validate(h)
    return h


def serialize(h: Hypergraph) -> str:
    """Inverse of :func:`parse`, preserving edge order."""
    lines = [f"{h.n} {h.m}"]
    lines.extend(" ".join(str(v) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def sort_edges_lex(h: Hypergraph) -> Hypergraph:
    """Copy of h with edges re-sorted lexicographically.

    This changes the linear edge order that broken-cycle computations use;
    chromatic and list-count results are invariant under the change.
    """
    return Hypergraph(h.n, tuple(sorted(h.edges)), h.r)


def check_subset_budget(h: Hypergraph) -> None:
    """Guard for 2^m subset enumeration; raises beyond MAX_SUBSET_EDGES."""
    if h.m > MAX_SUBSET_EDGES:
        raise SizeLimitError(f"{h.m} edges exceeds the subset enumeration cap of {MAX_SUBSET_EDGES}")
