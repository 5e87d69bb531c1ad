"""d-improper colorings of graphs via an auxiliary uniform hypergraph.

A coloring of a graph G is d-improper if every vertex has at most d
neighbors of its own color, i.e. each color class induces maximum degree
at most d.  Build the (d+2)-uniform hypergraph G_star on the same vertices
whose edges are the (d+2)-subsets inducing maximum degree exactly d+1 in G.
A coloring is d-improper on G iff it is proper on G_star, so improper
counts reduce to the machinery for uniform hypergraphs.  At d = 0 the
construction returns the edges of G itself.

G_star can be disconnected even for connected G; ``improper_threshold``
warns in that case since the threshold claim concerns connected instances.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from itertools import combinations, product

from .bounds import PreconditionError, ThresholdReport, threshold
from .chromatic import chromatic_poly_broken
from .hypergraph import (
    Hypergraph,
    InvalidHypergraphError,
    SizeLimitError,
    is_connected,
    validate,
)
from .listcount import ListAssignment, list_count_broken


@dataclass(frozen=True)
class StarHypergraph:
    """The derived (d+2)-uniform hypergraph together with its provenance."""

    hypergraph: Hypergraph
    d: int
    source: Hypergraph

    @property
    def p(self) -> int:
        """Number of derived hyperedges."""
        return self.hypergraph.m


def _require_graph(g: Hypergraph) -> None:
    validate(g)
    for i, e in enumerate(g.edges):
        if len(e) != 2:
            raise InvalidHypergraphError(f"edge {i} has size {len(e)}; a graph needs pairs")


def build_star(g: Hypergraph, d: int) -> StarHypergraph:
    """All (d+2)-subsets of vertices inducing maximum degree d+1, in lex order."""
    _require_graph(g)
    if d < 0:
        raise PreconditionError("impropriety bound must be nonnegative")
    adjacency = [0] * g.n
    for u, v in g.edges:
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
    edges = []
    for subset in combinations(range(g.n), d + 2):
        mask = 0
        for v in subset:
            mask |= 1 << v
        if any((adjacency[v] & mask).bit_count() == d + 1 for v in subset):
            edges.append(subset)
    star = Hypergraph(g.n, tuple(edges), d + 2)
    return StarHypergraph(hypergraph=star, d=d, source=g)


def improper_count_brute(g: Hypergraph, d: int, k: int) -> int:
    """Count d-improper colorings by checking same-color degrees directly."""
    _require_graph(g)
    if d < 0:
        raise PreconditionError("impropriety bound must be nonnegative")
    if k < 0:
        raise ValueError("color count must be nonnegative")
    if k > 1 and g.n * math.log2(k) > 25:
        raise SizeLimitError(f"{k}^{g.n} colorings exceed the brute-force budget")
    neighbors = [[] for _ in range(g.n)]
    for u, v in g.edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    count = 0
    for coloring in product(range(k), repeat=g.n):
        if all(
            sum(1 for u in neighbors[v] if coloring[u] == coloring[v]) <= d
            for v in range(g.n)
        ):
            count += 1
    return count


def improper_list_count_brute(g: Hypergraph, d: int, lists: ListAssignment) -> int:
    """List version of the direct count: colors drawn per-vertex from lists."""
    _require_graph(g)
    neighbors = [[] for _ in range(g.n)]
    for u, v in g.edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    choices = [lists.colors_of(v) for v in range(g.n)]
    count = 0
    for coloring in product(*choices):
        if all(
            sum(1 for u in neighbors[v] if coloring[u] == coloring[v]) <= d
            for v in range(g.n)
        ):
            count += 1
    return count


def improper_count_via_star(g: Hypergraph, d: int, k: int) -> int:
    """d-improper count as the chromatic polynomial of G_star evaluated at k."""
    star = build_star(g, d)
    return chromatic_poly_broken(star.hypergraph).eval(k)


def improper_list_count_via_star(g: Hypergraph, d: int, lists: ListAssignment) -> int:
    """d-improper list count as the list count of G_star."""
    star = build_star(g, d)
    return list_count_broken(star.hypergraph, lists)


def improper_threshold(g: Hypergraph, d: int) -> ThresholdReport:
    """Threshold for the strict-minimizer claim applied to G_star.

    Uses p = number of derived hyperedges.  Warns when G_star is
    disconnected (isolated vertices included), where the claim does not
    apply as stated.
    """
    star = build_star(g, d)
    if star.p == 0:
        raise PreconditionError("derived hypergraph has no edges")
    if not is_connected(star.hypergraph):
        warnings.warn(f"derived hypergraph is disconnected for d={d}", stacklevel=2)
    return threshold(star.p)
