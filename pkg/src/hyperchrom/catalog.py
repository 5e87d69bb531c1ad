"""Small named instances and exhaustive instance generation.

The enumerator returns one representative per isomorphism class of
r-uniform hypergraphs on a fixed vertex count.  Classes are grown one edge
at a time: every class with m edges contains an extension of some class
with m - 1 edges, so extending canonical representatives by every possible
edge and re-canonicalizing is exhaustive.  Canonical form is the
lexicographically least relabeling over all vertex permutations, which is
affordable for n <= 7.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from .hypergraph import Hypergraph, is_connected


def single_edge(r: int = 3, n: int | None = None) -> Hypergraph:
    """One r-edge on vertices 0..r-1, optionally padded with isolated vertices."""
    return Hypergraph(r if n is None else n, (tuple(range(r)),))


def triangle() -> Hypergraph:
    return Hypergraph(3, ((0, 1), (0, 2), (1, 2)))


def graph_path(n: int) -> Hypergraph:
    return Hypergraph(n, tuple((i, i + 1) for i in range(n - 1)))


def graph_cycle(n: int) -> Hypergraph:
    edges = tuple(sorted(tuple(sorted((i, (i + 1) % n))) for i in range(n)))
    return Hypergraph(n, edges)


def complete_graph(n: int) -> Hypergraph:
    return Hypergraph(n, tuple(combinations(range(n), 2)))


def tight_path(edges: int, r: int = 3) -> Hypergraph:
    """r-uniform path whose consecutive edges overlap in one vertex."""
    out = []
    start = 0
    for _ in range(edges):
        out.append(tuple(range(start, start + r)))
        start += r - 1
    n = (r - 1) * edges + 1
    return Hypergraph(n, tuple(out))


def small_delta_cycle() -> Hypergraph:
    """3-uniform, 3 edges on 4 vertices; a minimal cyclic set."""
    return Hypergraph(4, ((0, 1, 2), (0, 1, 3), (0, 2, 3)))


def four_triples() -> Hypergraph:
    """All four 3-subsets of a 4-set."""
    return Hypergraph(4, tuple(combinations(range(4), 3)))


def _canonical(
    edge_set: frozenset[int], perm_tables: list[tuple[int, ...]]
) -> tuple[int, ...]:
    best = None
    for table in perm_tables:
        image = tuple(sorted(table[e] for e in edge_set))
        if best is None or image < best:
            best = image
    assert best is not None
    return best


def connected_uniform_hypergraphs(r: int, n: int, max_edges: int) -> list[Hypergraph]:
    """One instance per isomorphism class: r-uniform, n vertices, connected,
    no isolated vertices, 1..max_edges edges."""
    if n < r:
        return []
    all_edges = list(combinations(range(n), r))
    index_of = {e: i for i, e in enumerate(all_edges)}
    perm_tables = []
    for perm in permutations(range(n)):
        table = tuple(index_of[tuple(sorted(perm[v] for v in e))] for e in all_edges)
        perm_tables.append(table)

    classes: list[set[tuple[int, ...]]] = [{()}]
    for size in range(1, max_edges + 1):
        grown: set[tuple[int, ...]] = set()
        for rep in classes[size - 1]:
            present = frozenset(rep)
            for e in range(len(all_edges)):
                if e not in present:
                    grown.add(_canonical(present | {e}, perm_tables))
        classes.append(grown)

    out = []
    for size in range(1, max_edges + 1):
        for rep in sorted(classes[size]):
            h = Hypergraph(n, tuple(all_edges[e] for e in rep), r)
            if is_connected(h):
                out.append(h)
    return out


def connected_uniform_suite(r_values=(2, 3), max_n: int = 6, max_edges: int = 6) -> list[Hypergraph]:
    """Union of the per-(r, n) enumerations, n from r to max_n."""
    out = []
    for r in r_values:
        for n in range(r, max_n + 1):
            out.extend(connected_uniform_hypergraphs(r, n, max_edges))
    return out


def random_graph(n: int, p: float, rng: random.Random) -> Hypergraph:
    """Simple graph with each pair kept independently with probability p."""
    edges = tuple(e for e in combinations(range(n), 2) if rng.random() < p)
    return Hypergraph(n, edges)


def random_uniform_hypergraph(r: int, n: int, m: int, rng: random.Random) -> Hypergraph:
    """m distinct r-edges drawn uniformly; m is capped at the number available."""
    pool = list(combinations(range(n), r))
    m = min(m, len(pool))
    return Hypergraph(n, tuple(sorted(rng.sample(pool, m))), r)


def random_connected_uniform(r: int, n: int, m: int, rng: random.Random) -> Hypergraph:
    """Rejection-sample random_uniform_hypergraph until connected."""
    if m * (r - 1) < n - 1:
        raise ValueError(f"{m} edges of size {r} cannot connect {n} vertices")
    while True:
        h = random_uniform_hypergraph(r, n, m, rng)
        if is_connected(h):
            return h
