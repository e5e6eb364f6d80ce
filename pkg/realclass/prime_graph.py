from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Iterable

from realclass.perm import Group, group_cached
from realclass.primes import prime_set
from realclass.real_classes import real_class_data


class ComponentBoundViolation(ValueError):
    def __init__(self, graph: PrimeGraph):
        super().__init__(f"Prime graph has {len(graph.components)} components, at most 2 expected: {graph.components}")
        self.graph = graph


@dataclass(frozen=True)
class PrimeGraph:
    """
    Vertices are primes, sorted. Edges are (p, q) with p < q, sorted.
    Components are sorted tuples; the one holding 2 comes first, the rest
    by smallest prime.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]


class UnionFind:
    def __init__(self):
        self.forest: dict[int, int] = {}

    def add(self, k: int) -> int:
        self.forest.setdefault(k, k)
        return k

    def find(self, k: int) -> int:
        self.add(k)
        root = k
        while root != self.forest[root]:
            root = self.forest[root]
        # path compression
        node = k
        while node != root:
            nxt = self.forest[node]
            self.forest[node] = root
            node = nxt
        return root

    def union(self, a: int, b: int) -> int:
        root_a, root_b = self.find(a), self.find(b)
        if root_a != root_b:
            # keep the smaller prime as root
            root_a, root_b = min(root_a, root_b), max(root_a, root_b)
            self.forest[root_b] = root_a
        return root_a

    def groups(self) -> list[tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for k in sorted(self.forest):
            out.setdefault(self.find(k), []).append(k)
        return [tuple(v) for v in out.values()]


def prime_graph_from_sizes(sizes: Iterable[int]) -> PrimeGraph:
    """Vertices: primes dividing some size. Edge p-q when pq divides a single size."""
    uf = UnionFind()
    edges: set[tuple[int, int]] = set()
    for s in sizes:
        primes = sorted(prime_set(s))
        for p in primes:
            uf.add(p)
        for p, q in combinations(primes, 2):
            edges.add((p, q))
            uf.union(p, q)
    components = sorted(uf.groups(), key=lambda c: (2 not in c, c[0]))
    return PrimeGraph(tuple(sorted(uf.forest)), tuple(sorted(edges)), tuple(components))


@group_cached
def delta_star(G: Group) -> PrimeGraph:
    """The prime graph on real class sizes of G."""
    return prime_graph_from_sizes(real_class_data(G).sizes)


def components_vertex_sets(graph: PrimeGraph) -> tuple[frozenset[int], frozenset[int] | None]:
    """(pi1, pi2); pi2 is None for a connected graph, pi1 holds 2 when 2 is a vertex."""
    comps = graph.components
    if len(comps) > 2:
        raise ComponentBoundViolation(graph)
    if len(comps) < 2:
        return frozenset(graph.vertices), None
    return frozenset(comps[0]), frozenset(comps[1])


def is_connected(graph: PrimeGraph) -> bool:
    return len(graph.components) <= 1


def is_subgraph(a: PrimeGraph, b: PrimeGraph) -> bool:
    return set(a.vertices) <= set(b.vertices) and set(a.edges) <= set(b.edges)


def is_complete(vertices: Iterable[int], graph: PrimeGraph) -> bool:
    chosen = sorted(set(vertices))
    if not set(chosen) <= set(graph.vertices):
        raise ValueError(f"{chosen} is not a subset of the vertices {list(graph.vertices)}")
    edges = set(graph.edges)
    return all(pair in edges for pair in combinations(chosen, 2))


def components_complete(graph: PrimeGraph) -> bool:
    """Every connected component is a clique."""
    return all(is_complete(c, graph) for c in graph.components)


def graph_to_json(graph: PrimeGraph) -> dict[str, Any]:
    return {
        "vertices": list(graph.vertices),
        "edges": [list(e) for e in graph.edges],
        "components": [list(c) for c in graph.components],
    }
