from __future__ import annotations

import pytest

from conftest import make
from realclass.prime_graph import (
    ComponentBoundViolation,
    UnionFind,
    components_complete,
    components_vertex_sets,
    delta_star,
    graph_to_json,
    is_complete,
    is_connected,
    is_subgraph,
    prime_graph_from_sizes,
)


def test_graph_from_sizes():
    g = prime_graph_from_sizes([1, 6, 5, 10, 7])
    assert g.vertices == (2, 3, 5, 7)
    assert g.edges == ((2, 3), (2, 5))
    assert g.components == ((2, 3, 5), (7,))


def test_empty_graph():
    g = prime_graph_from_sizes([1, 1])
    assert g.vertices == ()
    assert g.components == ()
    assert is_connected(g)
    assert components_vertex_sets(g) == (frozenset(), None)


def test_component_holding_two_comes_first():
    g = prime_graph_from_sizes([3, 4])
    assert g.components == ((2,), (3,))
    g = prime_graph_from_sizes([15, 7])
    assert g.components == ((3, 5), (7,))


def test_union_find_keeps_smallest_root():
    uf = UnionFind()
    uf.union(7, 5)
    uf.union(5, 3)
    uf.add(11)
    assert uf.find(7) == 3
    assert uf.groups() == [(3, 5, 7), (11,)]


def test_delta_star_examples(sym3, sym4, q8):
    g = delta_star(sym3)
    assert g.vertices == (2, 3)
    assert g.edges == ()
    assert len(g.components) == 2
    g = delta_star(sym4)
    assert g.edges == ((2, 3),)
    assert len(g.components) == 1
    assert delta_star(q8).vertices == (2,)


def test_delta_star_of_frobenius_5_4():
    g = delta_star(make("frobenius", 5, 4))
    assert g.vertices == (2, 5)
    assert not is_connected(g)
    assert components_vertex_sets(g) == (frozenset({2}), frozenset({5}))


def test_component_bound_violation_carries_graph():
    g = prime_graph_from_sizes([2, 3, 5])
    with pytest.raises(ComponentBoundViolation) as exc:
        components_vertex_sets(g)
    assert exc.value.graph is g


def test_subgraph_and_complete():
    small = prime_graph_from_sizes([6])
    big = prime_graph_from_sizes([6, 10, 15])
    assert is_subgraph(small, big)
    assert not is_subgraph(big, small)
    assert is_complete([2, 3, 5], big)
    assert not is_complete([2, 3, 5], prime_graph_from_sizes([6, 5]))
    with pytest.raises(ValueError):
        is_complete([7], big)


def test_components_complete():
    assert components_complete(prime_graph_from_sizes([2, 15]))
    # 3-5 and 3-7 but no 5-7 edge
    assert not components_complete(prime_graph_from_sizes([2, 15, 21]))
    assert components_complete(prime_graph_from_sizes([1]))


def test_graph_to_json(sym3):
    assert graph_to_json(delta_star(sym3)) == {"vertices": [2, 3], "edges": [], "components": [[2], [3]]}
