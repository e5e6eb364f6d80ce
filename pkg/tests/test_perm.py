from __future__ import annotations

from math import factorial

import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from conftest import make
from realclass.perm import (
    ClosureExceedsCap,
    CycleParseError,
    DegreeMismatch,
    Group,
    Permutation,
    closure,
    commutator,
    compose,
    conjugate,
    element_order,
    generate,
    identity,
    inverse,
    is_member,
    perm_format,
    perm_parse,
)

DEGREE = 6
Perms = st.permutations(range(DEGREE)).map(Permutation.from_images)


@given(Perms, Perms, Perms)
def test_compose_is_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(Perms)
def test_inverse_law(p):
    one = identity(DEGREE)
    assert compose(p, inverse(p)) == one
    assert compose(inverse(p), p) == one
    assert inverse(inverse(p)) == p


@given(Perms, Perms, Perms)
def test_conjugation_is_a_right_action(x, g, h):
    assert conjugate(conjugate(x, g), h) == conjugate(x, compose(g, h))


@given(Perms, Perms)
def test_commutator_definition(a, b):
    assert commutator(a, b) == inverse(a) * inverse(b) * a * b
    assert commutator(a, b).is_identity() == (a * b == b * a)


@given(Perms, st.integers(min_value=-7, max_value=13))
def test_power_matches_repeated_composition(p, k):
    expected = identity(DEGREE)
    step = p if k >= 0 else inverse(p)
    for _ in range(abs(k)):
        expected = compose(expected, step)
    assert p ** k == expected


@given(Perms)
def test_order_annihilates(p):
    n = element_order(p)
    assert (p ** n).is_identity()
    assert all(not (p ** k).is_identity() for k in range(1, n))


@given(Perms)
def test_format_parses_back(p):
    assert perm_parse(perm_format(p), DEGREE) == p


def test_compose_applies_left_first():
    a = perm_parse("(1,2)", 3)
    b = perm_parse("(2,3)", 3)
    assert perm_format(compose(a, b)) == "(1,3,2)"
    assert perm_format(compose(b, a)) == "(1,2,3)"


def test_parse_examples():
    assert perm_parse("(1,2,3)", 3).images == (1, 2, 0)
    assert perm_parse("(1,2)(4,5)", 5).images == (1, 0, 2, 4, 3)
    assert perm_parse("", 4) == identity(4)
    assert perm_parse("()", 4) == identity(4)
    assert perm_parse(" ( 1 , 3 ) ", 3).images == (2, 1, 0)
    assert perm_format(identity(5)) == "()"


@pytest.mark.parametrize(
    "text, token",
    [
        ("(1,2", "(1,2"),
        ("(1,1)", "1"),
        ("(0,1)", "0"),
        ("(1,4)", "4"),
        ("(1,a)", "a"),
        ("x(1,2)", "x"),
        ("(1,2)(2,3)", "2"),
    ],
)
def test_parse_errors_name_the_token(text, token):
    with pytest.raises(CycleParseError) as exc:
        perm_parse(text, 3)
    assert exc.value.token == token


def test_from_images_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation.from_images([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation.from_images([])


def test_compose_rejects_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(identity(3), identity(4))


def test_cycles_start_at_smallest_point():
    p = perm_parse("(3,1,2)(5,4)", 5)
    assert p.cycles() == [(0, 1, 2), (3, 4)]
    assert p.order() == 6


def test_closure_sizes():
    s3 = [perm_parse("(1,2)", 3), perm_parse("(1,2,3)", 3)]
    assert len(closure(s3, 3)) == 6
    assert closure([], 3) == frozenset({identity(3)})


def test_closure_is_idempotent(sym4):
    again = closure(sym4.elements, sym4.degree)
    assert again == sym4.elements


def test_closure_cap():
    gens = [perm_parse("(1,2)", 5), perm_parse("(1,2,3,4,5)", 5)]
    with pytest.raises(ClosureExceedsCap) as exc:
        closure(gens, 5, cap=10)
    assert exc.value.cap == 10
    assert len(closure(gens, 5, cap=120)) == 120


def test_generate_requires_generators():
    with pytest.raises(ValueError):
        generate([], 3)


def test_group_from_elements_recovers_generators(sym3):
    G = Group(3, elements=sym3.elements)
    assert closure(G.generators, 3) == sym3.elements
    assert G == sym3
    assert hash(G) == hash(sym3)


def test_sorted_elements_start_with_identity(sym4):
    assert sym4.sorted_elements[0] == sym4.identity
    assert list(sym4) == sorted(sym4.elements)
    assert len(sym4) == 24


def test_is_member(sym3):
    assert is_member(sym3, perm_parse("(1,3)", 3))
    with pytest.raises(DegreeMismatch):
        is_member(sym3, identity(4))


@pytest.mark.parametrize(
    "family_args",
    [("symmetric", 4), ("alternating", 5), ("dihedral", 12), ("dicyclic", 12), ("frobenius", 11, 5), ("psl2", 7)],
)
def test_orders_match_sympy(family_args):
    G = make(*family_args)
    oracle = PermutationGroup([SymPermutation(list(g.images)) for g in G.generators])
    assert G.order == oracle.order()


@settings(deadline=None)
@given(st.sampled_from([("symmetric", 4), ("dihedral", 10), ("dicyclic", 8)]), st.data())
def test_lagrange_for_cyclic_subgroups(family_args, data):
    G = make(*family_args)
    g = data.draw(st.sampled_from(G.sorted_elements))
    H = closure([g], G.degree)
    assert len(H) == g.order()
    assert G.order % len(H) == 0


@settings(deadline=None, max_examples=40)
@given(
    st.sampled_from(
        [
            ("symmetric", 4),
            ("alternating", 5),
            ("dihedral", 10),
            ("dicyclic", 8),
            ("frobenius", 7, 3),
            ("metacyclic", 9, 2, 8),
            ("elementary_abelian", 2, 3),
            ("psl2", 5),
        ]
    ),
    st.data(),
)
def test_subgroup_orders_divide_degree_factorial(family_args, data):
    G = make(*family_args)
    assert factorial(G.degree) % G.order == 0
    gens = data.draw(st.lists(st.sampled_from(G.sorted_elements), min_size=1, max_size=3))
    H = closure(gens, G.degree)
    assert factorial(G.degree) % len(H) == 0
    assert G.order % len(H) == 0
