from __future__ import annotations

import logging

import pytest

from conftest import make
from corpus.families import build_group
from corpus.manifest import builtin_corpus
from realclass.perm import conjugate, inverse, perm_parse
from realclass.primes import is_two_power
from realclass.real_classes import (
    NotReal,
    NotTwoGroup,
    chillag_mann_square_condition,
    extended_centralizer,
    is_real,
    noncentral_real_2parts,
    real_class_data,
    real_elements,
    real_witness_2element,
    sylow2_real_central,
)
from realclass.structure import centralizer, sylow_subgroup


def brute_force_classes(G):
    """Full conjugation orbits and a direct x^g = x^-1 scan, no shared work."""
    elements = sorted(G.elements)
    out = []
    done = set()
    for x in elements:
        if x in done:
            continue
        orbit = frozenset(conjugate(x, g) for g in elements)
        done |= orbit
        x_inv = inverse(x)
        real = any(conjugate(x, g) == x_inv for g in elements)
        out.append((orbit, real))
    return out


def assert_matches_oracle(G):
    data = real_class_data(G)
    expected = sorted((len(orbit), min(orbit)) for orbit, real in brute_force_classes(G) if real)
    got = sorted((c.size, c.representative) for c in data.classes)
    assert got == expected
    oracle_members = {min(orbit): orbit for orbit, real in brute_force_classes(G) if real}
    for c in data.classes:
        assert c.members == oracle_members[c.representative]


@pytest.mark.parametrize(
    "family_args",
    [
        ("symmetric", 4),
        ("alternating", 5),
        ("dicyclic", 12),
        ("frobenius", 7, 3),
        ("frobenius", 13, 4),
        ("metacyclic", 8, 2, 3),
        ("metacyclic", 7, 3, 2),
    ],
)
def test_real_classes_match_brute_force(family_args):
    assert_matches_oracle(make(*family_args))


def test_sym3_real_data(sym3):
    data = real_class_data(sym3)
    assert data.sizes == (1, 2, 3)
    assert data.noncentral_sizes == (2, 3)
    assert data.rho_star == frozenset({2, 3})


def test_odd_order_group_has_only_trivial_real_class(frob21):
    data = real_class_data(frob21)
    assert data.sizes == (1,)
    assert real_elements(frob21) == frozenset({frob21.identity})
    assert data.rho_star == frozenset()


def test_cyclic_real_elements(c4):
    assert sorted(x.order() for x in real_elements(c4)) == [1, 2]
    assert not is_real(c4, next(x for x in c4 if x.order() == 4))


def test_extended_centralizer(sym3, q8):
    x = perm_parse("(1,2,3)", 3)
    E = extended_centralizer(sym3, x)
    assert E.order == 2 * centralizer(sym3, x).order
    t = perm_parse("(1,2)", 3)
    assert extended_centralizer(sym3, t).order == centralizer(sym3, t).order
    i = next(y for y in q8 if y.order() == 4)
    assert extended_centralizer(q8, i).order == 8


def test_real_witness_is_a_two_element(sym4):
    for c in real_class_data(sym4).classes:
        x = c.representative
        t = real_witness_2element(sym4, x)
        assert is_two_power(t.order())
        assert conjugate(x, t) == inverse(x)


def test_real_witness_rejects_non_real(c4):
    x = next(y for y in c4 if y.order() == 4)
    with pytest.raises(NotReal):
        real_witness_2element(c4, x)


def test_chillag_mann_square_condition(q8, sym4):
    # Q8: all squares of non-central elements are -1, and x Z = y Z fails for i, j.
    assert not chillag_mann_square_condition(q8)
    assert chillag_mann_square_condition(make("elementary_abelian", 2, 3))
    assert chillag_mann_square_condition(make("cyclic", 8))
    assert not chillag_mann_square_condition(sylow_subgroup(sym4, 2))
    with pytest.raises(NotTwoGroup):
        chillag_mann_square_condition(make("symmetric", 3))


@pytest.mark.parametrize(
    "family_args, central",
    [
        (("cyclic", 8), True),
        (("dicyclic", 8), False),
        (("frobenius", 7, 3), True),
        (("dicyclic", 12), True),
        (("symmetric", 4), False),
        (("metacyclic", 3, 4, 2), True),
    ],
)
def test_sylow2_real_central(family_args, central, caplog):
    G = make(*family_args)
    with caplog.at_level(logging.WARNING):
        assert sylow2_real_central(G) == central
    assert not caplog.records


def test_noncentral_real_2parts(sym3, sym4):
    assert noncentral_real_2parts(sym3) == frozenset({2, 1})
    assert noncentral_real_2parts(sym4) == frozenset({1, 2, 8})
    assert noncentral_real_2parts(make("cyclic", 6)) == frozenset()


@pytest.mark.slow
def test_real_classes_match_brute_force_across_corpus(cfg):
    checked = 0
    for spec in builtin_corpus(cfg):
        G = build_group(spec, cfg.element_cap)
        if G.order > 100:
            continue
        assert_matches_oracle(G)
        checked += 1
    assert checked > 100
