from __future__ import annotations

import logging
from dataclasses import dataclass

from realclass.perm import Group, Permutation, compose, conjugate, group_cached, inverse
from realclass.primes import is_two_power, p_part, p_prime_part, prime_set
from realclass.structure import (
    ConjugacyClass,
    Subgroup,
    center,
    centralizer,
    class_of,
    conjugacy_classes,
    first_matching,
    sylow_subgroup,
)

logger = logging.getLogger(__name__)


class NotReal(ValueError):
    pass


class NotTwoGroup(ValueError):
    pass


@dataclass(frozen=True)
class RealClassData:
    classes: tuple[ConjugacyClass, ...]
    sizes: tuple[int, ...]
    noncentral_sizes: tuple[int, ...]
    rho_star: frozenset[int]


def is_real(G: Group, x: Permutation) -> bool:
    """x is conjugate in G to its inverse."""
    return class_of(G, x).is_real


@group_cached
def real_elements(G: Group) -> frozenset[Permutation]:
    return frozenset(m for c in conjugacy_classes(G) if c.is_real for m in c.members)


@group_cached
def real_class_data(G: Group) -> RealClassData:
    classes = tuple(c for c in conjugacy_classes(G) if c.is_real)
    sizes = tuple(c.size for c in classes)
    rho: set[int] = set()
    for s in sizes:
        rho |= prime_set(s)
    return RealClassData(
        classes=classes,
        sizes=sizes,
        noncentral_sizes=tuple(s for s in sizes if s > 1),
        rho_star=frozenset(rho),
    )


@group_cached
def extended_centralizer(G: Group, x: Permutation) -> Subgroup:
    """C*_G(x) = {g : x^g is x or x^-1}; contains C_G(x) with index 1 or 2."""
    class_of(G, x)
    x_inv = inverse(x)
    targets = {x, x_inv}
    elements = frozenset(g for g in G.elements if conjugate(x, g) in targets)
    C = centralizer(G, x)
    ratio, rem = divmod(len(elements), C.order)
    if rem or ratio not in (1, 2) or not C.elements <= elements:
        raise RuntimeError(f"Extended centralizer of {x} has order {len(elements)} over |C| = {C.order}")
    return Subgroup(G, elements)


def real_witness_2element(G: Group, x: Permutation) -> Permutation:
    """A 2-element t with x^t = x^-1: the odd-part power of any inverting element."""
    if not is_real(G, x):
        raise NotReal(f"{x} is not real in the group of order {G.order}")
    x_inv = inverse(x)
    g = first_matching(G, lambda g: conjugate(x, g) == x_inv)
    if g is None:
        raise RuntimeError(f"No inverting element found for real element {x}")
    return g ** p_prime_part(g.order(), 2)


def chillag_mann_square_condition(S: Group) -> bool:
    """For a 2-group S: x^2 = y^2 forces xZ(S) = yZ(S)."""
    if not is_two_power(S.order):
        raise NotTwoGroup(f"Expected a 2-group, got order {S.order}")
    Z = center(S).elements
    first_with_square: dict[Permutation, Permutation] = {}
    for x in S.sorted_elements:
        y = first_with_square.setdefault(compose(x, x), x)
        if compose(inverse(y), x) not in Z:
            return False
    return True


@group_cached
def sylow2_real_central(G: Group) -> bool:
    """Real(S) <= Z(S) for a Sylow 2-subgroup S."""
    S = sylow_subgroup(G, 2)
    inside = real_elements(S) <= center(S).elements
    if inside != chillag_mann_square_condition(S):
        logger.warning("Square criterion disagrees with Real(S) <= Z(S) on a 2-group of order %d", S.order)
    return inside


@group_cached
def noncentral_real_2parts(G: Group) -> frozenset[int]:
    """The set of 2-parts of the real class sizes above 1."""
    return frozenset(p_part(s, 2) for s in real_class_data(G).noncentral_sizes)
