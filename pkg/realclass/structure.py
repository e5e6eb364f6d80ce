from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from realclass.perm import (
    Group,
    NotInGroup,
    Permutation,
    closure,
    commutator,
    compose,
    conjugate,
    group_cached,
    inverse,
)
from realclass.primes import is_p_power, p_part, p_prime_part, require_prime

logger = logging.getLogger(__name__)

NORMAL_SUBGROUP_CAP = 512


class NotNormal(ValueError):
    pass


class Subgroup(Group):
    """A subgroup of `parent`, given by its element set."""

    def __init__(
        self,
        parent: Group,
        elements: frozenset[Permutation],
        generators: tuple[Permutation, ...] | None = None,
    ):
        super().__init__(parent.degree, generators, elements=elements, cap=parent.cap)
        self.parent = parent


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    members: frozenset[Permutation]
    size: int
    is_real: bool


@dataclass(frozen=True)
class NormalScan:
    subgroups: tuple[Subgroup, ...]
    sampled: bool


@dataclass(frozen=True)
class CompositionFactorFingerprint:
    order: int
    abelian: bool
    class_size_multiset: tuple[int, ...]


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    class_size_multiset: tuple[int, ...]
    abelianization_order: int


@dataclass(frozen=True, eq=False)
class Quotient:
    """
    G/N as a permutation group on the cosets of N.

    Coset k is N * representatives[k]; representatives[0] is the identity.
    A quotient element q maps coset 0 to coset q.images[0], so that index
    names the coset q stands for.
    """

    group: Group
    kernel: Group
    representatives: tuple[Permutation, ...]
    coset_index: Mapping[Permutation, int]

    def project(self, g: Permutation) -> Permutation:
        idx = self.coset_index
        return Permutation(tuple(idx[compose(r, g)] for r in self.representatives))

    def coset(self, q: Permutation) -> frozenset[Permutation]:
        rep = self.representatives[q.images[0]]
        return frozenset(compose(n, rep) for n in self.kernel.elements)


def _require_member(G: Group, x: Permutation) -> None:
    if x not in G.elements:
        raise NotInGroup(f"{x} is not an element of the group")


def trivial_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, frozenset({G.identity}), (G.identity,))


def whole(G: Group) -> Subgroup:
    return Subgroup(G, G.elements, G.generators)


def subgroup(G: Group, generators: Iterable[Permutation]) -> Subgroup:
    gens = tuple(generators)
    for g in gens:
        _require_member(G, g)
    return Subgroup(G, closure(gens, G.degree, G.order), gens or None)


def index(G: Group, H: Group) -> int:
    return G.order // H.order


def is_abelian(G: Group) -> bool:
    gens = G.generators
    return all(compose(a, b) == compose(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])


@group_cached
def centralizer(G: Group, x: Permutation) -> Subgroup:
    _require_member(G, x)
    return Subgroup(G, frozenset(g for g in G.elements if compose(g, x) == compose(x, g)))


@group_cached
def center(G: Group) -> Subgroup:
    gens = G.generators
    return Subgroup(G, frozenset(g for g in G.elements if all(compose(g, s) == compose(s, g) for s in gens)))


def is_central(G: Group, x: Permutation) -> bool:
    return all(compose(x, s) == compose(s, x) for s in G.generators)


@group_cached
def conjugacy_classes(G: Group) -> tuple[ConjugacyClass, ...]:
    """Classes sorted by (size, representative); each representative is its class's smallest element."""
    gens = G.generators
    seen: set[Permutation] = set()
    classes: list[ConjugacyClass] = []
    for x in G.sorted_elements:
        if x in seen:
            continue
        orbit = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for g in gens:
                z = conjugate(y, g)
                if z not in orbit:
                    orbit.add(z)
                    stack.append(z)
        seen |= orbit
        members = frozenset(orbit)
        classes.append(ConjugacyClass(x, members, len(members), inverse(x) in members))
    classes.sort(key=lambda c: (c.size, c.representative))
    logger.debug("%d conjugacy classes in a group of order %d", len(classes), G.order)
    return tuple(classes)


@group_cached
def _class_index(G: Group) -> dict[Permutation, ConjugacyClass]:
    return {m: c for c in conjugacy_classes(G) for m in c.members}


def class_of(G: Group, x: Permutation) -> ConjugacyClass:
    _require_member(G, x)
    return _class_index(G)[x]


def class_size(G: Group, x: Permutation) -> int:
    return class_of(G, x).size


def normal_closure(G: Group, seed: Iterable[Permutation]) -> Subgroup:
    return _normal_closure(G, frozenset(seed))


@group_cached
def _normal_closure(G: Group, seed: frozenset[Permutation]) -> Subgroup:
    for s in seed:
        _require_member(G, s)
    gens = sorted(s for s in seed if not s.is_identity())
    elements = closure(gens, G.degree, G.order)
    pending = list(gens)
    while pending:
        h = pending.pop()
        for g in G.generators:
            c = conjugate(h, g)
            if c not in elements:
                gens.append(c)
                pending.append(c)
                elements = closure(gens, G.degree, G.order)
    return Subgroup(G, elements, tuple(gens) or None)


def is_normal(G: Group, H: Group) -> bool:
    if not H.elements <= G.elements:
        return False
    return all(conjugate(h, g) in H.elements for h in H.generators for g in G.generators)


@group_cached
def derived_subgroup(G: Group) -> Subgroup:
    gens = G.generators
    return normal_closure(G, {commutator(a, b) for a in gens for b in gens})


@group_cached
def derived_series(G: Group) -> tuple[Subgroup, ...]:
    series = [whole(G)]
    current: Group = G
    while True:
        D = derived_subgroup(current)
        if D.order == current.order:
            break
        series.append(Subgroup(G, D.elements, D.generators))
        current = D
    return tuple(series)


def is_solvable(G: Group) -> bool:
    return derived_series(G)[-1].order == 1


@group_cached
def normalizer(G: Group, H: Group) -> Subgroup:
    gens = H.generators
    members = H.elements
    return Subgroup(G, frozenset(g for g in G.elements if all(conjugate(h, g) in members for h in gens)))


@group_cached
def sylow_subgroup(G: Group, p: int) -> Subgroup:
    """
    A Sylow p-subgroup, grown one step at a time: from P < Sylow, some
    y in N_G(P) outside P has y^p in P, and <P, y> is a larger p-group.
    """
    require_prime(p)
    target = p_part(G.order, p)
    if target == 1:
        return trivial_subgroup(G)
    x = next(g for g in G.sorted_elements if g.order() == p)
    P = subgroup(G, [x])
    while P.order < target:
        N = normalizer(G, P)
        y = next(g for g in N.sorted_elements if g not in P.elements and (g ** p) in P.elements)
        P = subgroup(G, (*P.generators, y))
    logger.debug("Sylow %d-subgroup of order %d", p, P.order)
    return P


def is_p_closed(G: Group, p: int) -> bool:
    return is_normal(G, sylow_subgroup(G, p))


def is_p_nilpotent(G: Group, p: int) -> bool:
    return o_lower(G, p).order == p_prime_part(G.order, p)


@group_cached
def o_upper(G: Group, p: int) -> Subgroup:
    """O^{p'}(G): the normal closure of a Sylow p-subgroup."""
    return normal_closure(G, sylow_subgroup(G, p).generators)


@group_cached
def o_lower(G: Group, p: int) -> Subgroup:
    """O_{p'}(G): generated by the p'-elements whose normal closure is a p'-group."""
    seed = []
    for c in conjugacy_classes(G):
        x = c.representative
        if x.is_identity() or x.order() % p == 0:
            continue
        if normal_closure(G, [x]).order % p != 0:
            seed.append(x)
    return normal_closure(G, seed)


@group_cached
def o_p(G: Group, p: int) -> Subgroup:
    """O_p(G): the intersection of the conjugates of a Sylow p-subgroup."""
    P = sylow_subgroup(G, p)
    core = set(P.elements)
    for g in G.sorted_elements:
        if len(core) == 1:
            break
        g_inv = inverse(g)
        core = {x for x in core if conjugate(x, g_inv) in P.elements}
    return Subgroup(G, frozenset(core))


@group_cached
def quotient(G: Group, N: Group) -> Quotient:
    if not is_normal(G, N):
        raise NotNormal(f"Subgroup of order {N.order} is not normal in the group of order {G.order}")
    coset_index: dict[Permutation, int] = {}
    reps: list[Permutation] = []
    for g in G.sorted_elements:
        if g in coset_index:
            continue
        k = len(reps)
        reps.append(g)
        for n in N.elements:
            coset_index[compose(n, g)] = k
    representatives = tuple(reps)

    def project(g: Permutation) -> Permutation:
        return Permutation(tuple(coset_index[compose(r, g)] for r in representatives))

    gens = tuple(dict.fromkeys(project(s) for s in G.generators))
    elements = frozenset(project(r) for r in representatives)
    group = Group(len(representatives), gens, elements=elements, cap=G.cap)
    return Quotient(group, N, representatives, coset_index)


def class_size_divides(G: Group, N: Group, x: Permutation) -> tuple[bool, bool]:
    """
    (|x^N| divides |x^G|, |(Nx)^(G/N)| divides |x^G|). The first part is
    vacuously true when x lies outside N.
    """
    if not is_normal(G, N):
        raise NotNormal(f"Subgroup of order {N.order} is not normal")
    size = class_size(G, x)
    first = True if x not in N.elements else size % class_size(N, x) == 0
    Q = quotient(G, N)
    second = size % class_size(Q.group, Q.project(x)) == 0
    return first, second


def _subgroup_key(H: Group) -> tuple:
    return (H.order, H.encoding)


def _join(G: Group, A: Group, B: Group) -> Subgroup:
    """AB for normal A and B: the product set is already a subgroup."""
    elements = frozenset(compose(a, b) for a in A.elements for b in B.elements)
    gens = tuple(dict.fromkeys(g for g in (*A.generators, *B.generators) if not g.is_identity()))
    return Subgroup(G, elements, gens or None)


@group_cached
def normal_closures_of_classes(G: Group) -> tuple[Subgroup, ...]:
    found: dict[frozenset[Permutation], Subgroup] = {}
    for c in conjugacy_classes(G):
        N = normal_closure(G, [c.representative])
        found.setdefault(N.elements, N)
    return tuple(sorted(found.values(), key=_subgroup_key))


@group_cached
def normal_subgroups(G: Group, cap: int = NORMAL_SUBGROUP_CAP) -> NormalScan:
    """
    Every normal subgroup is a product of normal closures of classes, so a
    breadth-first search over joins enumerates them all. Stops at `cap`
    and reports the scan as sampled.
    """
    base = normal_closures_of_classes(G)
    start = trivial_subgroup(G)
    found: dict[frozenset[Permutation], Subgroup] = {start.elements: start}
    queue = deque([start])
    sampled = False
    while queue and not sampled:
        N = queue.popleft()
        for B in base:
            if B.elements <= N.elements:
                continue
            J = _join(G, N, B)
            if J.elements in found:
                continue
            if len(found) >= cap:
                sampled = True
                break
            found[J.elements] = J
            queue.append(J)
    if sampled:
        logger.warning("Normal subgroup scan stopped at %d subgroups (group order %d)", cap, G.order)
    return NormalScan(tuple(sorted(found.values(), key=_subgroup_key)), sampled)


def _largest_first(candidates: Iterable[Subgroup]) -> Subgroup:
    return min(candidates, key=lambda H: (-H.order, H.encoding))


@group_cached
def maximal_normal_subgroup(G: Group) -> Subgroup | None:
    """A maximal proper normal subgroup, chosen greedily; None for the trivial group."""
    if G.order == 1:
        return None
    base = normal_closures_of_classes(G)
    M = _largest_first(B for B in base if B.order < G.order)
    while True:
        grown = [
            J
            for J in (_join(G, M, B) for B in base if not B.elements <= M.elements)
            if J.order < G.order
        ]
        if not grown:
            return M
        M = _largest_first(grown)


def factor_fingerprint(G: Group) -> CompositionFactorFingerprint:
    sizes = tuple(sorted(c.size for c in conjugacy_classes(G)))
    return CompositionFactorFingerprint(G.order, is_abelian(G), sizes)


@group_cached
def composition_factors(G: Group) -> tuple[CompositionFactorFingerprint, ...]:
    """Fingerprints of the factors of one composition series, as a sorted multiset."""
    factors: list[CompositionFactorFingerprint] = []
    H: Group = G
    while H.order > 1:
        M = maximal_normal_subgroup(H)
        assert M is not None
        factors.append(factor_fingerprint(H if M.order == 1 else quotient(H, M).group))
        H = M
    return tuple(sorted(factors, key=lambda f: (f.order, f.abelian, f.class_size_multiset)))


def has_sl32_factor(G: Group) -> bool:
    """True when some composition factor is nonabelian of order 168, i.e. PSL(2,7)."""
    return any(not f.abelian and f.order == 168 for f in composition_factors(G))


def is_p_solvable(G: Group, p: int) -> bool:
    """Every composition factor is a p-group or a p'-group."""
    return all(is_p_power(f.order, p) or f.order % p != 0 for f in composition_factors(G))


@group_cached
def group_fingerprint(G: Group) -> GroupFingerprint:
    sizes = tuple(sorted(c.size for c in conjugacy_classes(G)))
    return GroupFingerprint(G.order, sizes, G.order // derived_subgroup(G).order)


def fingerprint_consistent(G: Group, H: Group) -> bool:
    """Necessary for an isomorphism, not sufficient."""
    return group_fingerprint(G) == group_fingerprint(H)


def first_matching(G: Group, predicate: Callable[[Permutation], bool]) -> Permutation | None:
    return next((g for g in G.sorted_elements if predicate(g)), None)
