from __future__ import annotations

from typing import Callable, Dict, List, Sequence, Union

from sympy import isprime, primitive_root
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup
from sympy.combinatorics.group_constructs import DirectProduct
from sympy.combinatorics.named_groups import (
    AbelianGroup,
    AlternatingGroup,
    CyclicGroup,
    DihedralGroup,
    SymmetricGroup,
)

from realclass.models import GroupSpec
from realclass.perm import Group, Permutation, generate, identity, perm_format, perm_parse

Param = Union[int, GroupSpec]


class FamilyParameterError(ValueError):
    pass


def _spec(name: str, degree: int, gens: Sequence[Permutation]) -> GroupSpec:
    return GroupSpec(name=name, degree=degree, generator_strings=tuple(perm_format(g) for g in gens), source="family")


def _label(family: str, *params: object) -> str:
    return f"{family}({','.join(str(p) for p in params)})"


def _from_sympy(name: str, G: PermutationGroup) -> GroupSpec:
    degree = G.degree
    gens = []
    for g in G.generators:
        images = list(g.array_form)
        gens.append(Permutation(tuple(images + list(range(len(images), degree)))))
    return _spec(name, degree, gens)


def _to_sympy(spec: GroupSpec) -> PermutationGroup:
    gens = [perm_parse(s, spec.degree) for s in spec.generator_strings] or [identity(spec.degree)]
    return PermutationGroup([SymPermutation(list(g.images), size=spec.degree) for g in gens])


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FamilyParameterError(message)


def cyclic(n: int) -> GroupSpec:
    _require(n >= 1, f"cyclic needs n >= 1, got {n}")
    return _from_sympy(_label("cyclic", n), CyclicGroup(n))


def dihedral(order: int) -> GroupSpec:
    """Dihedral group of the given order 2n."""
    _require(order >= 2 and order % 2 == 0, f"dihedral needs an even order >= 2, got {order}")
    return _from_sympy(_label("dihedral", order), DihedralGroup(order // 2))


def dicyclic(order: int) -> GroupSpec:
    """
    <a, x | a^2n = 1, x^2 = a^n, a^x = a^-1> of order 4n, in its regular
    representation on the words a^i x^j (point i + 2n*j).
    """
    _require(order >= 4 and order % 4 == 0, f"dicyclic needs an order divisible by 4, got {order}")
    n = order // 4
    m = 2 * n

    def point(i: int, j: int) -> int:
        return i % m + m * j

    def right_mult(k: int, l: int) -> Permutation:
        images = [0] * order
        for j in range(2):
            sign = -1 if j else 1
            for i in range(m):
                images[point(i, j)] = point(i + sign * k + (n if j and l else 0), (j + l) % 2)
        return Permutation(tuple(images))

    return _spec(_label("dicyclic", order), order, [right_mult(1, 0), right_mult(0, 1)])


def symmetric(n: int) -> GroupSpec:
    _require(n >= 1, f"symmetric needs n >= 1, got {n}")
    return _from_sympy(_label("symmetric", n), SymmetricGroup(n))


def alternating(n: int) -> GroupSpec:
    _require(n >= 1, f"alternating needs n >= 1, got {n}")
    return _from_sympy(_label("alternating", n), AlternatingGroup(n))


def elementary_abelian(p: int, k: int) -> GroupSpec:
    _require(isprime(p), f"elementary_abelian needs a prime, got {p}")
    _require(k >= 1, f"elementary_abelian needs rank >= 1, got {k}")
    return _from_sympy(_label("elementary_abelian", p, k), AbelianGroup(*[p] * k))


def frobenius(p: int, q: int) -> GroupSpec:
    """C_p x| C_q acting faithfully: x -> x + 1 and x -> r x with r of order q mod p."""
    _require(isprime(p), f"frobenius needs a prime p, got {p}")
    _require(q >= 2 and (p - 1) % q == 0, f"frobenius needs q > 1 dividing p - 1, got p={p}, q={q}")
    r = pow(int(primitive_root(p)), (p - 1) // q, p)
    translation = Permutation(tuple((i + 1) % p for i in range(p)))
    scaling = Permutation(tuple((r * i) % p for i in range(p)))
    return _spec(_label("frobenius", p, q), p, [translation, scaling])


def metacyclic(m: int, n: int, k: int) -> GroupSpec:
    """
    C_m x| C_n with b^-1 a b = a^k, regular on the words b^j a^i (point j*m + i):
    (j, i)(l, t) = (j + l, i*k^l + t).
    """
    _require(m >= 1 and n >= 1, f"metacyclic needs m, n >= 1, got m={m}, n={n}")
    _require(pow(k, n, m) == 1 % m, f"metacyclic needs k^n = 1 mod m, got m={m}, n={n}, k={k}")
    degree = m * n

    def right_mult(l: int, t: int) -> Permutation:
        kl = pow(k, l, m)
        images = [0] * degree
        for j in range(n):
            for i in range(m):
                images[j * m + i] = ((j + l) % n) * m + (i * kl + t) % m
        return Permutation(tuple(images))

    return _spec(_label("metacyclic", m, n, k), degree, [right_mult(0, 1), right_mult(1, 0)])


def psl2(p: int) -> GroupSpec:
    """PSL(2, p) on the projective line; point p stands for infinity."""
    _require(isprime(p) and p >= 5, f"psl2 needs a prime p >= 5, got {p}")
    inf = p
    t = Permutation(tuple([(i + 1) % p for i in range(p)] + [inf]))
    s_images = [inf] + [(p - pow(i, -1, p)) % p for i in range(1, p)] + [0]
    return _spec(_label("psl2", p), p + 1, [t, Permutation(tuple(s_images))])


def direct_product(a: GroupSpec, b: GroupSpec) -> GroupSpec:
    """Generators of a on points 1..deg(a), generators of b shifted past them."""
    G = DirectProduct(_to_sympy(a), _to_sympy(b))
    return _from_sympy(f"direct_product({a.name},{b.name})", G)


FAMILIES: Dict[str, tuple[int, Callable[..., GroupSpec]]] = {
    "cyclic": (1, cyclic),
    "dihedral": (1, dihedral),
    "dicyclic": (1, dicyclic),
    "symmetric": (1, symmetric),
    "alternating": (1, alternating),
    "elementary_abelian": (2, elementary_abelian),
    "frobenius": (2, frobenius),
    "metacyclic": (3, metacyclic),
    "psl2": (1, psl2),
}


def family(name: str, *params: Param) -> GroupSpec:
    if name == "direct_product":
        _require(
            len(params) == 2 and all(isinstance(p, GroupSpec) for p in params),
            f"direct_product takes two group specs, got {params!r}",
        )
        return direct_product(*params)  # type: ignore[arg-type]
    if name not in FAMILIES:
        raise FamilyParameterError(f"Unknown family {name!r}; known: {', '.join([*FAMILIES, 'direct_product'])}")
    arity, builder = FAMILIES[name]
    _require(len(params) == arity, f"{name} takes {arity} integer parameter(s), got {len(params)}")
    _require(all(isinstance(p, int) and not isinstance(p, bool) for p in params), f"{name} takes integers, got {params!r}")
    return builder(*params)


def family_from_tokens(tokens: Sequence[str]) -> GroupSpec:
    """
    Command-line family syntax, e.g. ["dihedral", "6"] or
    ["direct_product", "symmetric", "3", "cyclic", "2"].
    """
    spec, used = _parse_tokens(list(tokens), 0)
    if used != len(tokens):
        raise FamilyParameterError(f"Unexpected trailing tokens: {' '.join(tokens[used:])}")
    return spec


def _parse_tokens(tokens: List[str], pos: int) -> tuple[GroupSpec, int]:
    if pos >= len(tokens):
        raise FamilyParameterError("Missing family name")
    name = tokens[pos]
    pos += 1
    if name == "direct_product":
        a, pos = _parse_tokens(tokens, pos)
        b, pos = _parse_tokens(tokens, pos)
        return direct_product(a, b), pos
    if name not in FAMILIES:
        raise FamilyParameterError(f"Unknown family {name!r}")
    arity, _ = FAMILIES[name]
    raw = tokens[pos:pos + arity]
    if len(raw) < arity:
        raise FamilyParameterError(f"{name} takes {arity} integer parameter(s), got {raw}")
    try:
        params = [int(t) for t in raw]
    except ValueError:
        raise FamilyParameterError(f"{name} parameters must be integers, got {raw}") from None
    return family(name, *params), pos + arity


def build_group(spec: GroupSpec, cap: int | None = None) -> Group:
    gens = [perm_parse(s, spec.degree) for s in spec.generator_strings]
    return generate(gens or [identity(spec.degree)], spec.degree, cap)
