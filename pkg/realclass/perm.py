from __future__ import annotations

import logging
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property, wraps
from typing import Any, Callable, Iterable, Iterator, Sequence, TypeVar

from realclass.primes import lcm_all

logger = logging.getLogger(__name__)

# Elements are materialized exhaustively; this is the desk-scale ceiling.
DEFAULT_CAP = 1_000_000

_CYCLE_RE = re.compile(r"\(([^()]*)\)")

T = TypeVar("T")


class CycleParseError(ValueError):
    def __init__(self, token: str, reason: str):
        super().__init__(f"Bad cycle notation at {token!r}: {reason}")
        self.token = token


class DegreeMismatch(ValueError):
    pass


class NotInGroup(ValueError):
    pass


class ClosureExceedsCap(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"Group closure produced more than {cap} elements")
        self.cap = cap


@dataclass(frozen=True, order=True)
class Permutation:
    """
    A bijection on 0..degree-1, images[i] is the image of point i.

    Composition convention: a * b applies a first, then b. Conjugation
    x^g = g^-1 * x * g is then a right action: (x^g)^h = x^(g*h).
    """

    images: tuple[int, ...]

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        t = tuple(int(i) for i in images)
        if not t:
            raise ValueError("A permutation needs degree >= 1")
        if sorted(t) != list(range(len(t))):
            raise ValueError(f"Not a bijection on 0..{len(t) - 1}: {list(t)}")
        return cls(t)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else inverse(self)
        k = abs(k)
        result = identity(self.degree)
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.images))

    def order(self) -> int:
        return element_order(self)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 0-based, each starting at its smallest point."""
        seen: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        return perm_format(self)


def identity(degree: int) -> Permutation:
    if degree < 1:
        raise ValueError(f"Degree must be positive, got {degree}")
    return Permutation(tuple(range(degree)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply a first, then b."""
    if len(a.images) != len(b.images):
        raise DegreeMismatch(f"Cannot compose degree {a.degree} with degree {b.degree}")
    bi = b.images
    return Permutation(tuple(bi[i] for i in a.images))


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p.images)
    for i, image in enumerate(p.images):
        out[image] = i
    return Permutation(tuple(out))


def element_order(p: Permutation) -> int:
    return lcm_all(len(c) for c in p.cycles())


def conjugate(x: Permutation, g: Permutation) -> Permutation:
    """x^g = g^-1 x g."""
    return compose(compose(inverse(g), x), g)


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """[a, b] = a^-1 b^-1 a b."""
    return compose(compose(inverse(a), inverse(b)), compose(a, b))


def perm_parse(text: str, degree: int) -> Permutation:
    """
    Parse disjoint-cycle notation over 1-based points, e.g. "(1,2,3)(4,5)".
    "" and "()" denote the identity.
    """
    if degree < 1:
        raise ValueError(f"Degree must be positive, got {degree}")
    images = list(range(degree))
    used: set[int] = set()
    pos = 0
    stripped = text.strip()
    for m in _CYCLE_RE.finditer(stripped):
        gap = stripped[pos:m.start()]
        if gap.strip():
            raise CycleParseError(gap.strip(), "text outside a cycle")
        pos = m.end()
        body = m.group(1).strip()
        if not body:
            continue
        points: list[int] = []
        for tok in body.split(","):
            tok = tok.strip()
            if not tok.isdigit():
                raise CycleParseError(tok or m.group(0), "expected a positive integer point")
            point = int(tok)
            if point < 1 or point > degree:
                raise CycleParseError(tok, f"point outside 1..{degree}")
            if point in used:
                raise CycleParseError(tok, "point repeated")
            used.add(point)
            points.append(point - 1)
        for i, src in enumerate(points):
            images[src] = points[(i + 1) % len(points)]
    rest = stripped[pos:]
    if rest.strip():
        raise CycleParseError(rest.strip(), "text outside a cycle")
    return Permutation(tuple(images))


def perm_format(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cycles)


def closure(generators: Iterable[Permutation], degree: int, cap: int = DEFAULT_CAP) -> frozenset[Permutation]:
    """Breadth-first closure of the identity under right multiplication by the generators."""
    gens = tuple(generators)
    one = identity(degree)
    seen = {one}
    queue = deque([one])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(g, s)
            if h not in seen:
                if len(seen) >= cap:
                    raise ClosureExceedsCap(cap)
                seen.add(h)
                queue.append(h)
    return frozenset(seen)


def small_generating_set(elements: Iterable[Permutation], degree: int) -> tuple[Permutation, ...]:
    """Greedy generators: scan elements in sorted order, keep those outside the current span."""
    ordered = sorted(elements)
    gens: list[Permutation] = []
    span: frozenset[Permutation] = frozenset({identity(degree)})
    for g in ordered:
        if g not in span:
            gens.append(g)
            span = closure(gens, degree, len(ordered))
    return tuple(gens) or (identity(degree),)


class Group:
    """
    A permutation group on points 0..degree-1.

    The element set is materialized on first access (exhaustive closure, capped).
    Groups are treated as immutable once built; `cache` memoizes derived data.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation] | None = None,
        *,
        elements: frozenset[Permutation] | None = None,
        cap: int | None = None,
    ):
        if degree < 1:
            raise ValueError(f"Degree must be positive, got {degree}")
        if generators is not None:
            generators = tuple(generators)
            for g in generators:
                if g.degree != degree:
                    raise DegreeMismatch(f"Generator {g} has degree {g.degree}, expected {degree}")
            if not generators:
                generators = (identity(degree),)
        if generators is None and elements is None:
            raise ValueError("A group needs generators or an element set")
        self.degree = degree
        self.cap = DEFAULT_CAP if cap is None else cap
        self._generators: tuple[Permutation, ...] | None = generators
        self._elements = elements
        self.cache: dict[Any, Any] = {}

    @property
    def generators(self) -> tuple[Permutation, ...]:
        if self._generators is None:
            self._generators = small_generating_set(self.elements, self.degree)
        return self._generators

    @property
    def elements(self) -> frozenset[Permutation]:
        if self._elements is None:
            self._elements = closure(self.generators, self.degree, self.cap)
            logger.debug("Generated %d elements on %d points", len(self._elements), self.degree)
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def sorted_elements(self) -> tuple[Permutation, ...]:
        return tuple(sorted(self.elements))

    @cached_property
    def identity(self) -> Permutation:
        return identity(self.degree)

    @cached_property
    def encoding(self) -> tuple[tuple[int, ...], ...]:
        """Sorted element images; used to break ties deterministically."""
        return tuple(p.images for p in self.sorted_elements)

    def __contains__(self, p: object) -> bool:
        return p in self.elements

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.sorted_elements)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Group):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        order = len(self._elements) if self._elements is not None else "?"
        return f"{type(self).__name__}(degree={self.degree}, order={order})"


def generate(generators: Sequence[Permutation], degree: int, cap: int | None = None) -> Group:
    gens = tuple(generators)
    if not gens:
        raise ValueError("generate() needs at least one generator")
    G = Group(degree, gens, cap=cap)
    _ = G.elements
    return G


def is_member(G: Group, p: Permutation) -> bool:
    if p.degree != G.degree:
        raise DegreeMismatch(f"Element of degree {p.degree} tested against a group of degree {G.degree}")
    return p in G.elements


def group_cached(fn: Callable[..., T]) -> Callable[..., T]:
    """Memoize fn(G, *args) on G.cache; args must be hashable."""

    @wraps(fn)
    def wrapper(G: Group, *args: Any) -> T:
        key = (fn.__qualname__, args)
        cache = G.cache
        if key not in cache:
            cache[key] = fn(G, *args)
        return cache[key]

    return wrapper
