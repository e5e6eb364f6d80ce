from __future__ import annotations

from functools import reduce
from typing import Iterable

from sympy import factorint, igcd, ilcm, isprime, primefactors


def require_prime(p: int) -> int:
    if not isprime(p):
        raise ValueError(f"Expected a prime, got {p}")
    return int(p)


def prime_set(n: int) -> frozenset[int]:
    """pi(n): the primes dividing n. pi(1) is empty."""
    if n < 1:
        raise ValueError(f"pi(n) needs n >= 1, got {n}")
    return frozenset(int(p) for p in primefactors(n))


def p_part(n: int, p: int) -> int:
    """n_p: the largest power of p dividing n."""
    if n < 1:
        raise ValueError(f"p-part needs n >= 1, got {n}")
    return int(p) ** int(factorint(n).get(p, 0))


def p_prime_part(n: int, p: int) -> int:
    return n // p_part(n, p)


def is_p_power(n: int, p: int) -> bool:
    return n >= 1 and p_part(n, p) == n


def is_two_power(n: int) -> bool:
    return is_p_power(n, 2)


def lcm_all(values: Iterable[int]) -> int:
    return int(reduce(ilcm, values, 1))


def coprime(a: int, b: int) -> bool:
    return igcd(a, b) == 1
