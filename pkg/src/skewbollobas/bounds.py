"""Exact closed-form values for skew systems with ``|A_i| <= a``, ``|B_i| <= b``.

    s1             max |union of A_i|             C(a+b+1, a) - 1
    s2             max |union of B_i|             C(a+b+1, a+1) - 1
    n_skew         max |union of A_i and B_i|     C(a+b+2, a+1) - C(a+b, a) - 1
    frankl_kalai_m max number of pairs m          C(a+b, a)

All arithmetic is on Python ints, so nothing overflows.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def s1(a: int, b: int) -> int:
    return binomial(a + b + 1, a) - 1


def s2(a: int, b: int) -> int:
    return binomial(a + b + 1, a + 1) - 1


def n_skew(a: int, b: int) -> int:
    return binomial(a + b + 2, a + 1) - binomial(a + b, a) - 1


def frankl_kalai_m(a: int, b: int) -> int:
    return binomial(a + b, a)


@dataclass(frozen=True)
class BoundTable:
    a: int
    b: int
    s1: int
    s2: int
    n_skew: int
    frankl_kalai_m: int


def _check_sizes(a: int, b: int) -> None:
    if a < 0 or b < 0:
        raise ValueError(f"size caps must be non-negative, got a={a}, b={b}")


def bound_table(a: int, b: int) -> BoundTable:
    _check_sizes(a, b)
    return BoundTable(a, b, s1(a, b), s2(a, b), n_skew(a, b), frankl_kalai_m(a, b))


def identity_check(a: int, b: int) -> bool:
    """Whether s1 + s2 == n_skew + C(a+b, a) - 1 at ``(a, b)``."""
    t = bound_table(a, b)
    return t.s1 + t.s2 == t.n_skew + binomial(a + b, a) - 1


def level_bound(a: int, b: int, j: int) -> int:
    """Largest possible ``|M_j|`` at peeling level ``j``: C(a-j+1+b, a-j+1)."""
    return binomial(a - j + 1 + b, a - j + 1)
