"""Recursive construction of extremal skew systems.

``extremal_system(a, b)`` glues ``extremal_system(a-1, b)`` and
``extremal_system(a, b-1)`` on disjoint ground sets and adds one fresh point
``x``: the first block gets ``x`` in every A-set, the second block gets ``x``
in every B-set, and the first block is listed first. Every first-block A
meets every second-block B in ``x``, so the result is skew.

The output simultaneously has ``C(a+b, a)`` pairs, the maximum A-union, the
maximum B-union and the maximum ground set.
"""
from __future__ import annotations

from functools import lru_cache

from .bounds import binomial
from .core import SetPair, SetPairSystem, shift

DEFAULT_TRACE_LIMIT = 2000


def _check(a: int, b: int) -> None:
    if a < 0 or b < 0:
        raise ValueError(f"size caps must be non-negative, got a={a}, b={b}")


@lru_cache(maxsize=None)
def _build(a: int, b: int) -> SetPairSystem:
    if a == 0:
        return SetPairSystem([SetPair((), range(b))], b)
    if b == 0:
        return SetPairSystem([SetPair(range(a), ())], a)
    left = _build(a - 1, b)
    right = shift(_build(a, b - 1), left.n)
    x = right.n
    pairs = [SetPair(p.a_set | {x}, p.b_set) for p in left.pairs]
    pairs += [SetPair(p.a_set, p.b_set | {x}) for p in right.pairs]
    return SetPairSystem(pairs, x + 1)


def extremal_system(a: int, b: int) -> SetPairSystem:
    """Skew system with ``|A_i| <= a``, ``|B_i| <= b`` attaining all four bounds.

    Labels: the ``(a-1, b)`` block keeps ``0..n1-1``, the ``(a, b-1)`` block is
    shifted by ``n1``, and the fresh point is ``n1 + n2``. The result is not
    normalized; pass it through ``core.normalize`` for the canonical form.
    """
    _check(a, b)
    return _build(a, b)


def construction_trace(a: int, b: int, node_limit: int = DEFAULT_TRACE_LIMIT) -> str:
    """Indented recursion tree of the construction, one line per node."""
    _check(a, b)
    leaves = binomial(a + b, a)
    nodes = 2 * leaves - 1
    if nodes > node_limit:
        raise ValueError(
            f"trace of ({a},{b}) has {nodes} nodes, above the limit {node_limit}")
    lines: list[str] = []

    def walk(a: int, b: int, depth: int, role: str) -> None:
        pad = "  " * depth
        sys_ = _build(a, b)
        if a == 0 or b == 0:
            lines.append(f"{pad}{role}leaf ({a},{b}): m={sys_.m} n={sys_.n}")
            return
        left_n = _build(a - 1, b).n
        right_n = _build(a, b - 1).n
        lines.append(f"{pad}{role}node ({a},{b}): m={sys_.m} n={sys_.n} "
                     f"fresh x={left_n + right_n} (local label)")
        walk(a - 1, b, depth + 1, "x in A: ")
        walk(a, b - 1, depth + 1, "x in B: ")

    walk(a, b, 0, "")
    return "\n".join(lines)
