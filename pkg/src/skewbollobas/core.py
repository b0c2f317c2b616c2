"""Set-pair systems and the predicates the rest of the package builds on.

A system is an ordered tuple of pairs ``(A_i, B_i)`` of disjoint subsets of
the ground set ``{0, ..., n-1}``. Pair order matters: the skew condition
only asks ``A_i & B_j`` to be non-empty for ``i < j``.

Pair indices reported to users (violations, file bodies, certificates) are
1-based; element labels are always 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class ValidationError(ValueError):
    """A malformed system: label out of range or a pair that is not disjoint."""


class PreconditionError(ValueError):
    """An operation was called on a system it is not defined for."""


@dataclass(frozen=True)
class SetPair:
    a_set: frozenset[int]
    b_set: frozenset[int]

    def __init__(self, a_set: Iterable[int] = (), b_set: Iterable[int] = ()):
        object.__setattr__(self, "a_set", frozenset(a_set))
        object.__setattr__(self, "b_set", frozenset(b_set))

    def __repr__(self) -> str:
        return f"({sorted(self.a_set)}, {sorted(self.b_set)})"


@dataclass(frozen=True)
class SetPairSystem:
    pairs: tuple[SetPair, ...]
    n: int

    def __init__(self, pairs: Iterable = (), n: int | None = None):
        pairs = tuple(p if isinstance(p, SetPair) else SetPair(*p) for p in pairs)
        if n is None:
            n = 1 + max((max(p.a_set | p.b_set, default=-1) for p in pairs), default=-1)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "n", n)
        self._validate()

    def _validate(self) -> None:
        if self.n < 0:
            raise ValidationError(f"ground set size must be non-negative, got {self.n}")
        for i, p in enumerate(self.pairs, 1):
            common = p.a_set & p.b_set
            if common:
                raise ValidationError(
                    f"pair {i}: A and B share element(s) {sorted(common)}")
            for e in p.a_set | p.b_set:
                if not isinstance(e, int) or e < 0 or e >= self.n:
                    raise ValidationError(
                        f"pair {i}: element {e!r} outside ground set 0..{self.n - 1}")

    @property
    def m(self) -> int:
        return len(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __getitem__(self, i):
        return self.pairs[i]

    def a_sets(self) -> list[frozenset[int]]:
        return [p.a_set for p in self.pairs]

    def b_sets(self) -> list[frozenset[int]]:
        return [p.b_set for p in self.pairs]

    def union_a(self) -> frozenset[int]:
        return frozenset().union(*self.a_sets())

    def union_b(self) -> frozenset[int]:
        return frozenset().union(*self.b_sets())

    def ground(self) -> frozenset[int]:
        return self.union_a() | self.union_b()

    def prefix(self, k: int) -> SetPairSystem:
        return SetPairSystem(self.pairs[:k], self.n)

    def __repr__(self) -> str:
        return f"SetPairSystem({list(self.pairs)!r}, n={self.n})"


@dataclass(frozen=True)
class SystemReport:
    is_skew: bool
    is_symmetric_bollobas: bool
    violations: tuple[tuple[int, int], ...]  # 1-based (i, j) with A_i & B_j empty
    m: int
    union_a_size: int
    union_b_size: int
    ground_size: int
    max_a_size: int
    max_b_size: int


def _hits(system: SetPairSystem) -> list[int]:
    """For each j, a bit mask over i with bit i set iff ``A_i & B_j`` is non-empty."""
    holders: dict[int, int] = {}
    for i, p in enumerate(system.pairs):
        for e in p.a_set:
            holders[e] = holders.get(e, 0) | (1 << i)
    out = []
    for p in system.pairs:
        hit = 0
        for e in p.b_set:
            hit |= holders.get(e, 0)
        out.append(hit)
    return out


def _misses(hit: int, limit: int) -> list[int]:
    return [i for i in range(limit) if not hit >> i & 1]


def skew_violations(system: SetPairSystem) -> list[tuple[int, int]]:
    """1-based ``(i, j)`` with ``i < j`` and ``A_i & B_j`` empty."""
    return [(i + 1, j + 1) for j, hit in enumerate(_hits(system)) for i in _misses(hit, j)]


def is_skew_bollobas(system: SetPairSystem) -> bool:
    return all(hit & ((1 << j) - 1) == (1 << j) - 1 for j, hit in enumerate(_hits(system)))


def is_bollobas(system: SetPairSystem) -> bool:
    """Symmetric condition: ``A_i & B_j`` non-empty for every ``i != j``."""
    full = (1 << system.m) - 1
    return all(hit | (1 << j) == full for j, hit in enumerate(_hits(system)))


def report(system: SetPairSystem) -> SystemReport:
    """Sizes and predicates; ``violations`` lists every ordered failing ``(i, j)``."""
    pairs = system.pairs
    m = len(pairs)
    violations = sorted((i + 1, j + 1) for j, hit in enumerate(_hits(system))
                        for i in _misses(hit | (1 << j), m))
    return SystemReport(
        is_skew=not any(i < j for i, j in violations),
        is_symmetric_bollobas=not violations,
        violations=tuple(violations),
        m=m,
        union_a_size=len(system.union_a()),
        union_b_size=len(system.union_b()),
        ground_size=len(system.ground()),
        max_a_size=max((len(p.a_set) for p in pairs), default=0),
        max_b_size=max((len(p.b_set) for p in pairs), default=0),
    )


def dual(system: SetPairSystem) -> SetPairSystem:
    """Reverse the pair order and swap A and B inside every pair.

    Skewness is preserved and the A-union of the result is the B-union of the
    input.
    """
    return SetPairSystem((SetPair(p.b_set, p.a_set) for p in reversed(system.pairs)),
                         system.n)


def pad(system: SetPairSystem, a: int, b: int) -> SetPairSystem:
    """Grow every A-set to exactly ``a`` and every B-set to exactly ``b`` elements.

    Fresh labels start at ``system.n`` and are handed out in ascending order,
    pair by pair, A-set before B-set. Each fresh label is used once, so no
    intersection disappears and the result stays skew.
    """
    max_a = max((len(p.a_set) for p in system.pairs), default=0)
    max_b = max((len(p.b_set) for p in system.pairs), default=0)
    if max_a > a or max_b > b:
        raise PreconditionError(
            f"cannot pad to sizes ({a}, {b}): system has sets of size ({max_a}, {max_b})")
    if not is_skew_bollobas(system):
        raise PreconditionError(
            f"pad requires a skew system; violations {skew_violations(system)[:5]}")
    fresh = system.n
    out = []
    for p in system.pairs:
        extra_a = range(fresh, fresh + a - len(p.a_set))
        fresh += len(extra_a)
        extra_b = range(fresh, fresh + b - len(p.b_set))
        fresh += len(extra_b)
        out.append(SetPair(p.a_set.union(extra_a), p.b_set.union(extra_b)))
    return SetPairSystem(out, fresh)


def normalize(system: SetPairSystem) -> SetPairSystem:
    """Relabel elements 0..k-1 in order of first use (pairs in order, A then B)."""
    relabel: dict[int, int] = {}
    for p in system.pairs:
        for s in (p.a_set, p.b_set):
            for e in sorted(s):
                if e not in relabel:
                    relabel[e] = len(relabel)
    return SetPairSystem(
        (SetPair((relabel[e] for e in p.a_set), (relabel[e] for e in p.b_set))
         for p in system.pairs),
        len(relabel))


def shift(system: SetPairSystem, offset: int) -> SetPairSystem:
    return SetPairSystem(
        (SetPair((e + offset for e in p.a_set), (e + offset for e in p.b_set))
         for p in system.pairs),
        system.n + offset)


def disjoint_union_relabel(s1: SetPairSystem, s2: SetPairSystem) -> SetPairSystem:
    """Pairs of ``s1`` followed by those of ``s2`` moved onto fresh labels.

    The result makes no skewness claim: the cross condition between the two
    blocks generally fails.
    """
    moved = shift(s2, s1.n)
    return SetPairSystem(s1.pairs + moved.pairs, s1.n + s2.n)


def from_lists(pairs, n: int | None = None) -> SetPairSystem:
    """Convenience constructor: ``from_lists([([0], [1]), ([2], [0])])``."""
    return SetPairSystem((SetPair(a, b) for a, b in pairs), n)
