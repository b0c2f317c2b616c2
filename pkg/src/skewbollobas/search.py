"""Exact depth-first search over ordered set-pair systems on a small ground set.

Systems are grown one pair at a time. Sets are int bit masks, so every
feasibility test is a handful of ANDs: in skew mode a new pair only needs its
B-set to meet every earlier A-set, in symmetric mode its A-set must also meet
every earlier B-set.

Only normalized systems are explored: a pair may introduce new labels only as
the next unused labels, first in its A-set and then in its B-set. Every
objective and predicate is invariant under relabeling, so nothing is lost.
Pair order is never canonicalized because the skew condition depends on it.

Depth is capped at C(a+b, a), the maximum number of pairs of a skew system
(symmetric systems are skew, so the cap applies to both modes).
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable

from .bounds import binomial
from .core import SetPair, SetPairSystem, normalize

MODES = ("skew", "symmetric")
OBJECTIVES = ("union_a", "union_b", "ground", "pairs")
PROGRESS_EVERY = 200_000


@dataclass(frozen=True)
class SearchProblem:
    a: int
    b: int
    n: int
    mode: str = "skew"
    objective: str = "union_a"
    node_limit: int | None = None
    symmetry_breaking: bool = True  # debug switch; off explores every labeling

    def __post_init__(self):
        if min(self.a, self.b, self.n) < 0:
            raise ValueError(f"a, b, n must be non-negative: {self}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        obj = self.objective.replace("-", "_")
        if obj not in OBJECTIVES:
            raise ValueError(f"unknown objective {self.objective!r}; expected one of {OBJECTIVES}")
        object.__setattr__(self, "objective", obj)

    @property
    def max_depth(self) -> int:
        return binomial(self.a + self.b, self.a)


@dataclass(frozen=True)
class SearchResult:
    optimum: int
    witness: SetPairSystem
    nodes_explored: int
    proven_optimal: bool


@dataclass(frozen=True)
class Enumeration:
    count: int
    complete: bool


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask(labels) -> int:
    m = 0
    for e in labels:
        m |= 1 << e
    return m


def _union(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def _key(pair: tuple[int, int]) -> tuple[list[int], list[int]]:
    return _bits(pair[0]), _bits(pair[1])


@lru_cache(maxsize=None)
def _normalized_candidates(used: int, n: int, a: int, b: int) -> tuple[tuple[int, int, int], ...]:
    """All ``(A, B, new_used)`` extending a normalized prefix that uses ``used`` labels."""
    out = []
    old = range(used)
    for ka in range(0, min(a, n - used) + 1):
        fresh_a = _mask(range(used, used + ka))
        for kb in range(0, min(b, n - used - ka) + 1):
            fresh_b = _mask(range(used + ka, used + ka + kb))
            for ra in range(0, a - ka + 1):
                for old_a in combinations(old, ra):
                    rest = [e for e in old if e not in old_a]
                    for rb in range(0, b - kb + 1):
                        for old_b in combinations(rest, rb):
                            out.append((_mask(old_a) | fresh_a, _mask(old_b) | fresh_b,
                                        used + ka + kb))
    out.sort(key=lambda c: _key(c[:2]))
    return tuple(out)


@lru_cache(maxsize=None)
def _all_candidates(n: int, a: int, b: int) -> tuple[tuple[int, int, int], ...]:
    out = []
    labels = range(n)
    for ra in range(0, min(a, n) + 1):
        for sa in combinations(labels, ra):
            rest = [e for e in labels if e not in sa]
            for rb in range(0, min(b, len(rest)) + 1):
                for sb in combinations(rest, rb):
                    out.append((_mask(sa), _mask(sb), n))
    out.sort(key=lambda c: _key(c[:2]))
    return tuple(out)


def _to_system(a_masks, b_masks, n: int) -> SetPairSystem:
    return SetPairSystem([SetPair(_bits(x), _bits(y)) for x, y in zip(a_masks, b_masks)], n)


class _Limit(Exception):
    pass


class _Done(Exception):
    pass


class _Dfs:
    def __init__(self, problem: SearchProblem, progress: Callable[[int, int], None] | None = None):
        self.p = problem
        self.symmetric = problem.mode == "symmetric"
        self.max_depth = problem.max_depth
        self.nodes = 0
        self.best = -1
        self.best_pairs: tuple[tuple[int, int], ...] = ()
        self.progress = progress
        obj = problem.objective
        self.cap = problem.max_depth if obj == "pairs" else problem.n
        self.gain = {"union_a": problem.a, "union_b": problem.b,
                     "ground": problem.a + problem.b, "pairs": 1}[obj]

    def candidates(self, used: int):
        p = self.p
        if p.symmetry_breaking:
            return _normalized_candidates(used, p.n, p.a, p.b)
        return _all_candidates(p.n, p.a, p.b)

    def feasible(self, As, Bs, a_new: int, b_new: int) -> bool:
        for x in As:
            if not x & b_new:
                return False
        if self.symmetric:
            for y in Bs:
                if not a_new & y:
                    return False
        return True

    def value(self, depth: int, ua: int, ub: int) -> int:
        obj = self.p.objective
        if obj == "union_a":
            return ua.bit_count()
        if obj == "union_b":
            return ub.bit_count()
        if obj == "ground":
            return (ua | ub).bit_count()
        return depth

    def bound(self, depth: int, ua: int, ub: int, value: int, dead: bool) -> int:
        remaining = 0 if dead else self.max_depth - depth
        if self.p.objective == "pairs":
            return depth + remaining
        return value + min(remaining * self.gain, self.p.n - value)

    def visit(self, As: list[int], Bs: list[int], used: int, ua: int, ub: int):
        """Hook for enumeration; search ignores it."""

    def run(self, As: list[int], Bs: list[int], used: int, ua: int, ub: int, dead: bool):
        self.nodes += 1
        if self.p.node_limit is not None and self.nodes > self.p.node_limit:
            raise _Limit
        if self.progress and self.nodes % PROGRESS_EVERY == 0:
            self.progress(self.nodes, self.best)
        self.visit(As, Bs, used, ua, ub)
        depth = len(As)
        value = self.value(depth, ua, ub)
        if value > self.best:
            self.best = value
            self.best_pairs = tuple(zip(As, Bs))
            if value >= self.cap:
                raise _Done
        if dead or depth >= self.max_depth:
            return
        if self.bound(depth, ua, ub, value, dead) <= self.best:
            return
        for a_new, b_new, new_used in self.candidates(used):
            if not self.feasible(As, Bs, a_new, b_new):
                continue
            As.append(a_new)
            Bs.append(b_new)
            # nothing can follow an empty A-set (or, symmetrically, an empty B-set)
            blocked = a_new == 0 or (self.symmetric and b_new == 0)
            try:
                self.run(As, Bs, new_used, ua | a_new, ub | b_new, dead or blocked)
            finally:
                As.pop()
                Bs.pop()


def _solve(problem: SearchProblem, prefix: tuple[tuple[int, int, int], ...] = (),
           progress=None) -> tuple[int, tuple[tuple[int, int], ...], int, bool]:
    dfs = _Dfs(problem, progress)
    As = [x for x, _, _ in prefix]
    Bs = [y for _, y, _ in prefix]
    used = prefix[-1][2] if prefix else 0
    dead = any(x == 0 for x in As) or (dfs.symmetric and any(y == 0 for y in Bs))
    proven = True
    try:
        dfs.run(As, Bs, used, _union(As), _union(Bs), dead)
    except _Done:
        pass
    except _Limit:
        proven = False
    return dfs.best, dfs.best_pairs, dfs.nodes, proven


def _finish(problem: SearchProblem, best: int, pairs, nodes: int, proven: bool) -> SearchResult:
    witness = normalize(_to_system([x for x, _ in pairs], [y for _, y in pairs], problem.n))
    return SearchResult(best, witness, nodes, proven)


def max_objective(problem: SearchProblem, workers: int = 1,
                  progress: Callable[[int, int], None] | None = None) -> SearchResult:
    """Proven maximum of the objective over systems on ``problem.n`` labels.

    With ``workers > 1`` the subtrees below each possible first pair are
    searched in separate processes and merged deterministically: the largest
    value wins and ties go to the earliest first pair, which reproduces the
    single-process witness. A tripped ``node_limit`` returns the best system
    seen with ``proven_optimal=False``.
    """
    if workers <= 1 or problem.max_depth == 0:
        return _finish(problem, *_solve(problem, progress=progress))

    # root: the empty system
    best, best_pairs, nodes, proven = 0, (), 1, True
    dfs = _Dfs(problem)
    firsts = [c for c in dfs.candidates(0) if dfs.feasible([], [], c[0], c[1])]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_solve, [problem] * len(firsts), [(c,) for c in firsts]))
    for value, pairs, count, ok in results:
        nodes += count
        proven = proven and ok
        if value > best:
            best, best_pairs = value, pairs
    return _finish(problem, best, best_pairs, nodes, proven)


class _Enumerator(_Dfs):
    def __init__(self, problem: SearchProblem, visitor):
        super().__init__(problem)
        self.visitor = visitor
        self.count = 0
        self.cap = float("inf")

    def visit(self, As, Bs, used, ua, ub):
        self.count += 1
        self.visitor(_to_system(As, Bs, used))

    def bound(self, *args) -> float:
        return float("inf")


def enumerate_systems(problem: SearchProblem, visitor: Callable[[SetPairSystem], object]) -> Enumeration:
    """Call ``visitor`` once for every normalized feasible system, in DFS order.

    The empty system is included. Each visited system has ``n`` equal to the
    number of labels it uses. ``problem.objective`` is ignored.
    """
    if not problem.symmetry_breaking:
        raise ValueError("enumeration only lists normalized systems")
    dfs = _Enumerator(problem, visitor)
    try:
        dfs.run([], [], 0, 0, 0, False)
    except _Limit:
        return Enumeration(dfs.count, False)
    return Enumeration(dfs.count, True)
