"""Level-by-level peeling of a skew system, with a checkable certificate.

For an exact-size skew system (every ``|A_i| = a``, ``|B_i| = b``) the peeling
runs ``a`` levels. Level ``j`` keeps an inclusion-minimal index set ``M_j``
inside ``M_{j-1}`` whose A-sets still cover the current A-union, and deletes
from each kept A-set one element that no other kept A-set contains. Each
element of the original A-union is deleted exactly once, so
``sum |M_j| = |union of A_i|``.

The sub-system at level ``j`` must itself be skew so that ``|M_j|`` obeys the
pair-count bound with set sizes ``(a-j+1, b)``. Deleting private elements can
break that, so B-sets are repaired: when ``A_u`` no longer meets ``B_v``
(``u < v``), the element deleted from ``A_u`` one level earlier is swapped in
``B_v`` for the element that will be deleted from ``A_u`` next.

Pair indices are 1-based throughout.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .bounds import binomial, level_bound
from .core import PreconditionError, SetPair, SetPairSystem, is_skew_bollobas, skew_violations


class PeelError(RuntimeError):
    """The B-repair loop did not settle. Carries the levels built so far."""

    def __init__(self, message: str, certificate: PeelCertificate):
        super().__init__(message)
        self.certificate = certificate


@dataclass(frozen=True)
class PeelLevel:
    j: int
    m_set: frozenset[int]
    removed: dict[int, int]
    b_family: dict[int, frozenset[int]]
    repairs: tuple[tuple[int, int, int], ...] = ()  # (v, old, new)


@dataclass(frozen=True)
class PeelCertificate:
    input: SetPairSystem
    a: int
    b: int
    levels: tuple[PeelLevel, ...]


@dataclass
class CertificateReport:
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, passed: bool, message: str = "") -> None:
        self.checks[name] = self.checks.get(name, True) and passed
        if not passed:
            self.failures.append(f"{name}: {message}" if message else name)


def minimal_union_subset(indices: Iterable[int],
                         sets: Mapping[int, Iterable[int]]) -> frozenset[int]:
    """Inclusion-minimal subset of ``indices`` with the same union of ``sets``.

    Indices are examined from largest to smallest; an index is dropped when
    every element of its set is still covered by the other surviving indices.
    Every survivor ends up owning an element no other survivor has.
    """
    kept = sorted(indices)
    count: Counter[int] = Counter()
    for i in kept:
        count.update(sets[i])
    alive = set(kept)
    for i in reversed(kept):
        if all(count[e] >= 2 for e in sets[i]):
            alive.discard(i)
            count.subtract(sets[i])
    return frozenset(alive)


def private_elements(indices: Iterable[int],
                     sets: Mapping[int, Iterable[int]]) -> dict[int, int]:
    """Smallest element of each set that lies in no other set of ``indices``."""
    indices = list(indices)
    count: Counter[int] = Counter()
    for i in indices:
        count.update(sets[i])
    out = {}
    for i in indices:
        own = [e for e in sets[i] if count[e] == 1]
        if not own:
            raise ValueError(f"index {i} has no private element; index set is not minimal")
        out[i] = min(own)
    return out


def _first_gap(order: list[int], a_sets, b_sets) -> tuple[int, int] | None:
    for pos, u in enumerate(order):
        au = a_sets[u]
        for v in order[pos + 1:]:
            if au.isdisjoint(b_sets[v]):
                return u, v
    return None


def peel(system: SetPairSystem, a: int, b: int) -> PeelCertificate:
    """Peel an exact-size skew system into ``a`` levels.

    Raises ``PreconditionError`` for non-skew input or wrong set sizes (pad the
    system first), and ``PeelError`` if a level's B-repair loop exceeds
    ``|M_j|**2 * b`` replacements.
    """
    if not is_skew_bollobas(system):
        raise PreconditionError(
            f"peel requires a skew system; violations {skew_violations(system)[:5]}")
    for i, p in enumerate(system.pairs, 1):
        if len(p.a_set) != a or len(p.b_set) != b:
            raise PreconditionError(
                f"peel requires exact sizes |A_i|={a}, |B_i|={b}; pair {i} has "
                f"({len(p.a_set)}, {len(p.b_set)}) (pad the system first)")

    a_cur = {i: p.a_set for i, p in enumerate(system.pairs, 1)}
    b_prev = {i: p.b_set for i, p in enumerate(system.pairs, 1)}
    m_prev: frozenset[int] = frozenset(a_cur)
    removed_prev: dict[int, int] = {}
    levels: list[PeelLevel] = []

    for j in range(1, a + 1):
        m_j = minimal_union_subset(m_prev, a_cur)
        removed = private_elements(sorted(m_j), a_cur)
        b_j = {i: b_prev[i] for i in sorted(m_j)}
        repairs: list[tuple[int, int, int]] = []
        if j > 1:
            order = sorted(m_j)
            cap = len(order) ** 2 * b
            while (gap := _first_gap(order, a_cur, b_j)) is not None:
                u, v = gap
                old = removed_prev[u]
                if len(repairs) >= cap or old not in b_j[v]:
                    partial = PeelCertificate(system, a, b, tuple(levels))
                    why = ("repair cap exceeded" if len(repairs) >= cap
                           else f"element {old} removed from A_{u} is not in B_{v}")
                    raise PeelError(f"level {j}: cannot repair pair ({u},{v}): {why}", partial)
                new = removed[u]
                b_j[v] = (b_j[v] - {old}) | {new}
                repairs.append((v, old, new))
        levels.append(PeelLevel(j, m_j, removed, b_j, tuple(repairs)))
        a_cur = {i: a_cur[i] - {removed[i]} for i in m_j}
        b_prev, m_prev, removed_prev = b_j, m_j, removed

    return PeelCertificate(system, a, b, tuple(levels))


def verify_certificate(cert: PeelCertificate) -> CertificateReport:
    """Recheck every invariant of a certificate from its input system alone."""
    out = CertificateReport()
    a, b, system = cert.a, cert.b, cert.input

    bad = skew_violations(system)
    out.record("input-skew", not bad, f"input violations {bad[:5]}")
    sizes_ok = all(len(p.a_set) == a and len(p.b_set) == b for p in system.pairs)
    out.record("input-sizes", sizes_ok, f"input sets are not exactly ({a}, {b})")
    out.record("level-count", len(cert.levels) == a
               and [lv.j for lv in cert.levels] == list(range(1, a + 1)),
               f"expected levels 1..{a}, got {[lv.j for lv in cert.levels]}")

    a_cur = {i: p.a_set for i, p in enumerate(system.pairs, 1)}
    b_prev = {i: p.b_set for i, p in enumerate(system.pairs, 1)}
    m_prev = set(a_cur)
    total = 0
    for lv in cert.levels:
        j = lv.j
        m_j = set(lv.m_set)
        total += len(m_j)

        outside = sorted(m_j - m_prev)
        out.record("nesting", not outside,
                   f"level {j}: indices {outside} in M_{j} but not in M_{j - 1}")
        m_j &= m_prev

        before = frozenset().union(*(a_cur[i] for i in m_prev))
        after = frozenset().union(*(a_cur[i] for i in m_j))
        out.record("union", before == after,
                   f"level {j}: M_{j} misses elements {sorted(before - after)} of the A-union")

        out.record("removed-keys", set(lv.removed) == set(lv.m_set),
                   f"level {j}: removed map keys differ from M_{j}")
        for i in sorted(m_j):
            x = lv.removed.get(i)
            if x is None:
                continue
            if x not in a_cur[i]:
                out.record("removed-membership", False,
                           f"level {j}, index {i}: element {x} not in A_{i}")
                continue
            others = [l for l in m_j if l != i and x in a_cur[l]]
            out.record("private-element", not others,
                       f"level {j}, index {i}: element {x} also in A_{others}")
        xs = [lv.removed[i] for i in m_j if i in lv.removed]
        out.record("distinct-removed", len(xs) == len(set(xs)),
                   f"level {j}: removed elements repeat")

        # replay repairs from the previous B-family
        out.record("b-family-keys", set(lv.b_family) == set(lv.m_set),
                   f"level {j}: B-family keys differ from M_{j}")
        replay = {i: set(b_prev[i]) for i in m_j}
        if j == 1 and lv.repairs:
            out.record("repair-replay", False, "level 1: repairs are not allowed")
        for v, old, new in lv.repairs:
            if v not in replay or old not in replay[v] or new in replay[v]:
                out.record("repair-replay", False,
                           f"level {j}: repair {v} : {old} -> {new} does not apply")
                continue
            replay[v].discard(old)
            replay[v].add(new)
        for i in sorted(m_j):
            if i in lv.b_family and replay[i] != set(lv.b_family[i]):
                out.record("repair-replay", False,
                           f"level {j}, index {i}: B-set disagrees with replayed repairs")
        out.record("repair-replay", True)

        sub = []
        for i in sorted(m_j):
            bi = frozenset(lv.b_family.get(i, ()))
            if len(bi) != b:
                out.record("b-size", False, f"level {j}, index {i}: |B_{i}| = {len(bi)} != {b}")
            if not a_cur[i].isdisjoint(bi):
                out.record("pair-disjoint", False,
                           f"level {j}, index {i}: A_{i} and B_{i} intersect")
                bi = bi - a_cur[i]
            sub.append((i, SetPair(a_cur[i], bi)))
        order = [i for i, _ in sub]
        gaps = [(order[u - 1], order[v - 1], j)
                for u, v in skew_violations(SetPairSystem((p for _, p in sub), system.n))]
        out.record("level-skew", not gaps,
                   f"level {j}: P_{j} not skew at (u,v,j) = {gaps[:5]}")

        cap = level_bound(a, b, j)
        out.record("level-bound", len(lv.m_set) <= cap,
                   f"level {j}: |M_{j}| = {len(lv.m_set)} exceeds C({a - j + 1 + b},{a - j + 1}) = {cap}")

        a_cur = {i: a_cur[i] - {lv.removed[i]} if i in lv.removed else a_cur[i]
                 for i in m_j}
        b_prev = {i: frozenset(lv.b_family.get(i, ())) for i in m_j}
        m_prev = m_j

    union_a = len(system.union_a())
    out.record("sum-identity", total == union_a,
               f"sum |M_j| = {total} but |union A_i| = {union_a}")
    bound_sum = sum(level_bound(a, b, j) for j in range(1, a + 1))
    out.record("bound-corollary", bound_sum == binomial(a + b + 1, a) - 1,
               f"sum of level bounds {bound_sum} != C({a + b + 1},{a}) - 1")
    out.record("upper-bound", union_a <= binomial(a + b + 1, a) - 1,
               f"|union A_i| = {union_a} exceeds C({a + b + 1},{a}) - 1")
    return out
