"""Text formats for systems and peeling certificates.

System file::

    setpairs a=1 b=1 m=2 n=3
    1: A = {0}; B = {1}
    2: A = {2}; B = {0}

Pair indices are 1-based, elements 0-based and listed in ascending order. The
declared caps ``a`` and ``b`` are checked against the body when parsing.

Certificate file::

    peel 2 1
    input m=3 n=6
    1: A = {0,1}; B = {2}
    ...
    level 1 : M = {1,2,3}
    removed 1 -> 0
    repair 3 : 4 -> 5
    B 1 = {2}
    ...

Within a level, ``removed`` lines come first, then ``repair`` lines in the
order they were applied, then the repaired ``B`` lines.
"""
from __future__ import annotations

import re

from .core import SetPair, SetPairSystem, ValidationError
from .peel import PeelCertificate, PeelLevel

SYSTEM_TAG = "setpairs"


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def fmt_set(s) -> str:
    return "{" + ",".join(str(e) for e in sorted(s)) + "}"


def _parse_set(text: str, line: int) -> frozenset[int]:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError(f"expected a set like {{0,1}}, got {text!r}", line)
    body = text[1:-1].strip()
    if not body:
        return frozenset()
    try:
        items = [int(t) for t in body.split(",")]
    except ValueError:
        raise ParseError(f"bad element in {text!r}", line) from None
    if len(set(items)) != len(items):
        raise ParseError(f"repeated element in {text!r}", line)
    return frozenset(items)


def _pair_lines(system: SetPairSystem) -> list[str]:
    return [f"{i}: A = {fmt_set(p.a_set)}; B = {fmt_set(p.b_set)}"
            for i, p in enumerate(system.pairs, 1)]


def render_system(system: SetPairSystem, a: int | None = None, b: int | None = None) -> str:
    """Render ``system``; caps default to its largest A- and B-set sizes."""
    if a is None:
        a = max((len(p.a_set) for p in system.pairs), default=0)
    if b is None:
        b = max((len(p.b_set) for p in system.pairs), default=0)
    head = f"{SYSTEM_TAG} a={a} b={b} m={system.m} n={system.n}"
    return "\n".join([head, *_pair_lines(system)]) + "\n"


_HEADER = re.compile(r"^setpairs\s+a=(\d+)\s+b=(\d+)\s+m=(\d+)\s+n=(\d+)$")
_PAIR = re.compile(r"^(\d+)\s*:\s*A\s*=\s*(\{[^}]*\})\s*;\s*B\s*=\s*(\{[^}]*\})$")


def _parse_pairs(lines: list[tuple[int, str]], m: int, n: int) -> SetPairSystem:
    pairs = []
    for k, (lineno, text) in enumerate(lines, 1):
        match = _PAIR.match(text)
        if not match:
            raise ParseError(f"expected 'i: A = {{...}}; B = {{...}}', got {text!r}", lineno)
        if int(match.group(1)) != k:
            raise ParseError(f"pair index {match.group(1)} out of sequence (expected {k})", lineno)
        pairs.append(SetPair(_parse_set(match.group(2), lineno), _parse_set(match.group(3), lineno)))
    if len(pairs) != m:
        last = lines[-1][0] if lines else 1
        raise ParseError(f"header declares m={m} but body has {len(pairs)} pairs", last)
    try:
        return SetPairSystem(pairs, n)
    except ValidationError as exc:
        bad = re.match(r"pair (\d+)", str(exc))
        where = lines[int(bad.group(1)) - 1][0] if bad else 1
        raise ParseError(str(exc), where) from None


def _content_lines(text: str) -> list[tuple[int, str]]:
    return [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)
            if ln.strip() and not ln.lstrip().startswith("#")]


def parse_system(text: str) -> tuple[SetPairSystem, int, int]:
    """Parse a system file; returns ``(system, a, b)`` with the declared caps."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty file", 1)
    lineno, head = lines[0]
    match = _HEADER.match(head)
    if not match:
        raise ParseError(f"expected header 'setpairs a=.. b=.. m=.. n=..', got {head!r}", lineno)
    a, b, m, n = map(int, match.groups())
    system = _parse_pairs(lines[1:], m, n)
    for (ln, _), p in zip(lines[1:], system.pairs):
        if len(p.a_set) > a or len(p.b_set) > b:
            raise ParseError(
                f"pair sizes ({len(p.a_set)}, {len(p.b_set)}) exceed declared caps ({a}, {b})", ln)
    return system, a, b


def render_certificate(cert: PeelCertificate) -> str:
    out = [f"peel {cert.a} {cert.b}", f"input m={cert.input.m} n={cert.input.n}"]
    out += _pair_lines(cert.input)
    for lv in cert.levels:
        out.append(f"level {lv.j} : M = {fmt_set(lv.m_set)}")
        out += [f"removed {i} -> {lv.removed[i]}" for i in sorted(lv.removed)]
        out += [f"repair {v} : {old} -> {new}" for v, old, new in lv.repairs]
        out += [f"B {i} = {fmt_set(lv.b_family[i])}" for i in sorted(lv.b_family)]
    return "\n".join(out) + "\n"


_PEEL = re.compile(r"^peel\s+(\d+)\s+(\d+)$")
_INPUT = re.compile(r"^input\s+m=(\d+)\s+n=(\d+)$")
_LEVEL = re.compile(r"^level\s+(\d+)\s*:\s*M\s*=\s*(\{[^}]*\})$")
_REMOVED = re.compile(r"^removed\s+(\d+)\s*->\s*(\d+)$")
_REPAIR = re.compile(r"^repair\s+(\d+)\s*:\s*(\d+)\s*->\s*(\d+)$")
_BSET = re.compile(r"^B\s+(\d+)\s*=\s*(\{[^}]*\})$")


def parse_certificate(text: str) -> PeelCertificate:
    lines = _content_lines(text)
    if len(lines) < 2:
        raise ParseError("certificate needs 'peel a b' and 'input m=.. n=..' lines", 1)
    match = _PEEL.match(lines[0][1])
    if not match:
        raise ParseError(f"expected 'peel a b', got {lines[0][1]!r}", lines[0][0])
    a, b = map(int, match.groups())
    match = _INPUT.match(lines[1][1])
    if not match:
        raise ParseError(f"expected 'input m=.. n=..', got {lines[1][1]!r}", lines[1][0])
    m, n = map(int, match.groups())
    system = _parse_pairs(lines[2:2 + m], m, n)

    levels: list[PeelLevel] = []
    current = None
    for lineno, text in lines[2 + m:]:
        if match := _LEVEL.match(text):
            current = (int(match.group(1)), _parse_set(match.group(2), lineno), {}, {}, [])
            levels.append(current)
            continue
        if current is None:
            raise ParseError(f"expected 'level j : M = {{...}}', got {text!r}", lineno)
        _, _, removed, b_family, repairs = current
        if match := _REMOVED.match(text):
            i, x = map(int, match.groups())
            if i in removed:
                raise ParseError(f"duplicate removed entry for index {i}", lineno)
            removed[i] = x
        elif match := _REPAIR.match(text):
            repairs.append(tuple(map(int, match.groups())))
        elif match := _BSET.match(text):
            i = int(match.group(1))
            if i in b_family:
                raise ParseError(f"duplicate B entry for index {i}", lineno)
            b_family[i] = _parse_set(match.group(2), lineno)
        else:
            raise ParseError(f"unrecognized certificate line {text!r}", lineno)
    return PeelCertificate(system, a, b, tuple(
        PeelLevel(j, m_set, removed, b_family, tuple(repairs))
        for j, m_set, removed, b_family, repairs in levels))
