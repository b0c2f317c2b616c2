"""Command-line entry point.

Exit codes: 0 success, 1 predicate or certificate failure, 2 search node
limit reached, 3 usage or I/O error, 4 parse error.

When a command writes a system and no ``-o`` is given, the system goes to
stdout and the human-readable summary to stderr, so stdout stays a valid
system file.
"""
from __future__ import annotations

import argparse
import sys

from . import bounds as bounds_mod
from .construct import construction_trace, extremal_system
from .core import (PreconditionError, SetPairSystem, dual, is_skew_bollobas, normalize, pad,
                   report)
from .fileformat import (ParseError, parse_certificate, parse_system, render_certificate,
                         render_system)
from .peel import PeelError, peel, verify_certificate
from .search import MODES, OBJECTIVES, SearchProblem, max_objective

EXIT_OK, EXIT_FAIL, EXIT_LIMIT, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _summary_stream(output: str | None):
    return sys.stderr if output in (None, "-") else sys.stdout


def _load_system(path: str) -> tuple[SetPairSystem, int, int]:
    return parse_system(_read(path))


def cmd_construct(args) -> int:
    if args.trace:
        print(construction_trace(args.a, args.b), file=sys.stderr)
    system = normalize(extremal_system(args.a, args.b))
    _write(render_system(system, args.a, args.b), args.output)
    table = bounds_mod.bound_table(args.a, args.b)
    rows = [("m", system.m, "m_max", table.frankl_kalai_m),
            ("union_a", len(system.union_a()), "S1", table.s1),
            ("union_b", len(system.union_b()), "S2", table.s2),
            ("ground", len(system.ground()), "n_skew", table.n_skew)]
    out = _summary_stream(args.output)
    ok = is_skew_bollobas(system)
    print(f"skew={'yes' if ok else 'NO'}", file=out)
    for name, got, ref, want in rows:
        good = got == want
        ok = ok and good
        print(f"{name}={got} ({ref}={want}) {'OK' if good else 'MISMATCH'}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def _fmt_pairs(pairs) -> str:
    return " ".join(f"({i},{j})" for i, j in pairs) or "none"


def cmd_verify(args) -> int:
    system, _, _ = _load_system(args.input)
    rep = report(system)
    print(f"m={rep.m} union_a={rep.union_a_size} union_b={rep.union_b_size} "
          f"ground={rep.ground_size} max_a={rep.max_a_size} max_b={rep.max_b_size}")
    print(f"skew={'yes' if rep.is_skew else 'no'} "
          f"bollobas={'yes' if rep.is_symmetric_bollobas else 'no'}")
    if args.mode == "skew":
        shown = [(i, j) for i, j in rep.violations if i < j]
        holds = rep.is_skew
    else:
        shown = list(rep.violations)
        holds = rep.is_symmetric_bollobas
    print(f"violations: {_fmt_pairs(shown)}")
    if args.strict_sizes:
        a, b = args.strict_sizes
        wrong = [i for i, p in enumerate(system.pairs, 1)
                 if len(p.a_set) != a or len(p.b_set) != b]
        print(f"exact sizes ({a},{b}): {'yes' if not wrong else 'no, pairs ' + str(wrong)}")
        holds = holds and not wrong
    print(f"{args.mode}: {'HOLDS' if holds else 'FAILS'}")
    return EXIT_OK if holds else EXIT_FAIL


def cmd_peel(args) -> int:
    system, a, b = _load_system(args.input)
    a = a if args.a is None else args.a
    b = b if args.b is None else args.b
    try:
        if args.pad:
            system = pad(system, a, b)
        cert = peel(system, a, b)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        if "exact sizes" in str(exc):
            print("hint: rerun with --pad to fill every set to the exact size", file=sys.stderr)
            return EXIT_USAGE
        return EXIT_FAIL
    except PeelError as exc:
        print(f"peeling failed: {exc}", file=sys.stderr)
        if args.output not in (None, "-"):
            _write(render_certificate(exc.certificate), args.output)
        return EXIT_FAIL
    _write(render_certificate(cert), args.output)
    check = verify_certificate(cert)
    out = _summary_stream(args.output)
    sizes = [len(lv.m_set) for lv in cert.levels]
    print(f"levels={len(cert.levels)} |M_j|={sizes} sum={sum(sizes)} "
          f"union_a={len(system.union_a())} bound={bounds_mod.s1(a, b)}", file=out)
    for msg in check.failures:
        print(f"FAILED {msg}", file=out)
    print(f"certificate {'OK' if check.ok else 'INVALID'}", file=out)
    return EXIT_OK if check.ok else EXIT_FAIL


def cmd_check_cert(args) -> int:
    cert = parse_certificate(_read(args.cert))
    check = verify_certificate(cert)
    for name, passed in check.checks.items():
        print(f"{name}: {'ok' if passed else 'FAILED'}")
    for msg in check.failures:
        print(f"FAILED {msg}")
    print(f"certificate {'OK' if check.ok else 'INVALID'}")
    return EXIT_OK if check.ok else EXIT_FAIL


def cmd_search(args) -> int:
    problem = SearchProblem(args.a, args.b, args.n, args.mode, args.objective,
                            args.node_limit, not args.no_symmetry_breaking)
    progress = None
    if args.progress:
        def progress(nodes, best):
            print(f"[progress] nodes={nodes} best={best}", file=sys.stderr, flush=True)
    result = max_objective(problem, workers=args.workers, progress=progress)
    out = _summary_stream(args.output)
    status = "proven" if result.proven_optimal else "not proven: node limit reached"
    print(f"optimum {result.optimum} ({status})", file=out)
    print(f"nodes {result.nodes_explored}", file=out)
    _write(render_system(result.witness, args.a, args.b), args.output)
    return EXIT_OK if result.proven_optimal else EXIT_LIMIT


def cmd_bounds(args) -> int:
    t = bounds_mod.bound_table(args.a, args.b)
    ok = bounds_mod.identity_check(args.a, args.b)
    print(f"s1={t.s1} s2={t.s2} n_skew={t.n_skew} m_max={t.frankl_kalai_m} "
          f"identity={'OK' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dual(args) -> int:
    system, a, b = _load_system(args.input)
    _write(render_system(dual(system), b, a), args.output)
    return EXIT_OK


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skewbollobas",
                     description="Skew Bollobas set-pair systems: construct, verify, peel, search.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def caps(p, required=True):
        p.add_argument("--a", type=_nonneg, required=required, help="max |A_i|")
        p.add_argument("--b", type=_nonneg, required=required, help="max |B_i|")

    p = sub.add_parser("construct", help="write an extremal system")
    caps(p)
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--trace", action="store_true", help="print the recursion tree to stderr")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a system file")
    p.add_argument("input")
    p.add_argument("--mode", choices=MODES, default="skew")
    p.add_argument("--strict-sizes", nargs=2, type=_nonneg, metavar=("A", "B"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("peel", help="peel a system and write its certificate")
    p.add_argument("input")
    caps(p, required=False)
    p.add_argument("--pad", action="store_true", help="pad sets to exact sizes first")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_peel)

    p = sub.add_parser("check-cert", help="re-verify a certificate file")
    p.add_argument("cert")
    p.set_defaults(func=cmd_check_cert)

    p = sub.add_parser("search", help="exact search for the best system")
    caps(p)
    p.add_argument("--n", type=_nonneg, required=True, help="ground-set size")
    p.add_argument("--mode", choices=MODES, default="skew")
    p.add_argument("--objective", default="union-a",
                   choices=[o.replace("_", "-") for o in OBJECTIVES] + list(OBJECTIVES))
    p.add_argument("--node-limit", type=_nonneg, default=None)
    p.add_argument("--workers", type=_nonneg, default=1)
    p.add_argument("--no-symmetry-breaking", action="store_true", help=argparse.SUPPRESS)
    p.add_argument("--progress", action="store_true", help="report progress on stderr")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="print the exact bound table")
    caps(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("dual", help="reverse pair order and swap A/B")
    p.add_argument("input")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_dual)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
