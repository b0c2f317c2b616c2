"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary.

All comparisons are exact integer equality; each criterion also has a
wall-clock budget.
"""
import random
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE_LINES
from oracles import pascal
from skewbollobas.bounds import bound_table, identity_check, s1, s2
from skewbollobas.cli import main
from skewbollobas.construct import extremal_system
from skewbollobas.core import dual, is_skew_bollobas, pad, report
from skewbollobas.peel import peel, verify_certificate
from skewbollobas.search import SearchProblem, enumerate_systems, max_objective


@contextmanager
def criterion(number: int, title: str, budget_s: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        ACCEPTANCE_LINES.append(
            f"criterion {number} ({title}): FAIL in {elapsed:.2f}s: {exc!r}"[:300])
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < budget_s
    ACCEPTANCE_LINES.append(
        f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'} "
        f"in {elapsed:.2f}s (budget {budget_s:.0f}s)")
    assert ok, f"criterion {number} took {elapsed:.2f}s, budget {budget_s}s"


def test_1_construction_attainment():
    with criterion(1, "construction attains m, S1, S2, n_skew for a,b <= 6", 10):
        for a in range(7):
            for b in range(7):
                s = extremal_system(a, b)
                assert is_skew_bollobas(s), (a, b)
                assert all(len(p.a_set) <= a and len(p.b_set) <= b for p in s.pairs)
                got = (s.m, len(s.union_a()), len(s.union_b()), len(s.ground()))
                want = (pascal(a + b, a), pascal(a + b + 1, a) - 1,
                        pascal(a + b + 1, a + 1) - 1,
                        pascal(a + b + 2, a + 1) - pascal(a + b, a) - 1)
                assert got == want, (a, b, got, want)


def test_2_oracle_formula_agreement():
    with criterion(2, "search oracle optima equal the closed forms", 60):
        for a, b in [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]:
            t = bound_table(a, b)
            want = {"pairs": t.frankl_kalai_m, "union_a": t.s1,
                    "union_b": t.s2, "ground": t.n_skew}
            for objective, value in want.items():
                r = max_objective(SearchProblem(a, b, t.n_skew, "skew", objective))
                assert r.proven_optimal, (a, b, objective)
                assert r.optimum == value, (a, b, objective, r.optimum, value)


def _exact(a, b, n):
    found = []
    enumerate_systems(SearchProblem(a, b, n), lambda s: found.append(s) if all(
        len(p.a_set) == a and len(p.b_set) == b for p in s.pairs) else None)
    return found


def test_3_upper_bound_machinery():
    with criterion(3, "peeling certificates verify", 60):
        for a in range(1, 5):
            for b in range(1, 5):
                cert = peel(pad(extremal_system(a, b), a, b), a, b)
                check = verify_certificate(cert)
                assert check.ok, (a, b, check.failures)
                sizes = [len(lv.m_set) for lv in cert.levels]
                assert sum(sizes) == len(cert.input.union_a())
                assert all(m <= pascal(a - j + 1 + b, a - j + 1)
                           for j, m in enumerate(sizes, 1))
        for a, b, n in [(1, 1, 3), (2, 1, 5)]:
            systems = _exact(a, b, n)
            assert systems
            for s in systems:
                check = verify_certificate(peel(s, a, b))
                assert check.ok, (s, check.failures)


def test_4_duality():
    with criterion(4, "dual is an involution that swaps the unions", 10):
        pool = []
        for a, b, n in [(2, 1, 5), (1, 2, 5), (2, 2, 4)]:
            enumerate_systems(SearchProblem(a, b, n), pool.append)
        sample = random.Random(20240601).sample(pool, 200)
        for s in sample:
            d = dual(s)
            assert dual(d) == s
            assert is_skew_bollobas(d) == is_skew_bollobas(s)
            r, rd = report(s), report(d)
            assert (rd.union_a_size, rd.union_b_size) == (r.union_b_size, r.union_a_size)


def test_5_formula_identities():
    with criterion(5, "closed-form identities for a,b <= 20", 1):
        for a in range(21):
            for b in range(21):
                assert identity_check(a, b)
                assert s2(a, b) == s1(b, a)
                if a >= 1 and b >= 1:
                    assert s1(a, b) == s1(a - 1, b) + s1(a, b - 1) + 1


def test_6_negative_controls(tmp_path, capsys):
    with criterion(6, "violations detected with documented exit codes", 10):
        skew_fail = tmp_path / "skew_fail.txt"
        skew_fail.write_text("setpairs a=1 b=1 m=2 n=4\n1: A = {0}; B = {1}\n2: A = {2}; B = {3}\n")
        assert main(["verify", str(skew_fail)]) == 1
        assert "violations: (1,2)" in capsys.readouterr().out

        system, cert = tmp_path / "e22.txt", tmp_path / "e22.cert"
        assert main(["construct", "--a", "2", "--b", "2", "-o", str(system)]) == 0
        assert main(["peel", str(system), "-o", str(cert)]) == 0
        lines = cert.read_text().splitlines()
        k = next(i for i, ln in enumerate(lines) if ln.startswith("level 1"))
        lines[k] = lines[k].replace("{1,", "{")
        cert.write_text("\n".join(lines) + "\n")
        capsys.readouterr()
        assert main(["check-cert", str(cert)]) == 1
        out = capsys.readouterr().out
        assert "nesting: FAILED" in out and "certificate INVALID" in out

        caps = tmp_path / "caps.txt"
        caps.write_text("setpairs a=1 b=1 m=1 n=3\n1: A = {0,1}; B = {2}\n")
        assert main(["verify", str(caps)]) == 4
        assert "exceed declared caps" in capsys.readouterr().err

        loose = tmp_path / "loose.txt"
        loose.write_text("setpairs a=2 b=1 m=1 n=2\n1: A = {0}; B = {1}\n")
        assert main(["verify", str(loose), "--strict-sizes", "2", "1"]) == 1
        assert main(["peel", str(loose)]) == 3
        assert "--pad" in capsys.readouterr().err

        assert main(["search", "--a", "2", "--b", "2", "--n", "7", "--objective", "ground",
                     "--node-limit", "10"]) == 2
