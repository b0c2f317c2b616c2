import pytest

from skewbollobas.bounds import bound_table
from skewbollobas.core import is_bollobas, is_skew_bollobas, normalize
from skewbollobas.search import SearchProblem, enumerate_systems, max_objective

from oracles import (brute_optimum, canonical_key, count_first_use_ordered,
                     count_up_to_relabeling, relabeling_classes)

OBJECTIVES = ("pairs", "union_a", "union_b", "ground")


def solve(a, b, n, objective, **kw):
    return max_objective(SearchProblem(a, b, n, objective=objective, **kw))


@pytest.mark.parametrize("a, b, n, objective, expected", [
    (1, 1, 3, "union_a", 2),
    (0, 3, 5, "union_a", 0),
    (1, 1, 3, "pairs", 2),
    (2, 1, 6, "union_a", 5),
    (2, 1, 6, "ground", 6),
    (1, 0, 4, "pairs", 1),
])
def test_reference_examples(a, b, n, objective, expected):
    r = solve(a, b, n, objective)
    assert r.proven_optimal
    assert r.optimum == expected


def test_pairs_witness_is_extremal_1_1():
    r = solve(1, 1, 3, "pairs")
    assert r.witness.m == 2 and is_skew_bollobas(r.witness)


# optima from plain backtracking over every labeled system, no depth bound
@pytest.mark.parametrize("a, b, n, expected", [
    (1, 1, 3, {"pairs": 2, "union_a": 2, "union_b": 2, "ground": 3}),
    (2, 1, 6, {"pairs": 3, "union_a": 5, "union_b": 3, "ground": 6}),
    (1, 2, 6, {"pairs": 3, "union_a": 3, "union_b": 5, "ground": 6}),
])
def test_against_brute_force_frozen(a, b, n, expected):
    for objective, value in expected.items():
        assert solve(a, b, n, objective).optimum == value


@pytest.mark.parametrize("a, b, n", [(1, 1, 2), (1, 1, 3), (2, 1, 3), (1, 2, 4), (2, 0, 3)])
@pytest.mark.parametrize("mode", ["skew", "symmetric"])
def test_against_brute_force_live(a, b, n, mode):
    for objective in OBJECTIVES:
        r = max_objective(SearchProblem(a, b, n, mode, objective))
        assert r.optimum == brute_optimum(n, a, b, objective, mode == "symmetric")


@pytest.mark.parametrize("a, b", [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1)])
def test_formula_agreement(a, b):
    t = bound_table(a, b)
    want = {"pairs": t.frankl_kalai_m, "union_a": t.s1, "union_b": t.s2, "ground": t.n_skew}
    for objective in OBJECTIVES:
        r = solve(a, b, t.n_skew, objective)
        assert r.proven_optimal and r.optimum == want[objective]


@pytest.mark.parametrize("a, b, n", [(1, 1, 3), (2, 1, 6), (1, 2, 6), (2, 2, 4)])
@pytest.mark.parametrize("mode", ["skew", "symmetric"])
def test_witness_soundness(a, b, n, mode):
    pred = is_skew_bollobas if mode == "skew" else is_bollobas
    for objective in OBJECTIVES:
        r = max_objective(SearchProblem(a, b, n, mode, objective))
        w = r.witness
        assert pred(w)
        assert all(len(p.a_set) <= a and len(p.b_set) <= b for p in w.pairs)
        assert w == normalize(w) and w.n <= n
        value = {"pairs": w.m, "union_a": len(w.union_a()),
                 "union_b": len(w.union_b()), "ground": len(w.ground())}[objective]
        assert value == r.optimum


def test_monotone_in_n_a_b():
    for objective in OBJECTIVES:
        grid = {(a, b, n): solve(a, b, n, objective).optimum
                for a in range(3) for b in range(3) for n in range(6)}
        for (a, b, n), v in grid.items():
            for da, db, dn in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                nxt = (a + da, b + db, n + dn)
                if nxt in grid:
                    assert grid[nxt] >= v, (objective, (a, b, n), nxt)


@pytest.mark.parametrize("a, b", [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)])
def test_symmetry_breaking_complete(a, b):
    n = bound_table(a, b).n_skew
    for objective in OBJECTIVES:
        on = solve(a, b, n, objective)
        off = solve(a, b, n, objective, symmetry_breaking=False)
        assert off.optimum == on.optimum and off.proven_optimal


def test_node_limit():
    r = solve(2, 2, 7, "ground", node_limit=10)
    assert not r.proven_optimal
    assert r.nodes_explored <= 11
    assert is_skew_bollobas(r.witness)


def test_deterministic_and_worker_independent():
    p = SearchProblem(2, 1, 6, objective="union_a")
    first = max_objective(p)
    assert max_objective(p) == first
    par = max_objective(p, workers=2)
    assert (par.optimum, par.witness, par.proven_optimal) == \
        (first.optimum, first.witness, first.proven_optimal)


def test_symmetric_mode_small():
    # two pairs ({0},{1}), ({1},{0}) is the largest Bollobas system with singletons
    r = max_objective(SearchProblem(1, 1, 4, "symmetric", "pairs"))
    assert r.optimum == 2 and is_bollobas(r.witness)


def test_bad_problem():
    with pytest.raises(ValueError):
        SearchProblem(1, 1, 3, mode="weird")
    with pytest.raises(ValueError):
        SearchProblem(1, 1, 3, objective="volume")
    assert SearchProblem(1, 1, 3, objective="union-b").objective == "union_b"


# enumeration

def collect(problem):
    seen = []
    e = enumerate_systems(problem, seen.append)
    return e, seen


def test_enumeration_counts_1_1_2():
    e, seen = collect(SearchProblem(1, 1, 2))
    assert e.complete and e.count == len(seen)
    # singleton sets: first-use labeling is a canonical form, so the counts agree
    assert e.count == count_up_to_relabeling(2, 1, 1) == 9


def test_enumeration_zero_caps():
    e, seen = collect(SearchProblem(0, 0, 4))
    assert e.count == 2 and [s.m for s in seen] == [0, 1]


@pytest.mark.parametrize("n, a, b, mode", [
    (3, 1, 1, "skew"), (3, 2, 1, "skew"), (4, 2, 1, "skew"), (3, 1, 2, "skew"),
    (4, 1, 0, "skew"), (3, 1, 1, "symmetric"), (4, 2, 1, "symmetric"),
])
def test_enumeration_exact_and_complete(n, a, b, mode):
    e, seen = collect(SearchProblem(a, b, n, mode))
    keys = [tuple((p.a_set, p.b_set) for p in s.pairs) for s in seen]
    assert len(set(keys)) == len(keys)
    assert e.count == count_first_use_ordered(n, a, b, mode == "symmetric")
    as_pairs = lambda s: [(p.a_set, p.b_set) for p in s.pairs]
    assert {canonical_key(as_pairs(s), n) for s in seen} == \
        relabeling_classes(n, a, b, mode == "symmetric")


def test_enumeration_prefix_closed():
    e, seen = collect(SearchProblem(2, 1, 5))
    keys = {tuple(s.pairs) for s in seen}
    for s in seen:
        assert is_skew_bollobas(s)
        assert all(tuple(s.pairs[:k]) in keys for k in range(s.m))


def test_enumeration_node_limit():
    e, _ = collect(SearchProblem(2, 1, 5, node_limit=20))
    assert not e.complete and e.count == 20
