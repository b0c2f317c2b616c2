import pytest

from skewbollobas.bounds import binomial, bound_table, identity_check, s1, s2

from oracles import pascal


def test_binomial_small():
    assert binomial(4, 2) == 6
    assert all(binomial(n, 0) == 1 for n in range(30))
    assert binomial(3, 5) == 0 and binomial(3, -1) == 0


def test_binomial_against_pascal():
    # frozen from the Pascal-triangle oracle
    assert binomial(60, 30) == 118264581564861424
    assert all(binomial(n, k) == pascal(n, k) for n in range(129) for k in range(-1, n + 2))


def test_pascal_recurrence():
    for n in range(1, 41):
        for k in range(1, n):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@pytest.mark.parametrize("a, b, expected", [
    (1, 1, (2, 2, 3, 2)),
    (2, 1, (5, 3, 6, 3)),
    (1, 2, (3, 5, 6, 3)),
    (3, 2, (19, 14, 24, 10)),
    (5, 7, (1286, 1715, 2210, 792)),
    (20, 20, (269128937219, 269128937219, 400411345619, 137846528820)),
])
def test_bound_table_values(a, b, expected):
    t = bound_table(a, b)
    assert (t.s1, t.s2, t.n_skew, t.frankl_kalai_m) == expected


@pytest.mark.parametrize("a", range(8))
def test_b_zero(a):
    t = bound_table(a, 0)
    assert (t.s1, t.s2) == (a, 0)


def test_a_zero():
    assert all(bound_table(0, b).s1 == 0 for b in range(8))


def test_negative_rejected():
    with pytest.raises(ValueError):
        bound_table(-1, 2)


def test_identity_examples():
    assert identity_check(1, 1)
    assert identity_check(0, 0)
    assert identity_check(5, 7)


def test_recurrences_and_duality():
    for a in range(21):
        for b in range(21):
            assert identity_check(a, b)
            assert s2(a, b) == s1(b, a)
            if a and b:
                assert s1(a, b) == s1(a - 1, b) + s1(a, b - 1) + 1


def test_large_values_exact():
    t = bound_table(64, 64)
    assert t.frankl_kalai_m == pascal(128, 64)
    assert t.frankl_kalai_m > 2 ** 64
