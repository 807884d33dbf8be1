import threading
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hermite2.hermite import (
    GHParams, HermiteCache, alpha_closed_form, alpha_triangle, classical, classical_at_zero,
    gould_hopper, h2_at_zero, h2_derivative_formula, h2_explicit, h2_operator, h2_recurrence,
    h2_rodrigues, hermite2,
)
from hermite2.poly import LaurentPoly as P
from hermite2.rings import CoeffRing, binomial

RAT = CoeffRing.RAT

# the nine printed values, rows m = 1..3, columns n = 1..3
PAPER_TABLE = {
    (1, 1): {0: -1, 2: 2},
    (1, 2): {1: -2, 3: 2},
    (1, 3): {2: -3, 4: 2},
    (2, 1): {1: -6, 3: 4},
    (2, 2): {0: 2, 2: -10, 4: 4},
    (2, 3): {1: 6, 3: -14, 5: 4},
    (3, 1): {0: 6, 2: -24, 4: 8},
    (3, 2): {1: 24, 3: -36, 5: 8},
    (3, 3): {0: -6, 2: 54, 4: -48, 6: 8},
}

# H_{4,2} from x H_{4,1} - 4 H_{3,1}, with H_{4,1} = H_5 / 2 and H_5 = 32x^5 - 160x^3 + 120x
H42 = {0: -24, 2: 156, 4: -112, 6: 16}

BUILDERS = [h2_explicit, h2_operator, h2_rodrigues, lambda m, n: h2_recurrence(m, n, HermiteCache())]


def test_classical_examples():
    assert classical(0) == P.one()
    assert classical(1) == P({1: 2})
    assert classical(3) == P({3: 8, 1: -12})
    assert classical(-1).is_zero()


@pytest.mark.parametrize("builder", BUILDERS)
@pytest.mark.parametrize("mn", sorted(PAPER_TABLE))
def test_paper_table(builder, mn):
    assert builder(*mn) == P(PAPER_TABLE[mn])


@pytest.mark.parametrize("builder", BUILDERS)
def test_derived_h42(builder):
    assert builder(4, 2) == P(H42)


@pytest.mark.parametrize("builder", BUILDERS)
def test_negative_index_is_zero(builder):
    assert builder(-1, 3).is_zero()
    assert builder(2, -1).is_zero()


def test_first_row_and_column():
    for n in range(1, 8):
        assert h2_operator(1, n) == P({n - 1: -n, n + 1: 2})
        assert h2_explicit(0, n) == P({n: 1})
    for m in range(8):
        assert h2_operator(m, 0) == classical(m)
    assert h2_rodrigues(1, 0) == P({1: 2})


@given(st.integers(0, 12), st.integers(0, 12))
def test_degree_leading_parity(m, n):
    h = hermite2(m, n)
    assert h.degree == m + n
    assert h.leading_coeff == 2 ** m
    assert all(isinstance(c, int) for _, c in h.terms())
    assert h.scale_arg(-1) == h * (-1) ** (m + n)
    assert all((e - m - n) % 2 == 0 for e, _ in h.terms())


@given(st.integers(0, 12))
def test_hm1_relation(m):
    assert hermite2(m, 1) * 2 == classical(m + 1)


def test_classical_at_zero_closed_form():
    for k in range(31):
        assert classical_at_zero(k) == classical(k)(0)


def test_h2_at_zero_examples():
    assert h2_at_zero(2, 3) == 0
    assert h2_at_zero(3, 3) == -6
    assert h2_at_zero(4, 2) == -24 == P(H42)(0)
    for m in range(16):
        for n in range(16):
            assert hermite2(m, n)(0) == h2_at_zero(m, n)


def test_cache_matches_explicit_and_is_append_only():
    cache = HermiteCache()
    h2_recurrence(6, 4, cache)
    snapshot = dict(cache.items())
    h2_recurrence(9, 7, cache)
    for key, val in snapshot.items():
        assert cache.get(*key) is val
    for (m, n), val in cache.items():
        assert val == h2_explicit(m, n)


def test_cache_concurrent_use():
    cache = HermiteCache()
    out = {}

    def work(i):
        out[i] = [cache.get(m, n) for m in range(10) for n in range(10 - i % 3)]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for (m, n), val in cache.items():
        assert val == h2_explicit(m, n)


def test_gould_hopper_examples():
    assert gould_hopper(0, GHParams(3, 2, Fraction(5))) == P.one(RAT)
    for n in range(5):
        assert gould_hopper(1, GHParams(2, n, 1)) == P({1: 2, -1: -n}, RAT)
    assert gould_hopper(2, GHParams(2, 2, 1)).shift(2) == P(PAPER_TABLE[2, 2], RAT)


@pytest.mark.parametrize("m", range(11))
def test_gould_hopper_relation(m):
    for n in range(11):
        assert gould_hopper(m, GHParams(2, n, 1)).shift(n) == hermite2(m, n).promote(RAT)


def test_alpha_triangle_examples():
    tri = alpha_triangle(5)
    assert tri[2, 4] == 24
    assert tri[0, 5] == 32
    assert tri[3, 5] == 40


def test_alpha_closed_form_and_row_sums():
    tri = alpha_triangle(12)
    for nu, row in enumerate(tri.rows):
        assert list(row) == [2 ** (nu - j) * binomial(nu, j) for j in range(nu + 1)]
        assert sum(row) == 3 ** nu
        assert all(a > 0 for a in row)
    assert alpha_closed_form(3, 5) == 40


def test_alpha_triangle_domain():
    with pytest.raises(ValueError):
        alpha_triangle(-1)


def test_derivative_formula_examples():
    assert h2_derivative_formula(3, 2, 0) == hermite2(3, 2)
    assert h2_derivative_formula(1, 1, 1) == P({1: 4})
    assert h2_derivative_formula(2, 2, 1) == P({1: -20, 3: 16})
    assert h2_derivative_formula(2, 2, 2) == P({0: -20, 2: 48})


@given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 9))
def test_derivative_formula_matches_derivative(r, n, nu):
    assert h2_derivative_formula(r, n, nu) == hermite2(r, n).derivative(nu)
