import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hermite2 import identities as ids
from hermite2.hermite import GHParams, hermite2
from hermite2.identities import (
    CheckReport, Status, SuiteConfig, Variant, alternating_sum, check_addition,
    check_addition_corollaries, check_burchnall, check_burchnall_gh, check_classical_nielsen,
    check_derivative_recurrence, check_exp_xy, check_generating, check_higher_derivative,
    check_nielsen_n0, check_nielsen_two_index, check_ops_rodrigues_link, check_recurrences,
    check_recurrence13_n0, check_runge, generating_series, run_suite, select,
    verdict,
)
from hermite2.poly import LaurentPoly as P
from hermite2.rings import CoeffRing

from conftest import laurent

RAT = CoeffRing.RAT


def by_id(reports, identity_id, variant=None):
    return [r for r in reports if r.identity_id == identity_id and (variant is None or r.variant is variant)]


def test_report_status_tracks_residual():
    ok = ids._report("x", (1,), P.zero())
    bad = ids._report("x", (1,), P({2: 4}))
    assert ok.passed and ok.residual_digest is None
    assert bad.status is Status.FAIL
    assert json.loads(bad.residual_digest) == {"var": "x", "ring": "int", "terms": [[2, "4"]]}
    assert bad.to_dict()["residual"]["terms"] == [[2, "4"]]


@pytest.mark.parametrize("m", range(7))
def test_burchnall_f_one_and_monomials(m):
    assert check_burchnall(m, P.one()).passed
    for n in range(5):
        assert check_burchnall(m, P({n: 1})).passed


def test_burchnall_derived_case():
    assert check_burchnall(4, P({5: 3, 1: -1, 0: 2})).passed


def test_burchnall_rejects_laurent():
    with pytest.raises(ValueError):
        check_burchnall(1, P({-1: 1}))


@given(st.integers(0, 6), laurent(lo=0, hi=6, max_terms=5))
def test_ops_rodrigues_random(m, f):
    assert check_ops_rodrigues_link(m, f).passed


def test_ops_rodrigues_small():
    assert check_ops_rodrigues_link(2, P.one()).passed


def test_classical_nielsen_examples():
    assert check_classical_nielsen(1, 1).passed
    assert check_classical_nielsen(3, 2).passed
    for m in range(6):
        assert check_classical_nielsen(m, 0).passed


def test_classical_nielsen_printed_form_fails():
    rep = check_classical_nielsen(3, 1, Variant.PAPER)
    assert rep.status is Status.FAIL
    assert check_classical_nielsen(1, 2, Variant.PAPER).status is Status.SKIPPED


def test_recurrence16_counterexample():
    reps = {(r.identity_id, r.variant): r for r in check_recurrences(1, 1)}
    assert reps["recurrence16", Variant.CORRECTED].passed
    paper = reps["recurrence16", Variant.PAPER]
    assert paper.status is Status.FAIL
    assert paper.residual == P({2: 4})
    assert str(paper.residual) == "4*x^2"
    for name in ("recurrence13", "recurrence14", "recurrence15"):
        assert reps[name, Variant.PAPER].passed


def test_recurrence13_at_n0():
    for m in range(8):
        assert check_recurrence13_n0(m).passed


def test_addition_examples():
    assert check_addition(1, 1).passed
    for n in range(5):
        assert check_addition(0, n).passed
    for m in range(5):
        assert check_addition(m, 0).passed


def test_runge_upper_limit():
    for m in range(7):
        assert check_runge(m, 0, Variant.CORRECTED).passed
    # printed limit n < m truncates the sum
    assert check_runge(3, 1, Variant.PAPER).status is Status.FAIL
    assert check_runge(3, 5, Variant.PAPER).passed


def test_corollary_c_cases():
    assert alternating_sum(1, 2).is_zero()
    assert alternating_sum(2, 1).is_zero()
    # (2,0): sum equals 2 * H_2(0) / 2! = -2
    assert alternating_sum(2, 0) == P({0: -2}, RAT, "t")
    assert ids.check_corollary_c(1, 2, Variant.CORRECTED).passed
    assert ids.check_corollary_c(2, 1, Variant.CORRECTED).passed
    assert ids.check_corollary_c(2, 1, Variant.PAPER).passed
    assert ids.check_corollary_c(2, 0, Variant.PAPER).status is Status.FAIL
    assert ids.check_corollary_c(2, 0, Variant.CORRECTED).status is Status.SKIPPED


@pytest.mark.parametrize("m,n", [(0, 0), (1, 2), (2, 1), (3, 3), (4, 2), (2, 5)])
def test_corollaries_a_b_value(m, n):
    assert ids.check_corollary_a(m, n).passed
    assert ids.check_corollary_b(m, n).passed
    assert ids.check_corollary_c_value(m, n).passed


def test_generating_rows():
    s = generating_series(6)
    for n in range(7):
        assert s.coeff(0, n) == P({n: Fraction(1, ids.factorial(n))}, RAT)
    from hermite2.hermite import classical
    for m in range(7):
        assert s.coeff(m, 0) == classical(m).promote(RAT) * Fraction(1, ids.factorial(m))
    assert s.coeff(1, 1) == P({2: 2, 0: -1}, RAT)


@pytest.mark.parametrize("N", [0, 1, 4, 8])
def test_generating_check(N):
    assert check_generating(N).passed


def test_exp_xy_low_orders():
    assert check_exp_xy(0).passed
    assert check_exp_xy(1).passed
    assert check_exp_xy(2).passed
    s1 = hermite2(1, 0) - hermite2(0, 1)
    assert s1 == P({1: 1})


def test_derivative_checks():
    assert check_derivative_recurrence(0, 0).passed
    assert check_derivative_recurrence(1, 1).passed
    assert check_derivative_recurrence(3, 2).passed
    assert check_higher_derivative(2, 2, 2).passed
    rep = check_higher_derivative(1, 1, 5)
    assert rep.passed and hermite2(1, 1).derivative(5).is_zero()


def test_nielsen_two_index_examples():
    assert check_nielsen_two_index(0, 3, 2).passed
    assert check_nielsen_two_index(1, 1, 1).passed
    assert check_nielsen_two_index(2, 1, 2).passed
    assert check_nielsen_two_index(1, 1, 0).status is Status.SKIPPED


def test_nielsen_n0_examples():
    for m, r in [(0, 4), (1, 1), (2, 3)]:
        assert all(rep.passed for rep in check_nielsen_n0(m, r))


def test_burchnall_gh_examples():
    params = GHParams(2, 3, Fraction(1))
    assert check_burchnall_gh(3, params, P.one()).passed
    f = hermite2(2, 2).promote(RAT).shift(-2)
    assert check_burchnall_gh(2, GHParams(2, 2, 1), f).passed
    assert check_burchnall_gh(3, GHParams(2, 0, 1), P({3: 1})).passed


@given(st.integers(0, 4), st.integers(1, 3), st.integers(0, 3),
       st.sampled_from([Fraction(1), Fraction(-1, 3), Fraction(5, 2)]),
       laurent(RAT, lo=-3, hi=4, max_terms=4))
def test_burchnall_gh_random(m, gamma, alpha, p, f):
    assert check_burchnall_gh(m, GHParams(gamma, alpha, p), f).passed


def test_suite_all_zero_config():
    reps = run_suite(SuiteConfig.zero())
    assert reps and verdict(reps, "corrected")
    assert reps == sorted(reps, key=CheckReport.sort_key)


def test_suite_dual_variants_and_selection():
    cfg = SuiteConfig(m_max=2, n_max=2, r_max=2, nu_max=2, series_order=3, exp_order=3,
                      addition_max=4, nielsen_mr_max=2, nielsen_n_max=2, burchnall_cases=3)
    reps = run_suite(cfg)
    assert verdict(reps, "corrected")
    assert not verdict(reps, "paper")
    for identity in ids.DUAL_IDS:
        variants = {r.variant for r in by_id(reps, identity)}
        assert variants == {Variant.PAPER, Variant.CORRECTED}, identity
    assert all(r.variant is Variant.PAPER for r in select(reps, "paper"))
    assert not any(r.variant is Variant.PAPER and r.identity_id in ids.DUAL_IDS
                   for r in select(reps, "corrected"))


def test_suite_is_deterministic():
    cfg = SuiteConfig.zero(m_max=2, n_max=2, burchnall_cases=5)
    a = [r.to_dict() for r in run_suite(cfg)]
    b = [r.to_dict() for r in run_suite(cfg)]
    assert a == b


def test_suite_id_filter():
    reps = run_suite(SuiteConfig(ids={"recurrence16"}, m_min=1, m_max=1, n_min=1, n_max=1))
    assert [(r.identity_id, r.variant) for r in reps] == [
        ("recurrence16", Variant.CORRECTED), ("recurrence16", Variant.PAPER)]


def test_identity_ids_cover_groups():
    names = ids.identity_ids()
    for expected in ("recurrence16", "generating", "nielsen_two_index", "oracle_rodrigues", "hm1_relation"):
        assert expected in names


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(m_max=-1)
    with pytest.raises(ValueError):
        SuiteConfig(variant="typo")


def test_addition_corollaries_bundle():
    reps = check_addition_corollaries(2, 0)
    assert [r.identity_id for r in reps] == ["corollary_a", "corollary_b", "corollary_c", "corollary_c",
                                            "corollary_c_value"]
    assert [r.status for r in reps] == [Status.PASS, Status.PASS, Status.FAIL, Status.SKIPPED, Status.PASS]
