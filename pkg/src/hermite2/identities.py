"""Exact residual checks for the H_{m,n} identities.

Every check builds both sides of an identity with exact arithmetic and reports
PASS iff their difference is structurally the zero polynomial (or series).
Four printed formulas appear to contain typos; for those the check emits two
reports, one for the formula as printed (``Variant.PAPER``) and one for the
corrected form (``Variant.CORRECTED``).
"""
from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .hermite import (
    GHParams,
    alpha_triangle,
    classical,
    classical_at_zero,
    gh_operator,
    gould_hopper,
    h2_at_zero,
    h2_derivative_formula,
    h2_explicit,
    h2_operator,
    h2_recurrence,
    h2_rodrigues,
    hermite2,
    creation,
    weighted_derivative,
)
from .poly import BiPoly, LaurentPoly, PolySeries2, poly_shift_expand, series_exp
from .rings import INV_SQRT2, SQRT2, CoeffRing, binomial, factorial, gamma_int

INT, RAT, QUAD = CoeffRing.INT, CoeffRing.RAT, CoeffRing.QUAD

Residual = Union[LaurentPoly, BiPoly, PolySeries2]


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class Variant(str, enum.Enum):
    PAPER = "paper"
    CORRECTED = "corrected"


# identities whose printed form is suspected to be wrong
DUAL_IDS = frozenset({"classical_nielsen", "runge", "recurrence16", "corollary_c"})


@dataclass(frozen=True)
class CheckReport:
    identity_id: str
    indices: Tuple[int, ...]
    status: Status
    variant: Variant = Variant.PAPER
    residual: Optional[Residual] = None
    reason: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @property
    def residual_digest(self) -> Optional[str]:
        """Canonical JSON of the residual for failed checks, else ``None``."""
        if self.status is not Status.FAIL or self.residual is None:
            return None
        return json.dumps(self.residual.to_json_obj(), separators=(",", ":"))

    def sort_key(self):
        return (self.identity_id, self.indices, self.variant.value)

    def to_dict(self) -> dict:
        out = {
            "id": self.identity_id,
            "indices": list(self.indices),
            "variant": self.variant.value,
            "status": self.status.value,
            "residual": (
                self.residual.to_json_obj()
                if self.status is Status.FAIL and self.residual is not None
                else None
            ),
        }
        if self.reason:
            out["reason"] = self.reason
        return out

    def summary(self) -> str:
        idx = ",".join(map(str, self.indices))
        line = f"{self.status.value.upper():7} {self.identity_id}({idx}) [{self.variant.value}]"
        if self.status is Status.FAIL and self.residual is not None:
            line += f" residual: {self.residual}"
        elif self.reason:
            line += f" ({self.reason})"
        return line


def _report(identity_id: str, indices: Sequence[int], residual: Residual,
            variant: Variant = Variant.PAPER) -> CheckReport:
    status = Status.PASS if residual.is_zero() else Status.FAIL
    return CheckReport(identity_id, tuple(indices), status, variant, residual)


def _skip(identity_id: str, indices: Sequence[int], reason: str,
          variant: Variant = Variant.PAPER) -> CheckReport:
    return CheckReport(identity_id, tuple(indices), Status.SKIPPED, variant, None, reason)


def _rat(p: LaurentPoly) -> LaurentPoly:
    return p.promote(RAT)


def _quad(p: LaurentPoly) -> LaurentPoly:
    return p.promote(QUAD)


# --- definition-level facts ------------------------------------------------------

def check_oracles(m: int, n: int) -> List[CheckReport]:
    ref = h2_explicit(m, n)
    return [
        _report("oracle_operator", (m, n), h2_operator(m, n) - ref),
        _report("oracle_rodrigues", (m, n), h2_rodrigues(m, n) - ref),
        _report("oracle_recurrence", (m, n), h2_recurrence(m, n) - ref),
    ]


def check_degree(m: int, n: int) -> CheckReport:
    """Everything at exponent >= m+n must be exactly 2^m x^(m+n)."""
    h = hermite2(m, n)
    top = LaurentPoly({e: c for e, c in h.terms() if e >= m + n})
    return _report("degree", (m, n), top - LaurentPoly.monomial(m + n, 2 ** m))


def check_symmetry(m: int, n: int) -> CheckReport:
    h = hermite2(m, n)
    return _report("symmetry", (m, n), h.scale_arg(-1) - h * (-1) ** (m + n))


def check_at_zero(m: int, n: int) -> CheckReport:
    value = hermite2(m, n)(0)
    return _report("at_zero", (m, n), LaurentPoly({0: value - h2_at_zero(m, n)}))


def check_boundary(m: int) -> List[CheckReport]:
    return [
        _report("row_m0", (m,), h2_operator(m, 0) - classical(m)),
        _report("col_0n", (m,), h2_operator(0, m) - LaurentPoly.monomial(m)),
        _report("hm1_relation", (m,), hermite2(m, 1) * 2 - classical(m + 1)),
    ]


def check_h1n(n: int) -> CheckReport:
    expected = LaurentPoly({n - 1: -n, n + 1: 2})
    return _report("h1n", (n,), hermite2(1, n) - expected)


def check_gh_relation(m: int, n: int) -> CheckReport:
    gh = gould_hopper(m, GHParams(gamma=2, alpha=n, p=Fraction(1)))
    return _report("gh_relation", (m, n), gh.shift(n) - _rat(hermite2(m, n)))


# --- operational formulas -----------------------------------------------------------

def check_burchnall(m: int, f: LaurentPoly, tag: int = 0) -> CheckReport:
    """(-d/dx + 2x)^m f against m! sum_k (-1)^k/k! H_{m-k}/(m-k)! f^(k)."""
    if f.has_negative_exponents():
        raise ValueError("check_burchnall takes an ordinary polynomial")
    lhs = f
    for _ in range(m):
        lhs = creation(lhs)
    rhs = LaurentPoly.zero(f.ring)
    for k in range(m + 1):
        rhs = rhs + classical(m - k).promote(f.ring) * f.derivative(k) * ((-1) ** k * binomial(m, k))
    return _report("burchnall", (m, tag), lhs - rhs)


def check_ops_rodrigues_link(m: int, f: LaurentPoly, tag: int = 0) -> CheckReport:
    lhs = f
    for _ in range(m):
        lhs = creation(lhs)
    rhs = f
    for _ in range(m):
        rhs = weighted_derivative(rhs)
    if m % 2:
        rhs = -rhs
    return _report("ops_rodrigues", (m, tag), lhs - rhs)


def check_burchnall_gh(m: int, params: GHParams, f: LaurentPoly, tag: int = 0) -> CheckReport:
    op = gh_operator(params)
    f = _rat(f)
    lhs = f
    for _ in range(m):
        lhs = op(lhs)
    rhs = LaurentPoly.zero(RAT)
    for k in range(m + 1):
        rhs = rhs + gould_hopper(m - k, params) * f.derivative(k) * ((-1) ** k * binomial(m, k))
    return _report("burchnall_gh", (m, tag), lhs - rhs)


# --- recurrences -------------------------------------------------------------------

def check_recurrences(m: int, n: int) -> List[CheckReport]:
    """The four three-term relations at (m, n), m, n >= 1; the fourth in both sign variants."""
    H = hermite2
    x = LaurentPoly.monomial(1)
    idx = (m, n)
    r13 = H(m, n).derivative() + H(m + 1, n) - x * H(m, n) * 2
    r14 = H(m, n) + H(m - 1, n - 1) * n - H(m - 1, n + 1) * 2
    r15 = H(m, n) + H(m - 1, n - 1) * m - x * H(m, n - 1)
    base16 = H(m - 1, n - 1) * (m - n) + H(m - 1, n + 1) * 2
    return [
        _report("recurrence13", idx, r13),
        _report("recurrence14", idx, r14),
        _report("recurrence15", idx, r15),
        _report("recurrence16", idx, base16 + x * H(m, n - 1), Variant.PAPER),
        _report("recurrence16", idx, base16 - x * H(m, n - 1), Variant.CORRECTED),
    ]


def check_recurrence13_n0(m: int) -> CheckReport:
    h = classical(m)
    return _report("recurrence13_n0", (m,), h.derivative() + classical(m + 1) - (h * 2).shift(1))


def check_derivative_recurrence(m: int, n: int) -> CheckReport:
    H = hermite2
    res = h2_explicit(m, n).derivative() - H(m - 1, n) * (2 * m) - H(m, n - 1) * n
    return _report("derivative_recurrence", (m, n), res)


def check_higher_derivative(r: int, n: int, nu: int) -> CheckReport:
    res = h2_explicit(r, n).derivative(nu) - h2_derivative_formula(r, n, nu)
    return _report("higher_derivative", (r, n, nu), res)


def check_alpha_row(nu: int) -> CheckReport:
    """Row generating polynomial sum_j alpha_{j,nu} x^j against (x + 2)^nu."""
    row = alpha_triangle(nu).rows[nu]
    lhs = LaurentPoly.from_coeffs(row)
    return _report("alpha_row", (nu,), lhs - LaurentPoly({0: 2, 1: 1}) ** nu)


# --- classical Nielsen / Runge ------------------------------------------------------------

def check_classical_nielsen(m: int, n: int, variant: Variant = Variant.CORRECTED) -> CheckReport:
    """H_{m+n} = m! n! sum_k (-2)^k/k! H_{m-k}/(m-k)! H_{n-k}/den_k.

    The printed denominator is (m-n)! for every k; the corrected one is (n-k)!.
    """
    idx = (m, n)
    if variant is Variant.PAPER and m < n:
        return _skip("classical_nielsen", idx, "(m-n)! undefined for m < n", variant)
    rhs = LaurentPoly.zero(RAT)
    for k in range(min(m, n) + 1):
        den = factorial(m - n) if variant is Variant.PAPER else factorial(n - k)
        c = Fraction(factorial(m) * factorial(n) * (-2) ** k,
                     factorial(k) * factorial(m - k) * den)
        rhs = rhs + _rat(classical(m - k) * classical(n - k)) * c
    return _report("classical_nielsen", idx, _rat(h2_rodrigues(m + n, 0)) - rhs, variant)


def _at_sqrt2(p: LaurentPoly, scale=SQRT2) -> LaurentPoly:
    return _quad(p).scale_arg(scale)


def check_runge(m: int, limit: int, variant: Variant = Variant.CORRECTED) -> CheckReport:
    """H_m(x+y) = 2^(-m/2) m! sum_{k=0}^{L} H_k(sqrt2 x)/k! H_{m-k}(sqrt2 y)/(m-k)!.

    Printed upper limit L is the unrelated letter n (passed as ``limit``);
    corrected L is m.
    """
    top = limit if variant is Variant.PAPER else m
    rhs = BiPoly(ring=QUAD)
    for k in range(top + 1):
        if m - k < 0:
            continue
        c = Fraction(factorial(m), factorial(k) * factorial(m - k))
        rhs = rhs + BiPoly.outer(_at_sqrt2(classical(k)), _at_sqrt2(classical(m - k))) * c
    rhs = rhs * INV_SQRT2 ** m
    lhs = poly_shift_expand(h2_rodrigues(m, 0)).promote(QUAD)
    return _report("runge", (m, limit), lhs - rhs, variant)


# --- addition formula and corollaries ------------------------------------------------------

def _prefactor(m: int, n: int):
    return INV_SQRT2 ** (m + n) * (factorial(m) * factorial(n))


def check_addition(m: int, n: int) -> CheckReport:
    rhs = BiPoly(ring=QUAD)
    for k in range(m + 1):
        for j in range(n + 1):
            c = Fraction(1, factorial(k) * factorial(j) * factorial(m - k) * factorial(n - j))
            px = _at_sqrt2(hermite2(k, j))
            qy = _at_sqrt2(hermite2(m - k, n - j))
            rhs = rhs + BiPoly.outer(px, qy) * c
    rhs = rhs * _prefactor(m, n)
    lhs = poly_shift_expand(h2_explicit(m, n)).promote(QUAD)
    return _report("addition", (m, n), lhs - rhs)


def _in_t(p: LaurentPoly) -> LaurentPoly:
    return p.rename("t")


def check_corollary_a(m: int, n: int) -> CheckReport:
    """x = 0 specialisation, with H_{k,j}(0) written through H_{k-j}(0)."""
    rhs = LaurentPoly.zero(QUAD, "t")
    for j in range(n + 1):
        for k in range(j, m + 1):
            h0 = classical_at_zero(k - j)
            if not h0:
                continue
            c = Fraction((-1) ** j * h0, factorial(j) * factorial(k - j)
                         * factorial(m - k) * factorial(n - j))
            rhs = rhs + _in_t(_at_sqrt2(hermite2(m - k, n - j))) * c
    rhs = rhs * _prefactor(m, n)
    return _report("corollary_a", (m, n), _in_t(_quad(h2_explicit(m, n))) - rhs)


def check_corollary_b(m: int, n: int) -> CheckReport:
    """x = y = t/2 specialisation: both factors evaluated at t/sqrt2."""
    rhs = LaurentPoly.zero(QUAD, "t")
    for k in range(m + 1):
        for j in range(n + 1):
            c = Fraction(1, factorial(k) * factorial(j) * factorial(m - k) * factorial(n - j))
            rhs = rhs + _in_t(_at_sqrt2(hermite2(k, j), INV_SQRT2) * _at_sqrt2(hermite2(m - k, n - j), INV_SQRT2)) * c
    rhs = rhs * _prefactor(m, n)
    return _report("corollary_b", (m, n), _in_t(_quad(h2_explicit(m, n))) - rhs)


def alternating_sum(m: int, n: int) -> LaurentPoly:
    """sum_{k,j} (-1)^(k+j) H_{k,j} H_{m-k,n-j} / (k! j! (m-k)! (n-j)!), rational, in t."""
    out = LaurentPoly.zero(RAT)
    for k in range(m + 1):
        for j in range(n + 1):
            c = Fraction((-1) ** (k + j),
                         factorial(k) * factorial(j) * factorial(m - k) * factorial(n - j))
            out = out + _rat(hermite2(k, j) * hermite2(m - k, n - j)) * c
    return _in_t(out)


def corollary_c_condition(m: int, n: int, variant: Variant) -> bool:
    if (m + n) % 2:
        return True
    return m > n if variant is Variant.PAPER else m < n


def check_corollary_c(m: int, n: int, variant: Variant = Variant.CORRECTED) -> CheckReport:
    """The alternating double sum vanishes when m+n is odd or (printed) m > n / (corrected) m < n."""
    if not corollary_c_condition(m, n, variant):
        return _skip("corollary_c", (m, n), "vanishing condition does not apply", variant)
    return _report("corollary_c", (m, n), alternating_sum(m, n), variant)


def check_corollary_c_value(m: int, n: int) -> CheckReport:
    """Unconditional form: the alternating sum equals 2^((m+n)/2) H_{m,n}(0) / (m! n!)."""
    s = alternating_sum(m, n)
    if (m + n) % 2 == 0:
        value = Fraction(2 ** ((m + n) // 2) * h2_at_zero(m, n), factorial(m) * factorial(n))
        s = s - LaurentPoly({0: value}, RAT, "t")
    return _report("corollary_c_value", (m, n), s)


def check_addition_corollaries(m: int, n: int) -> List[CheckReport]:
    return [
        check_corollary_a(m, n),
        check_corollary_b(m, n),
        check_corollary_c(m, n, Variant.PAPER),
        check_corollary_c(m, n, Variant.CORRECTED),
        check_corollary_c_value(m, n),
    ]


# --- generating function ----------------------------------------------------------------------

def hermite_series(order: int, builder: Callable[[int, int], LaurentPoly] = hermite2) -> PolySeries2:
    """sum_{m+n<=N} H_{m,n}(x) u^m v^n / (m! n!)."""
    coeffs = {}
    for m in range(order + 1):
        for n in range(order + 1 - m):
            coeffs[(m, n)] = _rat(builder(m, n)) * Fraction(1, factorial(m) * factorial(n))
    return PolySeries2(order, coeffs)


def exponent_series(order: int) -> PolySeries2:
    """-u^2 + (2u + v) x - u v as a series with polynomial coefficients."""
    x = LaurentPoly.monomial(1, 1, RAT)
    one = LaurentPoly.one(RAT)
    return PolySeries2(order, {(2, 0): -one, (1, 0): x * 2, (0, 1): x, (1, 1): -one})


def generating_series(order: int) -> PolySeries2:
    return series_exp(exponent_series(order))


def check_generating(order: int, builder: Callable[[int, int], LaurentPoly] = hermite2) -> CheckReport:
    return _report("generating", (order,), hermite_series(order, builder) - generating_series(order))


def check_exp_xy(s: int) -> CheckReport:
    """Order-s part of e^{xy} = sum (-1)^n H_{m,n}(x) y^(m+n) / (m! n!)."""
    lhs = LaurentPoly.zero(RAT)
    for n in range(s + 1):
        m = s - n
        lhs = lhs + _rat(hermite2(m, n)) * Fraction((-1) ** n, factorial(m) * factorial(n))
    return _report("exp_xy", (s,), lhs - LaurentPoly.monomial(s, Fraction(1, factorial(s)), RAT))


# --- Nielsen identities -------------------------------------------------------------------------

def check_nielsen_two_index(m: int, r: int, n: int) -> CheckReport:
    idx = (m, r, n)
    if n < 1:
        return _skip("nielsen_two_index", idx, "needs n >= 1; n = 0 is nielsen_n0")
    tri = alpha_triangle(m)
    pref = factorial(m) * factorial(r) * n * factorial(n)
    rhs = LaurentPoly.zero(RAT)
    for k in range(m + 1):
        outer = _rat(hermite2(m - k, n))
        for nu in range(k + 1):
            for j in range(nu + 1):
                a, b = r - nu + j, n - j
                if a < 0 or b < 0:
                    continue
                c = Fraction(
                    pref * tri[j, nu] * gamma_int(n + k - nu) * (-1) ** nu,
                    factorial(k - nu) * factorial(nu) * factorial(m - k) * factorial(n)
                    * factorial(a) * factorial(b),
                )
                term = (outer * _rat(hermite2(a, b))).shift(nu - n - k)
                rhs = rhs + term * c
    return _report("nielsen_two_index", idx, _rat(h2_explicit(m + r, n)) - rhs)


def check_nielsen_intermediate(m: int, r: int, n: int) -> CheckReport:
    """H_{m+r,n} = m! sum_k (-1)^k/k! H_{m-k,n}/(m-k)! d^k(x^(-n) H_{r,n})."""
    f = _rat(hermite2(r, n)).shift(-n)
    rhs = LaurentPoly.zero(RAT)
    for k in range(m + 1):
        rhs = rhs + _rat(hermite2(m - k, n)) * f.derivative(k) * ((-1) ** k * binomial(m, k))
    return _report("nielsen_intermediate", (m, r, n), _rat(h2_explicit(m + r, n)) - rhs)


def _nielsen_n0_rhs(m: int, r: int) -> LaurentPoly:
    rhs = LaurentPoly.zero(INT)
    hr = classical(r)
    for k in range(m + 1):
        rhs = rhs + classical(m - k) * hr.derivative(k) * ((-1) ** k * binomial(m, k))
    return rhs


def check_classical_derivative(r: int, k: int) -> CheckReport:
    """H_r^(k) = 2^k r!/(r-k)! H_{r-k}."""
    c = 2 ** k * factorial(r) // factorial(r - k) if k <= r else 0
    return _report("classical_derivative", (r, k), classical(r).derivative(k) - classical(r - k) * c)


def check_nielsen_n0(m: int, r: int) -> List[CheckReport]:
    rhs = _nielsen_n0_rhs(m, r)
    # derivative fact must hold before the termwise rewrite below is trusted
    facts = [check_classical_derivative(r, k) for k in range(m + 1)]
    rewritten = LaurentPoly.zero(RAT)
    for k in range(min(m, r) + 1):
        c = Fraction(factorial(m) * factorial(r) * (-2) ** k,
                     factorial(k) * factorial(m - k) * factorial(r - k))
        rewritten = rewritten + _rat(classical(m - k) * classical(r - k)) * c
    link = _rat(rhs) - rewritten
    if not all(f.passed for f in facts):
        bad = next(f for f in facts if not f.passed)
        link_report = CheckReport("nielsen_n0_classical", (m, r), Status.FAIL, Variant.PAPER,
                                  bad.residual, "derivative fact failed")
    else:
        link_report = _report("nielsen_n0_classical", (m, r), link)
    return [_report("nielsen_n0", (m, r), h2_rodrigues(m + r, 0) - rhs), link_report]


# --- suite ----------------------------------------------------------------------------------------

@dataclass
class SuiteConfig:
    m_max: int = 8
    n_max: int = 8
    r_max: int = 8
    nu_max: int = 6
    series_order: int = 10
    exp_order: int = 10
    addition_max: int = 10
    nielsen_mr_max: int = 5
    nielsen_n_max: int = 4
    burchnall_cases: int = 50
    m_min: int = 0
    n_min: int = 0
    r_min: int = 0
    seed: int = 20100501
    variant: str = "corrected"  # corrected | paper | both
    ids: Optional[frozenset] = None

    def __post_init__(self):
        for name in ("m_max", "n_max", "r_max", "nu_max", "series_order", "exp_order",
                     "addition_max", "nielsen_mr_max", "nielsen_n_max", "burchnall_cases",
                     "m_min", "n_min", "r_min"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.variant not in ("corrected", "paper", "both"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.ids is not None:
            self.ids = frozenset(self.ids)

    @classmethod
    def zero(cls, **kw) -> "SuiteConfig":
        base = dict(m_max=0, n_max=0, r_max=0, nu_max=0, series_order=0, exp_order=0,
                    addition_max=0, nielsen_mr_max=0, nielsen_n_max=0, burchnall_cases=0)
        base.update(kw)
        return cls(**base)

    def ms(self):
        return range(self.m_min, self.m_max + 1)

    def ns(self):
        return range(self.n_min, self.n_max + 1)

    def rs(self):
        return range(self.r_min, self.r_max + 1)


def random_poly(rng: random.Random, max_deg: int = 6, lo: int = 0, ring=INT, max_terms: int = 5) -> LaurentPoly:
    k = rng.randint(1, max_terms)
    terms = {}
    for _ in range(k):
        e = rng.randint(lo, max_deg)
        if ring is INT:
            terms[e] = rng.randint(-5, 5)
        else:
            terms[e] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return LaurentPoly(terms, ring)


def _operational_cases(cfg: SuiteConfig):
    rng = random.Random(cfg.seed)
    for t in range(cfg.burchnall_cases):
        yield t, rng.randint(0, 6), random_poly(rng)


def _gh_cases(cfg: SuiteConfig):
    rng = random.Random(cfg.seed + 1)
    for t in range(cfg.burchnall_cases):
        params = GHParams(gamma=rng.randint(1, 3), alpha=rng.randint(0, 3),
                          p=rng.choice([Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-3, 2)]))
        f = random_poly(rng, max_deg=4, lo=-3, ring=RAT)
        yield t, rng.randint(0, 5), params, f
    # the Nielsen-proof instance f = x^(-n) H_{r,n}
    t = cfg.burchnall_cases
    for n in range(1, min(cfg.nielsen_n_max, 3) + 1):
        for r in range(min(cfg.nielsen_mr_max, 3) + 1):
            f = _rat(hermite2(r, n)).shift(-n)
            yield t, min(cfg.nielsen_mr_max, 3), GHParams(2, n, Fraction(1)), f
            t += 1


def _gen_reports(cfg: SuiteConfig) -> Dict[str, Callable[[], Iterable[CheckReport]]]:
    def grid(fn):
        return lambda: (fn(m, n) for m in cfg.ms() for n in cfg.ns())

    def flat(fn, it):
        return lambda: (rep for args in it() for rep in fn(*args))

    def both(fn, it):
        return lambda: (fn(*args, v) for args in it() for v in (Variant.PAPER, Variant.CORRECTED))

    mn = lambda: ((m, n) for m in cfg.ms() for n in cfg.ns())
    mn1 = lambda: ((m, n) for m in cfg.ms() for n in cfg.ns() if m >= 1 and n >= 1)
    add_mn = lambda: ((m, n) for m, n in mn() if m + n <= cfg.addition_max)
    nielsen = lambda: ((m, r, n)
                       for m in range(cfg.m_min, min(cfg.m_max, cfg.nielsen_mr_max) + 1)
                       for r in range(cfg.r_min, min(cfg.r_max, cfg.nielsen_mr_max) + 1)
                       for n in range(max(1, cfg.n_min), min(cfg.n_max, cfg.nielsen_n_max) + 1))
    mr = lambda: ((m, r) for m in cfg.ms() for r in cfg.rs())

    return {
        "oracles": flat(check_oracles, mn),
        "degree": grid(check_degree),
        "symmetry": grid(check_symmetry),
        "at_zero": grid(check_at_zero),
        "boundary": flat(check_boundary, lambda: ((m,) for m in range(min(cfg.m_min, cfg.n_min), max(cfg.m_max, cfg.n_max) + 1))),
        "h1n": lambda: (check_h1n(n) for n in cfg.ns() if n >= 1),
        "gh_relation": grid(check_gh_relation),
        "recurrences": flat(check_recurrences, mn1),
        "recurrence13_n0": lambda: (check_recurrence13_n0(m) for m in cfg.ms()),
        "derivative_recurrence": grid(check_derivative_recurrence),
        "higher_derivative": lambda: (check_higher_derivative(r, n, nu)
                                      for r in cfg.rs() for n in cfg.ns() for nu in range(cfg.nu_max + 1)),
        "alpha_row": lambda: (check_alpha_row(nu) for nu in range(cfg.nu_max + 1)),
        "burchnall": lambda: (check_burchnall(m, f, t) for t, m, f in _operational_cases(cfg)),
        "ops_rodrigues": lambda: (check_ops_rodrigues_link(m, f, t) for t, m, f in _operational_cases(cfg)),
        "burchnall_gh": lambda: (check_burchnall_gh(m, p, f, t) for t, m, p, f in _gh_cases(cfg)),
        "classical_nielsen": both(check_classical_nielsen, mn),
        "runge": both(check_runge, lambda: ((m, n) for m, n in add_mn())),
        "addition": lambda: (check_addition(m, n) for m, n in add_mn()),
        "corollary_a": lambda: (check_corollary_a(m, n) for m, n in add_mn()),
        "corollary_b": lambda: (check_corollary_b(m, n) for m, n in add_mn()),
        "corollary_c": both(check_corollary_c, add_mn),
        "corollary_c_value": lambda: (check_corollary_c_value(m, n) for m, n in add_mn()),
        "generating": lambda: [check_generating(cfg.series_order)],
        "exp_xy": lambda: (check_exp_xy(s) for s in range(cfg.exp_order + 1)),
        "nielsen_two_index": lambda: (check_nielsen_two_index(*a) for a in nielsen()),
        "nielsen_intermediate": lambda: (check_nielsen_intermediate(*a) for a in nielsen()),
        "nielsen_n0": flat(check_nielsen_n0, mr),
    }


# groups whose reports carry several identity ids
_GROUP_MEMBERS = {
    "oracles": {"oracle_operator", "oracle_rodrigues", "oracle_recurrence"},
    "boundary": {"row_m0", "col_0n", "hm1_relation"},
    "recurrences": {"recurrence13", "recurrence14", "recurrence15", "recurrence16"},
    "nielsen_n0": {"nielsen_n0", "nielsen_n0_classical"},
}


def identity_ids() -> List[str]:
    """Every report id ``run_suite`` can emit (valid values for ``SuiteConfig.ids``)."""
    out = set()
    for group in _gen_reports(SuiteConfig.zero()):
        out |= _GROUP_MEMBERS.get(group, {group})
    return sorted(out)


def run_suite(cfg: SuiteConfig) -> List[CheckReport]:
    """Run every check over the configured ranges; both variants of dual identities are always included."""
    reports: List[CheckReport] = []
    for group, gen in _gen_reports(cfg).items():
        members = _GROUP_MEMBERS.get(group, {group})
        if cfg.ids is not None and not (members & cfg.ids):
            continue
        for rep in gen():
            if cfg.ids is None or rep.identity_id in cfg.ids:
                reports.append(rep)
    reports.sort(key=CheckReport.sort_key)
    return reports


def is_selected(rep: CheckReport, variant: str) -> bool:
    if rep.identity_id not in DUAL_IDS or variant == "both":
        return True
    return rep.variant.value == variant


def select(reports: Iterable[CheckReport], variant: str) -> List[CheckReport]:
    return [r for r in reports if is_selected(r, variant)]


def verdict(reports: Iterable[CheckReport], variant: str) -> bool:
    """True iff every selected, non-skipped report passes."""
    return all(r.status is not Status.FAIL for r in select(reports, variant))
