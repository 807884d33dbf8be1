"""Builders for H_m, H_{m,n} and the Gould-Hopper family.

H_{m,n} = (-d/dx + 2x)^m (x^n). Four constructions are provided and agree
exactly; :func:`h2_recurrence` (memoized) is the production builder and the
other three serve as oracles.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from .poly import LaurentPoly
from .rings import CoeffRing, binomial, factorial

INT = CoeffRing.INT
RAT = CoeffRing.RAT

_X = LaurentPoly.monomial(1)


def _zero() -> LaurentPoly:
    return LaurentPoly.zero(INT)


@lru_cache(maxsize=None)
def classical(m: int) -> LaurentPoly:
    """Physicists' Hermite H_m via H_{k+1} = 2x H_k - 2k H_{k-1}."""
    if m < 0:
        return _zero()
    prev, cur = _zero(), LaurentPoly.one(INT)
    for k in range(m):
        prev, cur = cur, (cur * 2).shift(1) - prev * (2 * k)
    return cur


def classical_at_zero(k: int) -> int:
    """H_k(0): zero for odd k, (-1)^(k/2) k!/(k/2)! for even k."""
    _validate_at_zero()
    return _classical_at_zero(k)


def _classical_at_zero(k: int) -> int:
    if k < 0 or k % 2:
        return 0
    h = k // 2
    return (-1) ** h * factorial(k) // factorial(h)


@lru_cache(maxsize=1)
def _validate_at_zero(k_max: int = 30) -> bool:
    for k in range(k_max + 1):
        if classical(k).coeff(0) != _classical_at_zero(k):
            raise RuntimeError(f"H_k(0) closed form disagrees with H_{k} at 0")
    return True


# --- the four H_{m,n} constructions ------------------------------------------

def h2_explicit(m: int, n: int) -> LaurentPoly:
    """Finite sum over k <= min(m, n) of (-1)^k C(n,k) m!/(m-k)! x^(n-k) H_{m-k}."""
    if m < 0 or n < 0:
        return _zero()
    out = _zero()
    fm = factorial(m)
    for k in range(min(m, n) + 1):
        c = (-1) ** k * binomial(n, k) * (fm // factorial(m - k))
        out = out + (classical(m - k) * c).shift(n - k)
    return out


def creation(p: LaurentPoly) -> LaurentPoly:
    """p -> -p' + 2x p."""
    return (p * 2).shift(1) - p.derivative()


def h2_operator(m: int, n: int) -> LaurentPoly:
    if m < 0 or n < 0:
        return _zero()
    p = LaurentPoly.monomial(n)
    for _ in range(m):
        p = creation(p)
    return p


def weighted_derivative(p: LaurentPoly) -> LaurentPoly:
    """d/dx (p e^{-x^2}) = (p' - 2x p) e^{-x^2}; returns the polynomial part."""
    return p.derivative() - (p * 2).shift(1)


def h2_rodrigues(m: int, n: int) -> LaurentPoly:
    if m < 0 or n < 0:
        return _zero()
    p = LaurentPoly.monomial(n)
    for _ in range(m):
        p = weighted_derivative(p)
    return p if m % 2 == 0 else -p


class HermiteCache:
    """Append-only memo of H_{m,n} for m, n >= 0.

    Cells are filled by H_{m,n} = x H_{m,n-1} - m H_{m-1,n-1} over the base
    column H_{m,0} = H_m. ``get`` is safe to call from several threads.
    """

    def __init__(self):
        self._memo: Dict[Tuple[int, int], LaurentPoly] = {}
        self._lock = threading.RLock()

    def __len__(self):
        return len(self._memo)

    def __contains__(self, key):
        return key in self._memo

    def items(self):
        return list(self._memo.items())

    def get(self, m: int, n: int) -> LaurentPoly:
        if m < 0 or n < 0:
            return _zero()
        hit = self._memo.get((m, n))
        if hit is not None:
            return hit
        with self._lock:
            return self._fill(m, n)

    def _fill(self, m: int, n: int) -> LaurentPoly:
        memo = self._memo
        # H_{m,n} needs rows m-n+j .. m of column j, for j = 0..n
        for j in range(n + 1):
            for i in range(max(0, m - n + j), m + 1):
                if (i, j) in memo:
                    continue
                if j == 0:
                    memo[(i, 0)] = classical(i)
                else:
                    left = memo[(i, j - 1)].shift(1)
                    memo[(i, j)] = left - memo[(i - 1, j - 1)] * i if i else left
        return memo[(m, n)]


DEFAULT_CACHE = HermiteCache()


def h2_recurrence(m: int, n: int, cache: HermiteCache | None = None) -> LaurentPoly:
    return (cache or DEFAULT_CACHE).get(m, n)


def hermite2(m: int, n: int) -> LaurentPoly:
    """H_{m,n}(x) with integer coefficients; zero when m < 0 or n < 0."""
    return DEFAULT_CACHE.get(m, n)


BUILDERS = {
    "explicit": h2_explicit,
    "operator": h2_operator,
    "rodrigues": h2_rodrigues,
    "recurrence": lambda m, n: h2_recurrence(m, n, HermiteCache()),
}


def h2_at_zero(m: int, n: int) -> int:
    if m < 0 or n < 0:
        raise ValueError("h2_at_zero needs m, n >= 0")
    if m < n:
        return 0
    return (-1) ** n * (factorial(m) // factorial(m - n)) * classical_at_zero(m - n)


def h2_eval_float(m: int, n: int, x: float) -> float:
    """Double-precision H_{m,n}(x) by running the index recurrences on floats."""
    if m < 0 or n < 0:
        return 0.0
    col = [1.0, 2.0 * x]
    for k in range(1, m):
        col.append(2.0 * x * col[k] - 2.0 * k * col[k - 1])
    col = col[: m + 1]
    for _ in range(n):
        col = [x * col[0]] + [x * col[i] - i * col[i - 1] for i in range(1, m + 1)]
    return col[m]


# --- Gould-Hopper -------------------------------------------------------------

@dataclass(frozen=True)
class GHParams:
    gamma: int = 2
    alpha: int = 0
    p: Fraction = Fraction(1)

    def __post_init__(self):
        if self.gamma < 1:
            raise ValueError("gamma must be >= 1")
        if self.alpha < 0:
            raise ValueError("alpha must be >= 0")
        object.__setattr__(self, "p", Fraction(self.p))


def gh_operator(params: GHParams):
    """f -> -f' + p*gamma*x^(gamma-1) f - (alpha/x) f, on rational Laurent polynomials."""
    mult = LaurentPoly({params.gamma - 1: params.p * params.gamma, -1: -params.alpha}, RAT)

    def apply(f: LaurentPoly) -> LaurentPoly:
        f = f.promote(RAT)
        return mult * f - f.derivative()

    return apply


def gould_hopper(m: int, params: GHParams) -> LaurentPoly:
    if m < 0:
        return LaurentPoly.zero(RAT)
    op = gh_operator(params)
    f = LaurentPoly.one(RAT)
    for _ in range(m):
        f = op(f)
    return f


# --- alpha triangle ------------------------------------------------------------

@dataclass(frozen=True)
class AlphaTriangle:
    rows: Tuple[Tuple[int, ...], ...]

    def __getitem__(self, jnu: Tuple[int, int]) -> int:
        j, nu = jnu
        return self.rows[nu][j]

    @property
    def nu_max(self) -> int:
        return len(self.rows) - 1


def alpha_closed_form(j: int, nu: int) -> int:
    return 2 ** (nu - j) * binomial(nu, j)


def alpha_triangle(nu_max: int) -> AlphaTriangle:
    """Rows 0..nu_max of alpha_{j,nu}; the closed form 2^(nu-j) C(nu,j) is checked on every row."""
    if nu_max < 0:
        raise ValueError("nu_max must be >= 0")
    rows: List[Tuple[int, ...]] = [(1,)]
    for nu in range(1, nu_max + 1):
        prev = rows[-1]
        row = [2 ** nu] + [2 * prev[j] + prev[j - 1] for j in range(1, nu)] + [1]
        rows.append(tuple(row))
    for nu, row in enumerate(rows):
        if any(a != alpha_closed_form(j, nu) for j, a in enumerate(row)):
            raise RuntimeError(f"alpha closed form fails on row {nu}")
    return AlphaTriangle(tuple(rows))


def h2_derivative_formula(r: int, n: int, nu: int, builder=hermite2) -> LaurentPoly:
    """r! n! sum_j alpha_{j,nu} H_{r-nu+j, n-j} / ((r-nu+j)! (n-j)!)."""
    if r < 0 or n < 0 or nu < 0:
        raise ValueError("r, n, nu must be >= 0")
    tri = alpha_triangle(nu)
    out = _zero()
    for j in range(nu + 1):
        a, b = r - nu + j, n - j
        if a < 0 or b < 0:
            continue
        c = tri[j, nu] * (factorial(r) // factorial(a)) * (factorial(n) // factorial(b))
        out = out + builder(a, b) * c
    return out
