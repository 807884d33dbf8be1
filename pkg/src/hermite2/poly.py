"""Sparse exact polynomials.

``LaurentPoly``  univariate, signed exponents, one coefficient ring per instance
``BiPoly``       bivariate in (x, y), nonnegative exponents
``PolySeries2``  (u, v) power series truncated at total degree N, with
                 rational ``LaurentPoly`` coefficients

All three are immutable; every constructor drops zero coefficients so equality
is structural.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from .rings import (
    CoeffRing,
    QuadExt,
    RingError,
    Scalar,
    binomial,
    coerce,
    falling,
    format_scalar,
    narrow,
    scalar_from_json,
    scalar_to_json,
)


def _join(a: CoeffRing, b: CoeffRing) -> CoeffRing:
    if a is not b:
        raise RingError(f"ring mismatch: {a.label} vs {b.label}; promote explicitly")
    return a


def _scalar_in(c: Scalar, ring: CoeffRing) -> Scalar:
    return coerce(c, ring)


class LaurentPoly:
    """Finite sum ``sum c_k x^k`` over integer ``k``."""

    __slots__ = ("var", "ring", "_terms", "_hash")

    def __init__(
        self,
        terms: Optional[Mapping[int, Scalar]] = None,
        ring: CoeffRing = CoeffRing.INT,
        var: str = "x",
    ):
        self.var = var
        self.ring = ring
        clean: Dict[int, Scalar] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = coerce(c, ring)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, Scalar], ring: CoeffRing, var: str) -> "LaurentPoly":
        # trusted path: caller guarantees coefficients already live in ``ring``
        obj = cls.__new__(cls)
        obj.var = var
        obj.ring = ring
        obj._terms = {e: c for e, c in terms.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, ring: CoeffRing = CoeffRing.INT, var: str = "x") -> "LaurentPoly":
        return cls._raw({}, ring, var)

    @classmethod
    def one(cls, ring: CoeffRing = CoeffRing.INT, var: str = "x") -> "LaurentPoly":
        return cls.monomial(0, 1, ring, var)

    @classmethod
    def monomial(cls, exp: int, coeff: Scalar = 1, ring: CoeffRing = CoeffRing.INT,
                 var: str = "x") -> "LaurentPoly":
        return cls({exp: coeff}, ring, var)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], ring: CoeffRing = CoeffRing.INT,
                    var: str = "x", start: int = 0) -> "LaurentPoly":
        """Dense ascending coefficient list beginning at exponent ``start``."""
        return cls({start + i: c for i, c in enumerate(coeffs)}, ring, var)

    # -- inspection -------------------------------------------------------

    def terms(self) -> Tuple[Tuple[int, Scalar], ...]:
        """Nonzero ``(exponent, coefficient)`` pairs, ascending exponent."""
        return tuple(sorted(self._terms.items()))

    def coeff(self, exp: int) -> Scalar:
        return self._terms.get(exp, coerce(0, self.ring))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def degree(self) -> Optional[int]:
        """Largest exponent, ``None`` for the zero polynomial."""
        return max(self._terms) if self._terms else None

    @property
    def valuation(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    @property
    def leading_coeff(self) -> Scalar:
        if not self._terms:
            return coerce(0, self.ring)
        return self._terms[self.degree]

    def has_negative_exponents(self) -> bool:
        return any(e < 0 for e in self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.var == other.var and self.ring is other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- ring changes -----------------------------------------------------

    def promote(self, ring: CoeffRing) -> "LaurentPoly":
        if ring < self.ring:
            raise RingError(f"promote goes upward only ({self.ring.label} -> {ring.label})")
        if ring is self.ring:
            return self
        return LaurentPoly._raw({e: coerce(c, ring) for e, c in self._terms.items()}, ring, self.var)

    def narrow(self, ring: CoeffRing) -> "LaurentPoly":
        """Demote to ``ring``; raises :class:`RingError` if any coefficient is lost."""
        return LaurentPoly._raw({e: narrow(c, ring) for e, c in self._terms.items()}, ring, self.var)

    def rename(self, var: str) -> "LaurentPoly":
        return LaurentPoly._raw(self._terms, self.ring, var)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "LaurentPoly") -> CoeffRing:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
        return _join(self.ring, other.ring)

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        ring = self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return LaurentPoly._raw(out, ring, self.var)

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self.ring, self.var)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return poly_mul(self, other)
        try:
            return poly_scale(self, other)
        except RingError:
            return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = LaurentPoly.one(self.ring, self.var)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``x**k`` (``k`` may be negative)."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()}, self.ring, self.var)

    def derivative(self, order: int = 1) -> "LaurentPoly":
        return poly_derivative(self, order)

    def scale_arg(self, c: Scalar) -> "LaurentPoly":
        return poly_scale_arg(self, c)

    def __call__(self, x0):
        return poly_eval(self, x0)

    # -- rendering --------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "var": self.var,
            "ring": self.ring.label,
            "terms": [[e, scalar_to_json(c)] for e, c in self.terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LaurentPoly":
        ring = CoeffRing.from_label(obj["ring"])
        return cls({int(e): scalar_from_json(c, ring) for e, c in obj["terms"]}, ring, obj.get("var", "x"))

    def __str__(self):
        return format_plain(self)

    def __repr__(self):
        return f"LaurentPoly({format_plain(self)!r}, ring={self.ring.label})"


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    ring = p._check(q)
    out: Dict[int, Scalar] = {}
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            e = e1 + e2
            if e in out:
                out[e] = out[e] + c1 * c2
            else:
                out[e] = c1 * c2
    return LaurentPoly._raw(out, ring, p.var)


def poly_scale(p: LaurentPoly, c: Scalar) -> LaurentPoly:
    c = _scalar_in(c, p.ring)
    if not c:
        return LaurentPoly.zero(p.ring, p.var)
    return LaurentPoly._raw({e: a * c for e, a in p._terms.items()}, p.ring, p.var)


def poly_derivative(p: LaurentPoly, order: int = 1) -> LaurentPoly:
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    if order == 0:
        return p
    out = {}
    for e, c in p._terms.items():
        f = falling(e, order)
        if f:
            out[e - order] = c * f
    return LaurentPoly._raw(out, p.ring, p.var)


def _is_unit(c: Scalar, ring: CoeffRing) -> bool:
    if not c:
        return False
    if ring is CoeffRing.INT:
        return c in (1, -1)
    return True


def poly_scale_arg(p: LaurentPoly, c: Scalar) -> LaurentPoly:
    """``q(x) = p(c x)``: the coefficient of ``x^k`` is multiplied by ``c^k``."""
    c = _scalar_in(c, p.ring)
    if p.has_negative_exponents() and not _is_unit(c, p.ring):
        raise ValueError(f"cannot substitute x -> {format_scalar(c)}*x with negative exponents")
    if not p._terms:
        return p
    lo, hi = min(p._terms), max(p._terms)
    powers: Dict[int, Scalar] = {0: coerce(1, p.ring)}
    if hi > 0:
        acc = powers[0]
        for k in range(1, hi + 1):
            acc = acc * c
            powers[k] = acc
    if lo < 0:
        if p.ring is CoeffRing.INT:
            inv = c  # +-1 is self-inverse
        elif p.ring is CoeffRing.RAT:
            inv = Fraction(1) / c
        else:
            inv = c.inverse()
        acc = powers[0]
        for k in range(1, -lo + 1):
            acc = acc * inv
            powers[-k] = acc
    return LaurentPoly._raw({e: a * powers[e] for e, a in p._terms.items()}, p.ring, p.var)


def poly_eval(p: LaurentPoly, x0):
    """Horner evaluation, separately over the polynomial and ``1/x`` parts."""
    pos = {e: c for e, c in p._terms.items() if e >= 0}
    neg = {-e: c for e, c in p._terms.items() if e < 0}
    if neg and not x0:
        raise ZeroDivisionError("evaluating negative powers at 0")
    total = _horner(pos, x0)
    if neg:
        inv = 1 / x0 if not isinstance(x0, int) else Fraction(1, x0)
        total = total + _horner(neg, inv)
    return total


def _horner(terms: Dict[int, Scalar], x0):
    if not terms:
        return 0
    acc = 0
    for e in range(max(terms), -1, -1):
        acc = acc * x0 + terms.get(e, 0)
    return acc


def poly_shift_expand(p: LaurentPoly) -> "BiPoly":
    """``p(x + y)`` as a bivariate polynomial."""
    if p.has_negative_exponents():
        raise ValueError("shift expansion needs a polynomial without negative exponents")
    out: Dict[Tuple[int, int], Scalar] = {}
    for e, c in p._terms.items():
        for i in range(e + 1):
            out[(i, e - i)] = c * binomial(e, i)
    return BiPoly._raw(out, p.ring)


# --- plain / latex rendering -------------------------------------------------

def _monomial(var: str, e: int, latex: bool) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    if latex:
        return f"{var}^{{{e}}}" if (e < 0 or e > 9) else f"{var}^{e}"
    return f"{var}^{e}"


def format_plain(p: LaurentPoly) -> str:
    """Ascending powers with explicit ``*`` and ``^``, e.g. ``-6 + 54*x^2``."""
    if not p._terms:
        return "0"
    parts = []
    for i, (e, c) in enumerate(p.terms()):
        neg = _is_negative(c)
        mag = -c if neg else c
        mono = _monomial(p.var, e, latex=False)
        if not mono:
            body = format_scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_scalar(mag)}*{mono}"
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def format_latex(p: LaurentPoly) -> str:
    """Compact LaTeX form in the layout of a printed table cell: ``-1+2x^2``."""
    if not p._terms:
        return "0"
    out = []
    for i, (e, c) in enumerate(p.terms()):
        neg = _is_negative(c)
        mag = -c if neg else c
        mono = _monomial(p.var, e, latex=True)
        if isinstance(mag, QuadExt):
            num = format_scalar(mag).replace("sqrt2", r"\sqrt{2}").replace("*", "")
        elif isinstance(mag, Fraction) and mag.denominator != 1:
            num = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        else:
            num = str(mag)
        body = num if not mono else (mono if mag == 1 else f"{num}{mono}")
        sign = "-" if neg else ("+" if i else "")
        out.append(sign + body)
    return "".join(out)


def _is_negative(c: Scalar) -> bool:
    if isinstance(c, QuadExt):
        # sign of the leading displayed component; QuadExt has no order used here
        return c.a < 0 if c.a != 0 else c.b < 0
    return c < 0


# --- bivariate ----------------------------------------------------------------

class BiPoly:
    """Sparse polynomial in ``x`` and ``y``; keys are ``(i, j)`` for ``x^i y^j``."""

    __slots__ = ("ring", "_terms")

    def __init__(self, terms: Optional[Mapping[Tuple[int, int], Scalar]] = None,
                 ring: CoeffRing = CoeffRing.INT):
        self.ring = ring
        clean = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError("BiPoly exponents must be nonnegative")
                if c:
                    clean[(int(i), int(j))] = coerce(c, ring)
        self._terms = clean

    @classmethod
    def _raw(cls, terms, ring):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = {k: c for k, c in terms.items() if c}
        return obj

    @classmethod
    def from_univariate(cls, p: LaurentPoly, var: str = "x") -> "BiPoly":
        if p.has_negative_exponents():
            raise ValueError("BiPoly has no negative exponents")
        if var == "x":
            return cls._raw({(e, 0): c for e, c in p.terms()}, p.ring)
        if var == "y":
            return cls._raw({(0, e): c for e, c in p.terms()}, p.ring)
        raise ValueError(f"unknown variable {var}")

    @classmethod
    def outer(cls, px: LaurentPoly, qy: LaurentPoly) -> "BiPoly":
        """``px(x) * qy(y)``."""
        ring = _join(px.ring, qy.ring)
        if px.has_negative_exponents() or qy.has_negative_exponents():
            raise ValueError("BiPoly has no negative exponents")
        return cls._raw({(i, j): a * b for i, a in px._terms.items() for j, b in qy._terms.items()}, ring)

    def terms(self):
        return tuple(sorted(self._terms.items()))

    def coeff(self, i: int, j: int) -> Scalar:
        return self._terms.get((i, j), coerce(0, self.ring))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def total_degree(self) -> Optional[int]:
        return max(i + j for i, j in self._terms) if self._terms else None

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.ring is other.ring and self._terms == other._terms

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def promote(self, ring: CoeffRing) -> "BiPoly":
        if ring < self.ring:
            raise RingError("promote goes upward only")
        return BiPoly._raw({k: coerce(c, ring) for k, c in self._terms.items()}, ring)

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        ring = _join(self.ring, other.ring)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return BiPoly._raw(out, ring)

    def __neg__(self):
        return BiPoly._raw({k: -c for k, c in self._terms.items()}, self.ring)

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            ring = _join(self.ring, other.ring)
            out: Dict[Tuple[int, int], Scalar] = {}
            for (i1, j1), c1 in self._terms.items():
                for (i2, j2), c2 in other._terms.items():
                    k = (i1 + i2, j1 + j2)
                    out[k] = out[k] + c1 * c2 if k in out else c1 * c2
            return BiPoly._raw(out, ring)
        try:
            c = coerce(other, self.ring)
        except RingError:
            return NotImplemented
        return BiPoly._raw({k: a * c for k, a in self._terms.items()}, self.ring)

    def __rmul__(self, other):
        return self.__mul__(other)

    def eval(self, x0, y0):
        total = 0
        for (i, j), c in self._terms.items():
            total = total + c * (x0 ** i) * (y0 ** j)
        return total

    def to_json_obj(self) -> dict:
        return {
            "vars": ["x", "y"],
            "ring": self.ring.label,
            "terms": [[[i, j], scalar_to_json(c)] for (i, j), c in self.terms()],
        }

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for n, ((i, j), c) in enumerate(self.terms()):
            neg = _is_negative(c)
            mag = -c if neg else c
            mono = "*".join(m for m in (_monomial("x", i, False), _monomial("y", j, False)) if m)
            body = format_scalar(mag) if not mono else (mono if mag == 1 else f"{format_scalar(mag)}*{mono}")
            parts.append(("-" if neg else "") + body if n == 0 else ("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"BiPoly({str(self)!r}, ring={self.ring.label})"


# --- truncated bivariate series ------------------------------------------------

class PolySeries2:
    """``sum_{m+n<=N} c_{m,n}(x) u^m v^n`` with ``c_{m,n}`` rational Laurent polynomials."""

    __slots__ = ("order", "_coeffs", "var")

    def __init__(self, order: int, coeffs: Optional[Mapping[Tuple[int, int], LaurentPoly]] = None,
                 var: str = "x"):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        self.order = order
        self.var = var
        clean = {}
        for (m, n), c in (coeffs or {}).items():
            if m < 0 or n < 0:
                raise ValueError("series indices must be nonnegative")
            if m + n > order or c.is_zero():
                continue
            if c.var != var:
                raise ValueError("coefficient variable mismatch")
            clean[(m, n)] = c.promote(CoeffRing.RAT)
        self._coeffs = clean

    @classmethod
    def one(cls, order: int, var: str = "x") -> "PolySeries2":
        return cls(order, {(0, 0): LaurentPoly.one(CoeffRing.RAT, var)}, var)

    def coeff(self, m: int, n: int) -> LaurentPoly:
        return self._coeffs.get((m, n), LaurentPoly.zero(CoeffRing.RAT, self.var))

    def items(self) -> Iterator[Tuple[Tuple[int, int], LaurentPoly]]:
        return iter(sorted(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, PolySeries2):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def _same(self, other: "PolySeries2") -> None:
        if self.order != other.order or self.var != other.var:
            raise ValueError("series truncation/variable mismatch")

    def __add__(self, other):
        if not isinstance(other, PolySeries2):
            return NotImplemented
        self._same(other)
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out[k] + c if k in out else c
        return PolySeries2(self.order, out, self.var)

    def __neg__(self):
        return PolySeries2(self.order, {k: -c for k, c in self._coeffs.items()}, self.var)

    def __sub__(self, other):
        if not isinstance(other, PolySeries2):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PolySeries2):
            return series_mul(self, other)
        if isinstance(other, LaurentPoly):
            other = other.promote(CoeffRing.RAT)
            return PolySeries2(self.order, {k: c * other for k, c in self._coeffs.items()}, self.var)
        try:
            c = coerce(other, CoeffRing.RAT)
        except RingError:
            return NotImplemented
        return PolySeries2(self.order, {k: v * c for k, v in self._coeffs.items()}, self.var)

    def __rmul__(self, other):
        return self.__mul__(other)

    def to_json_obj(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [[[m, n], c.to_json_obj()] for (m, n), c in self.items()],
        }

    def __str__(self):
        if not self._coeffs:
            return "0"
        return " + ".join(f"[{format_plain(c)}]*u^{m}*v^{n}" for (m, n), c in self.items())

    def __repr__(self):
        return f"PolySeries2(order={self.order}, {self})"


def series_mul(s: PolySeries2, t: PolySeries2) -> PolySeries2:
    s._same(t)
    N = s.order
    out: Dict[Tuple[int, int], LaurentPoly] = {}
    for (m1, n1), a in s._coeffs.items():
        for (m2, n2), b in t._coeffs.items():
            if m1 + n1 + m2 + n2 > N:
                continue
            k = (m1 + m2, n1 + n2)
            prod = a * b
            out[k] = out[k] + prod if k in out else prod
    return PolySeries2(N, out, s.var)


def series_exp(s: PolySeries2) -> PolySeries2:
    """``sum_{k=0}^{N} s^k / k!``; exact because ``s`` has no constant term."""
    if not s.coeff(0, 0).is_zero():
        raise ValueError("series_exp needs a zero constant term")
    total = PolySeries2.one(s.order, s.var)
    term = total
    for k in range(1, s.order + 1):
        term = series_mul(term, s) * Fraction(1, k)
        if term.is_zero():
            break
        total = total + term
    return total
