"""Exact coefficient rings.

Integers are plain Python ``int`` and rationals are :class:`fractions.Fraction`
(both already canonical: arbitrary precision, reduced, positive denominator).
The only ring implemented here is ``Q(sqrt 2)`` as :class:`QuadExt`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

SQRT2_FLOAT = 1.4142135623730951


class CoeffRing(enum.IntEnum):
    """Coefficient ring tag. Order is the promotion lattice INT < RAT < QUAD."""

    INT = 0
    RAT = 1
    QUAD = 2

    @property
    def label(self) -> str:
        return ("int", "rat", "quad")[self.value]

    @classmethod
    def from_label(cls, label: str) -> "CoeffRing":
        return {"int": cls.INT, "rat": cls.RAT, "quad": cls.QUAD}[label]


class RingError(TypeError):
    """Mixed-ring arithmetic without explicit promotion, or a lossy narrowing."""


def factorial(k: int) -> int:
    if k < 0:
        raise ValueError(f"factorial of negative integer {k}")
    return math.factorial(k)


def gamma_int(s: int) -> int:
    """Gamma function at a positive integer: ``(s - 1)!``."""
    if s <= 0:
        raise ValueError(f"gamma_int needs s >= 1, got {s}")
    return math.factorial(s - 1)


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling(e: int, k: int) -> int:
    """``e (e-1) ... (e-k+1)``; valid for negative ``e`` as well."""
    out = 1
    for i in range(k):
        out *= e - i
    return out


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool) or not isinstance(v, (int, _RationalABC)):
        raise RingError(f"not an exact rational: {v!r}")
    return Fraction(v)


@dataclass(frozen=True, eq=False)
class QuadExt:
    """``a + b*sqrt(2)`` with rational ``a``, ``b``."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))

    @staticmethod
    def lift(v) -> "QuadExt":
        return v if isinstance(v, QuadExt) else QuadExt(_frac(v), Fraction(0))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __neg__(self):
        return QuadExt(-self.a, -self.b)

    def __add__(self, other):
        try:
            o = QuadExt.lift(other)
        except RingError:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = QuadExt.lift(other)
        except RingError:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = QuadExt.lift(other)
        except RingError:
            return NotImplemented
        return quad_mul(self, o)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - 2 * self.b * self.b

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b)

    def inverse(self) -> "QuadExt":
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("QuadExt zero has no inverse")
        return QuadExt(self.a / nrm, -self.b / nrm)

    def __truediv__(self, other):
        try:
            o = QuadExt.lift(other)
        except RingError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QuadExt.lift(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = QuadExt(1)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __float__(self):
        return to_float(self)

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b})"

    def __str__(self):
        return format_scalar(self)


SQRT2 = QuadExt(0, 1)
INV_SQRT2 = QuadExt(0, Fraction(1, 2))


def quad_mul(p: QuadExt, q: QuadExt) -> QuadExt:
    # (a + b r)(c + d r) with r^2 = 2
    return QuadExt(p.a * q.a + 2 * p.b * q.b, p.a * q.b + p.b * q.a)


def to_float(p: QuadExt) -> float:
    return float(p.a) + float(p.b) * SQRT2_FLOAT


Scalar = Union[int, Fraction, QuadExt]


def ring_of(v: Scalar) -> CoeffRing:
    if isinstance(v, QuadExt):
        return CoeffRing.QUAD
    if isinstance(v, bool):
        raise RingError("bool is not a coefficient")
    if isinstance(v, int):
        return CoeffRing.INT
    if isinstance(v, Fraction):
        return CoeffRing.INT if v.denominator == 1 else CoeffRing.RAT
    raise RingError(f"unsupported scalar {v!r}")


def coerce(v: Scalar, ring: CoeffRing) -> Scalar:
    """Embed ``v`` into ``ring``; refuses anything that would need narrowing."""
    if ring_of(v) > ring:
        raise RingError(f"{v!r} does not lie in {ring.label}")
    if ring is CoeffRing.INT:
        return int(v)
    if ring is CoeffRing.RAT:
        return Fraction(v)
    return QuadExt.lift(v)


def narrow(v: Scalar, ring: CoeffRing) -> Scalar:
    """Exactness-checked demotion, e.g. ``QuadExt(3, 0)`` to ``3``."""
    if isinstance(v, QuadExt):
        if ring < CoeffRing.QUAD:
            if v.b != 0:
                raise RingError(f"{v!r} has an irrational part")
            v = v.a
        else:
            return v
    return coerce(v, ring)


# --- serialization ------------------------------------------------------

def format_rational(v) -> str:
    v = _frac(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"-3/2"``, ``"4"`` or a decimal like ``"0.5"`` exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def scalar_to_json(v: Scalar):
    if isinstance(v, QuadExt):
        return {"a": format_rational(v.a), "b": format_rational(v.b)}
    return format_rational(v)


def scalar_from_json(obj, ring: CoeffRing) -> Scalar:
    if isinstance(obj, dict):
        v = QuadExt(parse_rational(obj["a"]), parse_rational(obj["b"]))
    else:
        v = parse_rational(str(obj))
    return narrow(v, ring)


def format_scalar(v: Scalar) -> str:
    if isinstance(v, QuadExt):
        if v.b == 0:
            return format_rational(v.a)
        mag = abs(v.b)
        rad = "sqrt2" if mag == 1 else f"{format_rational(mag)}*sqrt2"
        if v.a == 0:
            return rad if v.b > 0 else f"-{rad}"
        sign = "+" if v.b > 0 else "-"
        return f"({format_rational(v.a)} {sign} {rad})"
    return format_rational(v)
