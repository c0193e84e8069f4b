"""Exact arithmetic on the projective rational line Q ∪ {∞}.

A point is stored as a reduced coordinate pair (num : den) of arbitrary
precision integers with gcd(|num|, |den|) = 1 and den >= 0.  The single
point at infinity is (1 : 0); finite values have den > 0; (0 : 0) is not
a point.  Arithmetic is carried out on the coordinate pairs, so forms like
0·∞, ∞−∞, 0/0 and ∞/∞ surface naturally as the (0 : 0) pair and are
returned as the INDETERMINATE sentinel rather than raised.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union


class _Indeterminate:
    """Singleton marker for undefined projective forms (a value, not an error)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Indeterminate"

    def __bool__(self):
        return False


INDETERMINATE = _Indeterminate()

ExtOrIndet = Union["ExtRational", _Indeterminate]


class ExtRational:
    """A point of the projective rational line, reduced and sign-normalized."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if isinstance(num, Fraction):
            if den != 1:
                raise ValueError("pass a single Fraction or an int pair")
            num, den = num.numerator, num.denominator
        num = int(num)
        den = int(den)
        if num == 0 and den == 0:
            raise ValueError("(0 : 0) is not a projective point")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        if den == 0:
            num = 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("ExtRational is immutable")

    @classmethod
    def infinity(cls) -> "ExtRational":
        return cls(1, 0)

    @classmethod
    def from_fraction(cls, q: Fraction) -> "ExtRational":
        return cls(q.numerator, q.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    def as_fraction(self) -> Fraction:
        if self.den == 0:
            raise ZeroDivisionError("infinity has no finite value")
        return Fraction(self.num, self.den)

    def __eq__(self, other):
        if isinstance(other, _Indeterminate):
            return False
        if isinstance(other, (int, Fraction)):
            other = ExtRational(Fraction(other))
        if not isinstance(other, ExtRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == 0:
            return "ExtRational(inf)"
        if self.den == 1:
            return f"ExtRational({self.num})"
        return f"ExtRational({self.num}/{self.den})"

    def __str__(self):
        if self.den == 0:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    # Projective arithmetic on coordinate pairs.  (0 : 0) results become
    # INDETERMINATE; everything else is a valid point.

    def _combine(self, other, p, q) -> ExtOrIndet:
        if p == 0 and q == 0:
            return INDETERMINATE
        return ExtRational(p, q)

    def __add__(self, other) -> ExtOrIndet:
        other = _coerce(other)
        return self._combine(other,
                             self.num * other.den + other.num * self.den,
                             self.den * other.den)

    def __sub__(self, other) -> ExtOrIndet:
        other = _coerce(other)
        return self._combine(other,
                             self.num * other.den - other.num * self.den,
                             self.den * other.den)

    def __mul__(self, other) -> ExtOrIndet:
        other = _coerce(other)
        return self._combine(other, self.num * other.num, self.den * other.den)

    def __truediv__(self, other) -> ExtOrIndet:
        other = _coerce(other)
        return self._combine(other, self.num * other.den, self.den * other.num)

    def __neg__(self) -> "ExtRational":
        return ExtRational(-self.num, self.den)


def _coerce(value) -> ExtRational:
    if isinstance(value, ExtRational):
        return value
    if isinstance(value, (int, Fraction)):
        return ExtRational(Fraction(value))
    raise TypeError(f"cannot interpret {value!r} as a projective rational")


_OPS = {
    "add": ExtRational.__add__,
    "sub": ExtRational.__sub__,
    "mul": ExtRational.__mul__,
    "div": ExtRational.__truediv__,
}


def ext_rational_arith(op: str, x: ExtRational, y: ExtRational) -> ExtOrIndet:
    """Apply one of {add, sub, mul, div} projectively.

    Returns INDETERMINATE for the forms 0·∞, ∞−∞ (equivalently ∞+∞),
    0/0 and ∞/∞.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(_coerce(x), _coerce(y))


INF = ExtRational.infinity()
