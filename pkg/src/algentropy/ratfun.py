"""Reduced rational functions over Q in one variable.

Canonical form: numerator and denominator coprime, denominator monic and
nonzero.  With that normal form, equality of values is structural equality
of the pair.  The degree of a rational function is max(deg num, deg den),
which counts the preimages of a generic target value.
"""

from __future__ import annotations

from fractions import Fraction

from . import intpoly
from .errors import ZeroDenominator
from .polynomials import Polynomial


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None, *, _normalized=False):
        if den is None:
            den = Polynomial.one()
        if _normalized:
            object.__setattr__(self, "num", num)
            object.__setattr__(self, "den", den)
            return
        if den.is_zero:
            raise ZeroDenominator("denominator is the zero polynomial")
        if num.is_zero:
            object.__setattr__(self, "num", Polynomial.zero())
            object.__setattr__(self, "den", Polynomial.one())
            return
        ni = num.primitive_int_coeffs()
        di = den.primitive_int_coeffs()
        g, nq, dq = intpoly.gcd_cofactors(ni, di)
        scalar = (num.leading / Fraction(ni[-1])) / (den.leading / Fraction(di[-1]))
        nq_poly = Polynomial.from_int_coeffs(nq)
        dq_poly = Polynomial.from_int_coeffs(dq)
        lead = dq_poly.leading
        object.__setattr__(self, "num", nq_poly * (scalar / lead))
        object.__setattr__(self, "den", dq_poly.monic())

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls(Polynomial.constant(c))

    @classmethod
    def variable(cls) -> "RationalFunction":
        return cls(Polynomial.variable())

    @property
    def degree(self):
        """max(deg num, deg den): the generic preimage count."""
        return max(self.num.degree, self.den.degree)

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree <= 0

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __sub__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.den - other.num * self.den,
                                self.den * other.den)

    def __mul__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        other = _as_rf(other)
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

    def evaluate(self, z: Fraction):
        """Value at a rational point: a Fraction, or None at a pole
        (the projective value there is infinity)."""
        dv = self.den(z)
        if dv == 0:
            return None
        return self.num(z) / dv

    def __str__(self):
        if self.den == Polynomial.one():
            return f"({self.num})"
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction(x)
    if isinstance(x, (int, Fraction)):
        return RationalFunction.constant(x)
    raise TypeError(f"cannot coerce {x!r} to RationalFunction")


def ratfun_reduce(num: Polynomial, den: Polynomial) -> RationalFunction:
    """Coprime, monic-denominator normal form of num/den."""
    return RationalFunction(num, den)
