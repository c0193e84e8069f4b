"""Univariate polynomials over Q, exactly.

Coefficients are ``fractions.Fraction`` stored densely (index = power) with
no trailing zeros; the zero polynomial has an empty coefficient tuple and
degree NEG_INFINITY.  Heavy operations (gcd, exact division) clear
denominators and run on the integer kernels in :mod:`algentropy.intpoly`,
so the class stays cheap to use while scaling to iterate-sized inputs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from . import intpoly
from .errors import ExactDivisionError

NEG_INFINITY = float("-inf")


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact coefficient: {x!r}")


class Polynomial:
    """Immutable dense polynomial over Q in one variable (printed as z)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def variable(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((_frac(c),))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [_frac(c)])

    @classmethod
    def from_int_coeffs(cls, ints: Sequence[int]) -> "Polynomial":
        return cls([Fraction(i) for i in ints])

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self):
        """Degree; NEG_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        if len(a) * len(b) >= intpoly._KRONECKER_CUTOFF:
            ia, da = _clear(a)
            ib, db = _clear(b)
            prod = intpoly.mul(ia, ib)
            s = Fraction(1, da * db)
            return Polynomial([c * s for c in prod])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __divmod__(self, other):
        """Euclidean division over Q."""
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        lb = other.coeffs[-1]
        q = [Fraction(0)] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            top = r[-1] / lb
            k = len(r) - 1 - db
            q[k] = top
            for j, c in enumerate(other.coeffs):
                r[j + k] -= top * c
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return Polynomial(q), Polynomial(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ExactDivisionError("polynomial division is not exact")
        return q

    def divides(self, other: "Polynomial") -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    # -- calculus & evaluation ----------------------------------------------

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        out = Fraction(0) if not isinstance(x, Polynomial) else Polynomial()
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def sign_at(self, x: Fraction) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def sign_at_pos_infinity(self) -> int:
        if not self.coeffs:
            return 0
        return 1 if self.coeffs[-1] > 0 else -1

    def compose_shift(self, a: Fraction) -> "Polynomial":
        """p(z + a) via Horner in (z + a)."""
        shift = Polynomial((a, 1))
        return self(shift)

    # -- normal forms --------------------------------------------------------

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lb = self.coeffs[-1]
        if lb == 1:
            return self
        return Polynomial([c / lb for c in self.coeffs])

    def to_integer(self) -> tuple[Fraction, list[int]]:
        """Write self = scalar * P with P primitive integer, positive lc."""
        if self.is_zero:
            return Fraction(0), []
        ints, den = _clear(self.coeffs)
        cont, prim = intpoly.primitive(ints)
        if prim[-1] < 0:
            cont, prim = -cont, intpoly.neg(prim)
        return Fraction(cont, den), prim

    def primitive_int_coeffs(self) -> list[int]:
        return self.to_integer()[1]

    # -- gcd family ----------------------------------------------------------

    def gcd(self, other: "Polynomial") -> "Polynomial":
        return poly_gcd(self, other)

    def square_free_part(self) -> "Polynomial":
        if self.is_zero or len(self.coeffs) <= 2:
            return self.monic()
        g = poly_gcd(self, self.derivative())
        return self.exact_div(g).monic()

    def square_free_decomposition(self) -> list[tuple["Polynomial", int]]:
        """Yun's algorithm: monic pairwise-coprime (factor, multiplicity)."""
        if self.is_zero:
            raise ValueError("zero polynomial has no square-free decomposition")
        p = self.monic()
        if p.degree == 0:
            return []
        d = p.derivative()
        a = poly_gcd(p, d)
        b = p.exact_div(a)
        c = d.exact_div(a) - b.derivative()
        out = []
        i = 1
        while b.degree > 0:
            a = poly_gcd(b, c)
            if a.degree > 0:
                out.append((a, i))
            b, rest = b.exact_div(a), c.exact_div(a)
            c = rest - b.derivative()
            i += 1
        return out

    # -- printing ------------------------------------------------------------

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_poly(self.coeffs, "z")


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    raise TypeError(f"cannot coerce {x!r} to Polynomial")


def _clear(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    """Common-denominator clearing: coeffs == ints / den."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in coeffs], den


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic exact gcd over Q; divides both inputs exactly."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) undefined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    ia = a.primitive_int_coeffs()
    ib = b.primitive_int_coeffs()
    g = intpoly.gcd_primitive(ia, ib)
    return Polynomial.from_int_coeffs(g).monic()


def format_poly(coeffs: Sequence[Fraction], var: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "- " if c < 0 else ("+ " if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            zk = var if k == 1 else f"{var}^{k}"
            body = zk if mag == 1 else f"{mag}*{zk}"
        parts.append(sign + body)
    return " ".join(parts)
