"""Sparse multivariate polynomials over Q for mapping definitions.

A mapping update rule is a ratio of polynomials in the formal variables
x (= x_n) and y (= x_{n-1}) whose coefficients mention named parameters
and shifted stream references.  Everything is kept in one sparse
polynomial over a fixed variable tuple; specializing parameters and
stream values collapses it to a bivariate polynomial in (x, y).

Exponent keys are tuples aligned with ``vars``; coefficients are
Fraction and never zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping as TMapping


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: TMapping[tuple, Fraction] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[tuple(mono)] = c if isinstance(c, Fraction) else Fraction(c)
        object.__setattr__(self, "vars", tuple(vars))
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("MPoly is immutable")

    @classmethod
    def constant(cls, vars, c) -> "MPoly":
        c = Fraction(c)
        if c == 0:
            return cls(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, vars, name) -> "MPoly":
        exp = [0] * len(vars)
        exp[vars.index(name)] = 1
        return cls(vars, {tuple(exp): Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def _check(self, other: "MPoly"):
        if self.vars != other.vars:
            raise ValueError("variable tuples differ")

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return MPoly(self.vars, out)

    def __neg__(self) -> "MPoly":
        return MPoly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        out: dict[tuple, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return MPoly(self.vars, out)

    def scale(self, k) -> "MPoly":
        k = Fraction(k)
        if k == 0:
            return MPoly(self.vars)
        return MPoly(self.vars, {m: c * k for m, c in self.terms.items()})

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power")
        out = MPoly.constant(self.vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def degree_in(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(m[i] for m in self.terms)

    def uses(self, name: str) -> bool:
        i = self.vars.index(name)
        return any(m[i] for m in self.terms)

    def symbols_used(self) -> set[str]:
        out = set()
        for mono in self.terms:
            for i, e in enumerate(mono):
                if e:
                    out.add(self.vars[i])
        return out

    def substitute(self, values: TMapping[str, Fraction]) -> "MPoly":
        """Replace the given variables by rational values."""
        idx = {self.vars.index(name): Fraction(v) for name, v in values.items()}
        remaining = tuple(v for i, v in enumerate(self.vars) if i not in idx)
        out: dict[tuple, Fraction] = {}
        for mono, c in self.terms.items():
            scalar = c
            for i, val in idx.items():
                e = mono[i]
                if e:
                    scalar *= val ** e
            if scalar == 0:
                continue
            new_mono = tuple(e for i, e in enumerate(mono) if i not in idx)
            out[new_mono] = out.get(new_mono, Fraction(0)) + scalar
        return MPoly(remaining, out)

    def to_xy(self) -> dict[tuple[int, int], Fraction]:
        """Collapse to {(i, j): coeff} in (x, y); all other vars must be gone."""
        ix = self.vars.index("x")
        iy = self.vars.index("y")
        out = {}
        for mono, c in self.terms.items():
            for k, e in enumerate(mono):
                if e and k not in (ix, iy):
                    raise ValueError(f"unsubstituted symbol {self.vars[k]!r}")
            out[(mono[ix], mono[iy])] = c
        return out

    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators / lcm of denominators)."""
        from math import gcd, lcm
        num_g, den_l = 0, 1
        for c in self.terms.values():
            num_g = gcd(num_g, abs(c.numerator))
            den_l = lcm(den_l, c.denominator)
        return Fraction(num_g, den_l) if num_g else Fraction(0)

    def clear_content(self) -> "MPoly":
        c = self.content()
        if c in (0, 1):
            return self
        return self.scale(1 / c)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            factors = []
            for name, e in zip(self.vars, mono):
                if e == 1:
                    factors.append(_atom(name))
                elif e > 1:
                    factors.append(f"{_atom(name)}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            sign = "- " if c < 0 else ("+ " if parts else "")
            parts.append(sign + body)
        return " ".join(parts)

    __repr__ = __str__


def _atom(name: str) -> str:
    return name
