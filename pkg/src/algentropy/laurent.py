"""Truncated Laurent series in a perturbation variable, with exact windows.

A series carries its valuation v, the rational coefficients of
eps^v .. eps^(v+K-1), and the first exponent it knows *nothing* about.
Two flavours coexist:

  * exact series (``bound is None``): finitely many terms, known to all
    orders — constants, the bare perturbation eps, and anything built from
    them by ring operations;
  * truncated series (``bound`` an int): produced by inversion, which is
    where infinite tails first appear.

Window bookkeeping is conservative: sums and products never report a
coefficient beyond what both operands guarantee, and a nonzero series is
normalized so its first stored coefficient is nonzero.  When every known
coefficient of a truncated result cancels, nothing at all is known about
the value and PrecisionExhausted is raised (callers retry at doubled
precision).  The exact zero is representable, so true cancellations of
exact quantities stay silent.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvertZero, PrecisionExhausted

DEFAULT_TERMS = 16
MAX_TERMS = 256


class LaurentSeries:
    """Coefficients of eps^valuation .. ; bound = first unknown exponent."""

    __slots__ = ("valuation", "coeffs", "bound")

    def __init__(self, valuation: int, coeffs, bound: int | None = None):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        # normalize: leading stored coefficient nonzero
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        valuation += lead
        cs = cs[lead:]
        while cs and cs[-1] == 0:
            cs.pop()
        if bound is not None:
            cs = cs[:max(bound - valuation, 0)]
            if not cs:
                raise PrecisionExhausted(
                    "all known coefficients vanished; the window is empty")
        object.__setattr__(self, "valuation", valuation if cs else 0)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "bound", bound)

    def __setattr__(self, *a):
        raise AttributeError("LaurentSeries is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentSeries":
        return cls(0, ())

    @classmethod
    def constant(cls, c) -> "LaurentSeries":
        return cls(0, (Fraction(c),))

    @classmethod
    def eps(cls, power: int = 1) -> "LaurentSeries":
        return cls(power, (Fraction(1),))

    # -- queries ---------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_exact(self) -> bool:
        return self.bound is None

    @property
    def precision(self) -> int | None:
        """Guaranteed window length K, or None for exact series."""
        if self.bound is None:
            return None
        return self.bound - self.valuation

    def coefficient(self, k: int) -> Fraction:
        if self.bound is not None and k >= self.bound:
            raise PrecisionExhausted(f"coefficient of eps^{k} is beyond the window")
        if self.is_zero or k < self.valuation:
            return Fraction(0)
        i = k - self.valuation
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def limit_value(self) -> Fraction | None:
        """The eps -> 0 limit: a Fraction when valuation >= 0, else None (pole)."""
        if self.is_zero:
            return Fraction(0)
        if self.valuation > 0:
            return Fraction(0)
        if self.valuation == 0:
            return self.coeffs[0]
        return None

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.valuation, self.coeffs, self.bound) == (
            other.valuation, other.coeffs, other.bound)

    def __hash__(self):
        return hash((self.valuation, self.coeffs, self.bound))

    # -- ring operations ---------------------------------------------------------

    def __add__(self, other):
        other = _as_series(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        bound = _min_bound(self.bound, other.bound)
        lo = min(self.valuation, other.valuation)
        hi = max(self.valuation + len(self.coeffs), other.valuation + len(other.coeffs))
        if bound is not None:
            hi = min(hi, bound)
        out = [Fraction(0)] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            k = self.valuation + i - lo
            if k < len(out):
                out[k] += c
        for i, c in enumerate(other.coeffs):
            k = other.valuation + i - lo
            if k < len(out):
                out[k] += c
        return LaurentSeries(lo, out, bound)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.valuation, [-c for c in self.coeffs], self.bound)

    def __sub__(self, other):
        return self + (-_as_series(other))

    def __rsub__(self, other):
        return _as_series(other) + (-self)

    def __mul__(self, other):
        other = _as_series(other)
        if self.is_zero or other.is_zero:
            if self.is_exact and other.is_exact:
                return LaurentSeries.zero()
            # zero times a truncated unknown tail is still exactly zero
            return LaurentSeries.zero()
        v = self.valuation + other.valuation
        if self.bound is None:
            bound = None if other.bound is None else self.valuation + other.bound
        elif other.bound is None:
            bound = other.valuation + self.bound
        else:
            bound = min(self.valuation + other.bound, other.valuation + self.bound)
        n = len(self.coeffs) + len(other.coeffs) - 1
        if bound is not None:
            n = min(n, bound - v)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if a == 0 or i >= n:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= n:
                    break
                if b:
                    out[i + j] += a * b
        return LaurentSeries(v, out, bound)

    __rmul__ = __mul__

    def inverse(self, terms: int = DEFAULT_TERMS) -> "LaurentSeries":
        """Multiplicative inverse, correct to `terms` coefficients.

        val(1/s) = -val(s).  Exact inputs yield a window of exactly
        `terms`; truncated inputs keep their own (possibly smaller) window.
        """
        if self.is_zero:
            raise InvertZero("cannot invert the exact zero series")
        k = self.precision
        n = terms if k is None else min(terms, k)
        a0 = self.coeffs[0]
        inv = [Fraction(1) / a0]
        for m in range(1, n):
            s = Fraction(0)
            for j in range(1, min(m, len(self.coeffs) - 1) + 1):
                s += self.coeffs[j] * inv[m - j]
            inv.append(-s / a0)
        v = -self.valuation
        return LaurentSeries(v, inv, v + n)

    def __truediv__(self, other):
        other = _as_series(other)
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = LaurentSeries.constant(1)
        for _ in range(k):
            out = out * self
        return out

    # -- display --------------------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            k = self.valuation + i
            if k == 0:
                term = f"{c}"
            elif k == 1:
                term = f"{c}*eps"
            else:
                term = f"{c}*eps^{k}"
            parts.append(term)
        body = " + ".join(parts).replace("+ -", "- ")
        if self.bound is not None:
            body += f" + O(eps^{self.bound})"
        return body

    __repr__ = __str__


def _as_series(x) -> LaurentSeries:
    if isinstance(x, LaurentSeries):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentSeries.constant(x)
    raise TypeError(f"cannot coerce {x!r} to LaurentSeries")


def _min_bound(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def laurent_arith(op: str, s: LaurentSeries, t: LaurentSeries | None = None,
                  terms: int = DEFAULT_TERMS) -> LaurentSeries:
    """Dispatch {add, sub, mul, inv}; inv ignores t."""
    if op == "add":
        return s + t
    if op == "sub":
        return s - t
    if op == "mul":
        return s * t
    if op == "inv":
        return s.inverse(terms)
    raise ValueError(f"unknown operation {op!r}")
