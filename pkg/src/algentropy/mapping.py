"""Three-point rational mappings and their three evaluation modes.

A Mapping holds the update rule x_{n+1} = num(x, y; n) / den(x, y; n)
with x = x_n, y = x_{n-1}, plus parameter bindings and coefficient
streams.  Three step flavours share one specialization path:

  * step            exact projective evaluation on Q ∪ {∞}
  * step_symbolic   exact reduced rational functions of the seed variable
  * step_series     truncated Laurent series in the perturbation

Projective evaluation never substitutes ∞: both arguments enter as
coordinate pairs and the update is evaluated in bihomogeneous form, so
values at infinity come out of degree comparisons exactly.  The result
(0 : 0) is the INDETERMINATE signal that a perturbation analysis is
required.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import intpoly
from .errors import (DegreeCapExceeded, DenominatorVanishesIdentically,
                     UnboundSymbol)
from .laurent import DEFAULT_TERMS, LaurentSeries
from .mpoly import MPoly
from .polynomials import Polynomial
from .rationals import INDETERMINATE, ExtRational
from .ratfun import RationalFunction
from .streams import CoefficientStream

STREAM_SHIFTS = (-1, 0, 1)


def stream_symbol(name: str, shift: int) -> str:
    if shift == 0:
        return name
    return f"{name}[n{shift:+d}]"


class Mapping:
    """Immutable mapping definition with bound parameters and streams."""

    __slots__ = ("name", "num", "den", "parameters", "streams",
                 "stream_refs", "text", "_cache")

    def __init__(self, name: str, num: MPoly, den: MPoly,
                 parameters: dict[str, Fraction] | None = None,
                 streams: dict[str, CoefficientStream] | None = None,
                 text: str | None = None):
        parameters = {k: Fraction(v) for k, v in (parameters or {}).items()}
        streams = dict(streams or {})
        if den.is_zero:
            raise DenominatorVanishesIdentically(
                "mapping denominator is identically zero")
        # joint scalar content normal form (same factor on both, so the
        # ratio is untouched)
        joint = _joint_content(num, den)
        if joint not in (0, 1):
            num = num.scale(1 / joint)
            den = den.scale(1 / joint)
        # strip common monomial factors x^a y^b the expression parser
        # introduces when summing fractions; they would otherwise show up
        # as spurious (0 : 0) results along the axes
        num, den = _strip_common_monomial(num, den)
        stream_refs: dict[str, tuple[str, int]] = {}
        for sym in set(num.symbols_used()) | set(den.symbols_used()):
            if sym in ("x", "y") or sym in parameters:
                continue
            base, shift = _parse_stream_symbol(sym)
            if base not in streams:
                raise UnboundSymbol(f"symbol {sym!r} is not bound "
                                    "to a parameter or stream")
            stream_refs[sym] = (base, shift)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "parameters", parameters)
        object.__setattr__(self, "streams", streams)
        object.__setattr__(self, "stream_refs", stream_refs)
        object.__setattr__(self, "text", text)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, *a):
        raise AttributeError("Mapping is immutable")

    @property
    def is_autonomous(self) -> bool:
        return not self.stream_refs

    def with_parameters(self, **overrides) -> "Mapping":
        params = dict(self.parameters)
        params.update({k: Fraction(v) for k, v in overrides.items()})
        return Mapping(self.name, self.num, self.den, params,
                       self.streams, self.text)

    def with_stream(self, name: str, stream: CoefficientStream) -> "Mapping":
        streams = dict(self.streams)
        streams[name] = stream
        return Mapping(self.name, self.num, self.den, self.parameters,
                       streams, self.text)

    def specialize(self, n: int):
        """Bivariate (num, den) coefficient dicts at step n, plus degrees.

        Returns (num_xy, den_xy, dx, dy) where the dicts map (i, j) to
        Fraction and dx, dy are the shared homogenization degrees.
        Cached per n; recomputation is idempotent.
        """
        cached = self._cache.get(n)
        if cached is not None:
            return cached
        values = dict(self.parameters)
        for sym, (base, shift) in self.stream_refs.items():
            values[sym] = self.streams[base].value_at(n + shift)
        num_xy = self.num.substitute(values).to_xy()
        den_xy = self.den.substitute(values).to_xy()
        if not den_xy:
            raise DenominatorVanishesIdentically(
                f"denominator vanishes identically at step n={n}")
        dx = max(max((i for i, _ in num_xy), default=0),
                 max((i for i, _ in den_xy), default=0))
        dy = max(max((j for _, j in num_xy), default=0),
                 max((j for _, j in den_xy), default=0))
        result = (num_xy, den_xy, dx, dy)
        self._cache[n] = result
        return result

    def __repr__(self):
        return f"Mapping({self.name}: ({self.num}) / ({self.den}))"


def _joint_content(num: MPoly, den: MPoly) -> Fraction:
    num_g, den_l = 0, 1
    for poly in (num, den):
        for c in poly.terms.values():
            num_g = math.gcd(num_g, abs(c.numerator))
            den_l = den_l * c.denominator // math.gcd(den_l, c.denominator)
    return Fraction(num_g, den_l) if num_g else Fraction(0)


def _parse_stream_symbol(sym: str) -> tuple[str, int]:
    if "[" not in sym:
        return sym, 0
    base, _, rest = sym.partition("[")
    inner = rest.rstrip("]")
    if inner in ("n", ""):
        return base, 0
    if inner.startswith("n"):
        inner = inner[1:]
    return base, int(inner)


# ---------------------------------------------------------------------------
# projective numeric step
# ---------------------------------------------------------------------------

def _clear_coeffs(xy: dict) -> tuple[dict, int]:
    den = 1
    for c in xy.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {m: int(c * den) for m, c in xy.items()}, den


def step(m: Mapping, n: int, xn, xprev):
    """One exact projective step; INDETERMINATE marks a (0 : 0) result."""
    num_xy, den_xy, dx, dy = m.specialize(n)
    xn = _as_ext(xn)
    xprev = _as_ext(xprev)
    p, q = xn.num, xn.den
    r, s = xprev.num, xprev.den
    # shared clearing factor between num and den cancels in the ratio
    num_int, ln = _clear_coeffs(num_xy)
    den_int, ld = _clear_coeffs(den_xy)
    scale = ld, ln  # multiply num terms by ld, den terms by ln
    ppow = _powers(p, dx)
    qpow = _powers(q, dx)
    rpow = _powers(r, dy)
    spow = _powers(s, dy)
    nval = sum(c * ppow[i] * qpow[dx - i] * rpow[j] * spow[dy - j]
               for (i, j), c in num_int.items()) * scale[0]
    dval = sum(c * ppow[i] * qpow[dx - i] * rpow[j] * spow[dy - j]
               for (i, j), c in den_int.items()) * scale[1]
    if nval == 0 and dval == 0:
        return INDETERMINATE
    return ExtRational(nval, dval)


def _powers(base: int, top: int) -> list[int]:
    out = [1]
    for _ in range(top):
        out.append(out[-1] * base)
    return out


def _as_ext(v) -> ExtRational:
    if isinstance(v, ExtRational):
        return v
    return ExtRational(Fraction(v))


# ---------------------------------------------------------------------------
# symbolic step (rational functions of the seed variable)
# ---------------------------------------------------------------------------

class SymbolicState:
    """Internal iterate value scalar * P(z)/Q(z), P, Q primitive integer."""

    __slots__ = ("p", "q", "scalar")

    def __init__(self, p: list[int], q: list[int], scalar: Fraction):
        self.p = p
        self.q = q
        self.scalar = scalar

    @classmethod
    def from_rational_function(cls, rf: RationalFunction) -> "SymbolicState":
        sn, p = rf.num.to_integer()
        sd, q = rf.den.to_integer()
        if not p:
            return cls([], [1], Fraction(1))
        return cls(p, q, sn / sd)

    @classmethod
    def from_constant(cls, c: Fraction) -> "SymbolicState":
        c = Fraction(c)
        if c == 0:
            return cls([], [1], Fraction(1))
        return cls([1], [1], c)

    @classmethod
    def seed_variable(cls) -> "SymbolicState":
        return cls([0, 1], [1], Fraction(1))

    @property
    def degree(self) -> int:
        return max(intpoly.degree(self.p), intpoly.degree(self.q), 0)

    def to_rational_function(self) -> RationalFunction:
        if not self.p:
            return RationalFunction.constant(0)
        den = Polynomial.from_int_coeffs(self.q)
        lead = den.leading
        num = Polynomial.from_int_coeffs(self.p) * (self.scalar / lead)
        return RationalFunction(num, den.monic(), _normalized=True)


def engine_step(m: Mapping, n: int, cur: SymbolicState, prev: SymbolicState,
                cap: int | None = None) -> SymbolicState:
    """Substitute the two iterate values into the update rule and reduce."""
    num_xy, den_xy, dx, dy = m.specialize(n)
    num_int, ln = _clear_coeffs(num_xy)
    den_int, ld = _clear_coeffs(den_xy)

    sn, sd = cur.scalar.numerator, cur.scalar.denominator
    tn, td = prev.scalar.numerator, prev.scalar.denominator

    ppow = _poly_powers(cur.p, dx)
    qpow = _poly_powers(cur.q, dx)
    rpow = _poly_powers(prev.p, dy)
    spow = _poly_powers(prev.q, dy)
    snp = _powers(sn, dx)
    sdp = _powers(sd, dx)
    tnp = _powers(tn, dy)
    tdp = _powers(td, dy)

    t_cache: dict[int, list[int]] = {}

    def t_of(i: int) -> list[int]:
        got = t_cache.get(i)
        if got is None:
            got = intpoly.mul(ppow[i], qpow[dx - i])
            t_cache[i] = got
        return got

    def assemble(terms: dict, coeff_scale: int) -> list[int]:
        by_j: dict[int, list[int]] = {}
        for (i, j), c in terms.items():
            k = c * coeff_scale * snp[i] * sdp[dx - i] * tnp[j] * tdp[dy - j]
            piece = intpoly.scale(t_of(i), k)
            acc = by_j.get(j)
            by_j[j] = piece if acc is None else intpoly.add(acc, piece)
        total: list[int] = []
        for j, block in by_j.items():
            u = intpoly.mul(rpow[j], spow[dy - j])
            total = intpoly.add(total, intpoly.mul(block, u))
        return total

    raw_num = assemble(num_int, ld)
    raw_den = assemble(den_int, ln)

    if cap is not None:
        worst = max(intpoly.degree(raw_num), intpoly.degree(raw_den))
        if worst > cap:
            raise DegreeCapExceeded(
                f"unreduced iterate degree {worst} exceeds cap {cap}", [])

    if not raw_den:
        raise DenominatorVanishesIdentically(
            f"iterate at step n={n} is the constant infinity")
    if not raw_num:
        return SymbolicState([], [1], Fraction(1))

    cn, pn = intpoly.primitive(raw_num)
    cd, pd = intpoly.primitive(raw_den)
    g, np_, dp_ = intpoly.gcd_cofactors(pn, pd)
    if dp_[-1] < 0:
        np_, dp_ = intpoly.neg(np_), intpoly.neg(dp_)
    return SymbolicState(np_, dp_, Fraction(cn, cd))


def _poly_powers(p: list[int], top: int) -> list[list[int]]:
    out = [[1]]
    for _ in range(top):
        out.append(intpoly.mul(out[-1], p))
    return out


def step_symbolic(m: Mapping, n: int, xn: RationalFunction,
                  xprev: RationalFunction) -> RationalFunction:
    """Exact reduced rational function for the next iterate."""
    cur = SymbolicState.from_rational_function(xn)
    prev = SymbolicState.from_rational_function(xprev)
    return engine_step(m, n, cur, prev).to_rational_function()


# ---------------------------------------------------------------------------
# series step (perturbation tracing)
# ---------------------------------------------------------------------------

def step_series(m: Mapping, n: int, xn: LaurentSeries, xprev: LaurentSeries,
                terms: int = DEFAULT_TERMS) -> LaurentSeries:
    """One step in truncated Laurent arithmetic."""
    num_xy, den_xy, dx, dy = m.specialize(n)
    ypow = _series_powers(xprev, dy)
    nval = _eval_series(num_xy, xn, ypow, dx)
    dval = _eval_series(den_xy, xn, ypow, dx)
    return nval * dval.inverse(terms)


def _series_powers(s: LaurentSeries, top: int) -> list[LaurentSeries]:
    out = [LaurentSeries.constant(1)]
    for _ in range(top):
        out.append(out[-1] * s)
    return out


def _eval_series(xy: dict, x: LaurentSeries, ypow: list[LaurentSeries],
                 dx: int) -> LaurentSeries:
    rows: dict[int, LaurentSeries] = {}
    for (i, j), c in xy.items():
        piece = ypow[j] * c
        acc = rows.get(i)
        rows[i] = piece if acc is None else acc + piece
    total = LaurentSeries.zero()
    for i in range(dx, -1, -1):
        total = total * x
        row = rows.get(i)
        if row is not None:
            total = total + row
    return total
