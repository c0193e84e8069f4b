"""From confined singularity patterns to an exact integrability verdict.

Pipeline: patterns list the positions and multiplicities at which special
values occur; for each pattern-exclusive value the preimage count of that
value is a sum of shifted spontaneous-occurrence counts.  Equating the
counts of two exclusive values gives a linear relation among the count
sequences; eliminating all but one yields an integer characteristic
polynomial in the growth ratio.  The mapping is integrable exactly when
no such polynomial has a real root greater than 1 — decided by exact
root isolation, never floating point.

Bounded contributions (cyclic patterns) are deliberately dropped: the
relations hold up to bounded error, which cannot affect the existence of
a root above 1.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (ExclusiveValueAbsent, Inconsistent, InvalidSymmetry,
                     Underdetermined)
from .polynomials import Polynomial
from .roots import RootInterval, isolate_largest_real_root
from .tokens import ValueToken, parse_token


class ShiftPolynomial:
    """Integer combination of shifts: {j: c} stands for sum c * N(n - j)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        clean = {int(j): int(c) for j, c in (terms or {}).items() if c}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("ShiftPolynomial is immutable")

    @classmethod
    def zero(cls) -> "ShiftPolynomial":
        return cls()

    @classmethod
    def single(cls, shift: int, coeff: int = 1) -> "ShiftPolynomial":
        return cls({shift: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, ShiftPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other: "ShiftPolynomial") -> "ShiftPolynomial":
        out = dict(self.terms)
        for j, c in other.terms.items():
            out[j] = out.get(j, 0) + c
        return ShiftPolynomial(out)

    def __neg__(self) -> "ShiftPolynomial":
        return ShiftPolynomial({j: -c for j, c in self.terms.items()})

    def __sub__(self, other: "ShiftPolynomial") -> "ShiftPolynomial":
        return self + (-other)

    def __mul__(self, other: "ShiftPolynomial") -> "ShiftPolynomial":
        out: dict[int, int] = {}
        for j1, c1 in self.terms.items():
            for j2, c2 in other.terms.items():
                j = j1 + j2
                out[j] = out.get(j, 0) + c1 * c2
        return ShiftPolynomial(out)

    def to_json(self) -> dict:
        return {str(j): c for j, c in sorted(self.terms.items())}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for j in sorted(self.terms):
            c = self.terms[j]
            head = f"{c:+d}" if parts or c < 0 else str(c)
            parts.append(f"{head}*s^{j}" if j else head)
        return " ".join(parts)

    __repr__ = __str__


def shift_poly(pairs: dict | Iterable) -> ShiftPolynomial:
    if isinstance(pairs, ShiftPolynomial):
        return pairs
    if isinstance(pairs, dict):
        return ShiftPolynomial(pairs)
    return ShiftPolynomial(dict(pairs))


@dataclass(frozen=True)
class PatternSpec:
    """A confined singularity pattern as positioned, weighted value tokens."""

    id: str
    entries: tuple[tuple[int, ValueToken, int], ...]

    def __init__(self, id: str, entries: Iterable):
        norm = []
        for position, token, *rest in entries:
            mult = rest[0] if rest else 1
            if position < 0 or mult < 1:
                raise ValueError("positions must be >= 0 and multiplicities >= 1")
            if isinstance(token, str):
                token = parse_token(token)
            norm.append((int(position), token, int(mult)))
        norm.sort(key=lambda e: e[0])
        if not norm or norm[0][0] != 0:
            raise ValueError("a pattern needs an opening entry at position 0")
        positions = [p for p, _, _ in norm]
        if len(set(positions)) != len(positions):
            raise ValueError("entry positions must be strictly increasing")
        object.__setattr__(self, "id", id)
        object.__setattr__(self, "entries", tuple(norm))

    def row_for(self, token: ValueToken) -> ShiftPolynomial:
        out: dict[int, int] = {}
        for position, t, mult in self.entries:
            if t == token:
                out[position] = out.get(position, 0) + mult
        return ShiftPolynomial(out)

    def layout(self) -> tuple:
        """(position, multiplicity) multiset, the shape symmetry must match."""
        return tuple(sorted((p, m) for p, _, m in self.entries))

    def length(self) -> int:
        return self.entries[-1][0] + 1

    def to_json(self) -> dict:
        return {"id": self.id,
                "entries": [{"position": p, "value": str(t), "multiplicity": m}
                            for p, t, m in self.entries]}


@dataclass(frozen=True)
class EquationSystem:
    """Rows of shifted count contributions, one per exclusive value."""

    unknowns: tuple[str, ...]
    exclusive: tuple[ValueToken, ...]
    rows: tuple[tuple[ShiftPolynomial, ...], ...]  # aligned with exclusive

    def row(self, token: ValueToken) -> tuple[ShiftPolynomial, ...]:
        return self.rows[self.exclusive.index(token)]


def build_equations(patterns: Sequence[PatternSpec],
                    exclusive: Sequence[ValueToken | str],
                    symmetry: Sequence[Sequence[str]] | None = None) -> EquationSystem:
    """Assemble count rows, merging symmetry-equivalent patterns."""
    exclusive = tuple(parse_token(t) if isinstance(t, str) else t
                      for t in exclusive)
    by_id = {p.id: p for p in patterns}
    if len(by_id) != len(patterns):
        raise ValueError("pattern ids must be unique")

    groups: list[list[PatternSpec]] = []
    grouped: set[str] = set()
    for cls in (symmetry or []):
        members = [by_id[i] for i in cls]
        layouts = {m.layout() for m in members}
        if len(layouts) > 1:
            raise InvalidSymmetry(
                f"patterns {[m.id for m in members]} have different "
                "entry-position layouts")
        groups.append(members)
        grouped.update(cls)
    for p in patterns:
        if p.id not in grouped:
            groups.append([p])

    unknowns = tuple("=".join(m.id for m in g) for g in groups)
    rows = []
    for token in exclusive:
        row = []
        for g in groups:
            acc = ShiftPolynomial.zero()
            for p in g:
                acc = acc + p.row_for(token)
            row.append(acc)
        if all(sp.is_zero for sp in row):
            raise ExclusiveValueAbsent(
                f"value {token} occurs in no pattern")
        rows.append(tuple(row))
    return EquationSystem(unknowns, exclusive, tuple(rows))


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

def _determinant(matrix: list[list[ShiftPolynomial]]) -> ShiftPolynomial:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = ShiftPolynomial.zero()
    for col in range(n):
        entry = matrix[0][col]
        if entry.is_zero:
            continue
        minor = [[row[c] for c in range(n) if c != col] for row in matrix[1:]]
        cofactor = entry * _determinant(minor)
        total = total + cofactor if col % 2 == 0 else total - cofactor
    return total


def shift_poly_to_lambda(sp: ShiftPolynomial) -> Polynomial:
    """Clear s = 1/lambda powers into a primitive integer polynomial.

    Unit monomial factors lambda^k are stripped so elimination order
    cannot smuggle in spurious zero roots.
    """
    if sp.is_zero:
        return Polynomial.zero()
    hi = max(sp.terms)
    lo = min(sp.terms)
    coeffs = [0] * (hi - lo + 1)
    for j, c in sp.terms.items():
        coeffs[hi - j] = c
    from . import intpoly
    _, prim = intpoly.primitive(coeffs)
    if prim[-1] < 0:
        prim = intpoly.neg(prim)
    return Polynomial.from_int_coeffs(prim)


def _eliminate(vectors: list[tuple[ShiftPolynomial, ...]],
               n_unknowns: int) -> list[Polynomial]:
    vectors = [v for v in vectors if not all(sp.is_zero for sp in v)]
    if len(vectors) < n_unknowns:
        raise Underdetermined(
            f"{len(vectors)} independent equation(s) for {n_unknowns} "
            "unknown count(s)")
    polys: list[Polynomial] = []
    seen = set()
    for combo in itertools.combinations(vectors, n_unknowns):
        det = _determinant([list(v) for v in combo])
        if det.is_zero:
            continue
        poly = shift_poly_to_lambda(det)
        if poly.degree <= 0:
            continue
        if poly not in seen:
            seen.add(poly)
            polys.append(poly)
    return polys


def characteristic_polynomial(sys: EquationSystem) -> list[Polynomial]:
    """Eliminate the count system into integer polynomials in lambda.

    Equations come from consecutive pairs of exclusive values in their
    declared order; every maximal square subsystem is eliminated and all
    distinct primitive polynomials are returned.
    """
    k = len(sys.unknowns)
    if len(sys.exclusive) < k + 1:
        raise Underdetermined(
            f"{len(sys.exclusive)} exclusive value(s) cannot determine "
            f"{k} unknown count(s); need at least {k + 1}")
    vectors = []
    for a, b in zip(sys.rows, sys.rows[1:]):
        vectors.append(tuple(x - y for x, y in zip(a, b)))
    polys = _eliminate(vectors, k)
    if not polys:
        raise Underdetermined("every square subsystem is degenerate")
    return polys


@dataclass(frozen=True)
class RawEquation:
    """User-supplied relation: lhs and rhs contribution vectors."""

    lhs: dict[str, ShiftPolynomial]
    rhs: dict[str, ShiftPolynomial]

    @classmethod
    def of(cls, lhs: dict, rhs: dict) -> "RawEquation":
        return cls({k: shift_poly(v) for k, v in lhs.items()},
                   {k: shift_poly(v) for k, v in rhs.items()})


def characteristic_from_equations(equations: Sequence[RawEquation]) -> list[Polynomial]:
    """Elimination escape hatch for hand-written (auxiliary-variable) systems."""
    names: list[str] = []
    for eq in equations:
        for k in list(eq.lhs) + list(eq.rhs):
            if k not in names:
                names.append(k)
    vectors = []
    for eq in equations:
        vec = tuple(eq.lhs.get(n, ShiftPolynomial.zero())
                    - eq.rhs.get(n, ShiftPolynomial.zero()) for n in names)
        vectors.append(vec)
    nonzero = [v for v in vectors if not all(sp.is_zero for sp in v)]
    if len(nonzero) < len(names):
        raise Underdetermined(
            f"{len(nonzero)} equation(s) for {len(names)} unknown(s)")
    polys = _eliminate(nonzero, len(names))
    if not polys:
        raise Inconsistent("every square subsystem has an identically zero "
                           "determinant")
    return polys


# ---------------------------------------------------------------------------
# verdict
# ---------------------------------------------------------------------------

VERDICT_WIDTH = Fraction(1, 10**12)


@dataclass(frozen=True)
class Verdict:
    """Exact integrability decision with the isolated dynamical degree."""

    characteristics: tuple[Polynomial, ...]
    characteristic: Polynomial          # the decisive polynomial
    lambda_interval: RootInterval | None  # None <=> dynamical degree exactly 1
    integrable: bool
    entropy: float
    method: str = field(default="express")

    @property
    def dynamical_degree(self) -> float:
        if self.lambda_interval is None:
            return 1.0
        return float(self.lambda_interval)

    def to_json(self) -> dict:
        lam: dict | str
        if self.lambda_interval is None:
            lam = "1"
        else:
            lam = {"lo": str(self.lambda_interval.lo),
                   "hi": str(self.lambda_interval.hi)}
        return {
            "characteristic": [str(c) for c in _int_coeffs(self.characteristic)],
            "characteristics": [[str(c) for c in _int_coeffs(p)]
                                for p in self.characteristics],
            "lambda": lam,
            "entropy": self.entropy,
            "integrable": self.integrable,
            "method": self.method,
        }


def _int_coeffs(p: Polynomial) -> list[int]:
    return [int(c) for c in p.to_integer()[1]]


def verdict(polys: Sequence[Polynomial]) -> Verdict:
    """Integrable iff no polynomial has a real root strictly above 1."""
    if not polys:
        raise ValueError("empty polynomial list")
    roots: list[tuple[Polynomial, RootInterval]] = []
    for p in polys:
        iv = isolate_largest_real_root(p, Fraction(1), VERDICT_WIDTH)
        if iv is not None:
            roots.append((p, iv))
    if not roots:
        return Verdict(tuple(polys), polys[0], None, True, 0.0)
    best_poly, best_iv = roots[0]
    for p, iv in roots[1:]:
        best_poly, best_iv = _max_root(best_poly, best_iv, p, iv)
    return Verdict(tuple(polys), best_poly, best_iv, False,
                   math.log(float(best_iv)))


def _max_root(pa: Polynomial, a: RootInterval, pb: Polynomial, b: RootInterval):
    width = VERDICT_WIDTH
    for _ in range(4):
        if a.hi < b.lo:
            return pb, b
        if b.hi < a.lo:
            return pa, a
        if a.is_exact and b.is_exact:
            break
        width /= 10**6
        a = isolate_largest_real_root(pa, Fraction(1), width) or a
        b = isolate_largest_real_root(pb, Fraction(1), width) or b
    # indistinguishable at extreme precision: treat as the same degree
    return pa, a


# ---------------------------------------------------------------------------
# late confinement
# ---------------------------------------------------------------------------

def late_confinement_polynomial(block: PatternSpec, period: int, repeats: int,
                                closing: Iterable = ()) -> Polynomial:
    """Characteristic polynomial of a block pattern repeated `repeats` times.

    The block (one period of entries) is laid down at offsets 0, period,
    ..., (repeats-1)*period, the closing entries follow at repeats*period,
    and the resulting single-pattern system is eliminated as usual.
    """
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    if period < 1:
        raise ValueError("period must be >= 1")
    entries: list[tuple[int, ValueToken, int]] = []
    for k in range(repeats):
        for position, token, mult in block.entries:
            entries.append((k * period + position, token, mult))
    for position, token, *rest in closing:
        mult = rest[0] if rest else 1
        if isinstance(token, str):
            token = parse_token(token)
        entries.append((repeats * period + position, token, mult))
    full = PatternSpec(f"{block.id}x{repeats}", entries)
    exclusive: list[ValueToken] = []
    for _, token, _ in full.entries:
        if token not in exclusive:
            exclusive.append(token)
    system = build_equations([full], exclusive)
    polys = characteristic_polynomial(system)
    if len(polys) != 1:
        raise Underdetermined(
            "block pattern produced multiple independent polynomials")
    return polys[0]


def late_confinement_limit(block_weight: ShiftPolynomial, period: int) -> Polynomial:
    """The repeats -> infinity characteristic equation 1 - s^p = f(s).

    Valid on lambda > 1, where the geometric block sum converges; factors
    with no root above 1 introduced by clearing are harmless and kept.
    """
    if period < 1:
        raise ValueError("period must be >= 1")
    f = ShiftPolynomial({0: 1}) - ShiftPolynomial({period: 1}) - block_weight
    return shift_poly_to_lambda(f)


# ---------------------------------------------------------------------------
# growth oracle
# ---------------------------------------------------------------------------

def simulate_count_growth(p: Polynomial, steps: int = 200) -> Fraction:
    """Run the count recursion of p with the all-ones seed.

    Returns the final one-step ratio u_N / u_{N-1}; for every verdict
    polynomial the ratio must approach the isolated largest root (or 1
    for integrable cases, where the constant sequence solves the
    recursion exactly).
    """
    scalar, coeffs = p.to_integer()
    if len(coeffs) < 2:
        raise ValueError("need a nonconstant polynomial")
    d = len(coeffs) - 1
    lead = Fraction(coeffs[-1])
    window = [Fraction(1)] * d
    for _ in range(steps):
        nxt = -sum(Fraction(coeffs[i]) * window[i] for i in range(d)) / lead
        window = window[1:] + [nxt]
    if window[-2] == 0:
        raise ZeroDivisionError("count recursion hit zero")
    return window[-1] / window[-2]


# ---------------------------------------------------------------------------
# JSON formats (documented in docs/formats.md)
# ---------------------------------------------------------------------------

def patterns_from_json(blob: dict | str | Path):
    """Load {patterns, exclusive, symmetry} from a patterns document."""
    if isinstance(blob, (str, Path)):
        blob = json.loads(Path(blob).read_text(encoding="utf-8"))
    patterns = [PatternSpec(p["id"],
                            [(e["position"], e["value"], e.get("multiplicity", 1))
                             for e in p["entries"]])
                for p in blob["patterns"]]
    exclusive = [parse_token(t) for t in blob["exclusive"]]
    symmetry = blob.get("symmetry") or []
    return patterns, exclusive, symmetry


def equations_from_json(blob: dict | str | Path) -> list[RawEquation]:
    if isinstance(blob, (str, Path)):
        blob = json.loads(Path(blob).read_text(encoding="utf-8"))
    out = []
    for eq in blob["equations"]:
        out.append(RawEquation.of(
            {k: {int(j): c for j, c in v.items()} for k, v in eq["lhs"].items()},
            {k: {int(j): c for j, c in v.items()} for k, v in eq["rhs"].items()},
        ))
    return out
