"""Finding singular values and tracing them through perturbed iteration.

A value v of x_n is singular when the whole line x_n = v is blown down:
the update, specialized at x_n = v, is constant in x_{n-1}.  Candidates
come from the vanishing of all 2x2 cross-coefficient minors of the
(numerator, denominator) coefficient matrix in the x_{n-1} powers; v = ∞
is flagged only when the blown-down image is finite (the constant-∞ case
at x = ∞ is regular fixed behaviour, not a degeneracy).

Tracing replaces x_n by v + eps (or 1/eps) and a generic x_{n-1}, then
iterates in truncated Laurent arithmetic.  "The iterate depends on the
initial data again" is operationalized as disagreement between two
generic probe seeds, with a third-seed tiebreak guarding against
accidental coincidence.  Cyclic patterns are deliberately not detected:
a non-recovering orbit simply runs into NotConfined at max_steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (InvertZero, NonRationalSingularity, NotConfined,
                     PrecisionExhausted)
from .laurent import DEFAULT_TERMS, MAX_TERMS, LaurentSeries
from .mapping import Mapping, step_series
from .polynomials import Polynomial
from .roots import rational_roots, real_root_count
from .tokens import ValueToken

PROBE_SEEDS = (Fraction(5), Fraction(22, 7), Fraction(101, 13))
DEFAULT_MAX_STEPS = 24
PARAM_PERTURBATION = Fraction(1, 97)


@dataclass(frozen=True)
class PatternEntry:
    """One forced value of a confined pattern with its pole/zero order."""

    value: ValueToken
    multiplicity: int = 1

    def __str__(self):
        if self.multiplicity == 1:
            return str(self.value)
        return f"{self.value}^{self.multiplicity}"

    def to_json(self) -> dict:
        return {"value": str(self.value), "mult": self.multiplicity}


@dataclass(frozen=True)
class PatternReport:
    """Outcome of one singularity trace.

    For a confined trace the final entry is the "free" marker and
    steps_to_confine counts the forced entries before it; an unconfined
    trace carries max_steps forced entries and no marker.  Evidence holds
    the per-step (valuation, leading coefficient) data of the first two
    probe seeds.
    """

    entering: ValueToken
    entries: tuple[PatternEntry, ...]
    confined: bool
    steps_to_confine: int | None
    evidence: tuple[tuple[tuple[int, str], ...], ...]

    def values(self) -> list[str]:
        return [str(e) for e in self.entries]

    def __str__(self):
        inner = ", ".join(str(e) for e in self.entries)
        state = f"confined in {self.steps_to_confine} steps" if self.confined \
            else "not confined"
        return f"{{{inner}}} ({state})"

    def to_json(self) -> dict:
        return {"entering": str(self.entering),
                "entries": [e.to_json() for e in self.entries],
                "confined": self.confined,
                "steps": self.steps_to_confine}


# ---------------------------------------------------------------------------
# singular value search
# ---------------------------------------------------------------------------

def _x_coefficient_rows(xy: dict, dx: int, dy: int) -> list[Polynomial]:
    rows = []
    for j in range(dy + 1):
        coeffs = [Fraction(0)] * (dx + 1)
        for (i, jj), c in xy.items():
            if jj == j:
                coeffs[i] = c
        rows.append(Polynomial(coeffs))
    return rows

def _is_rank_one(nvec: Sequence[Fraction], dvec: Sequence[Fraction]) -> bool:
    n = len(nvec)
    for a in range(n):
        for b in range(a + 1, n):
            if nvec[a] * dvec[b] - nvec[b] * dvec[a] != 0:
                return False
    return True


def find_singular_values(m: Mapping, n: int,
                         exclude: Sequence[ValueToken] = ()) -> list[ValueToken]:
    """Rational values v (and ∞) whose line x_n = v is blown down at step n.

    Vanishing-minor factors whose real roots are irrational are not
    silently dropped: they raise NonRationalSingularity.  `exclude` lets
    the caller suppress values known to be regular (the inspection-based
    escape for maps where ∞ is a harmless fixed value).
    """
    num_xy, den_xy, dx, dy = m.specialize(n)
    if dy == 0:
        raise ValueError("update rule does not involve x_{n-1}")
    nrows = _x_coefficient_rows(num_xy, dx, dy)
    drows = _x_coefficient_rows(den_xy, dx, dy)

    minors: list[Polynomial] = []
    for a in range(dy + 1):
        for b in range(a + 1, dy + 1):
            mab = nrows[a] * drows[b] - nrows[b] * drows[a]
            if not mab.is_zero:
                minors.append(mab)
    if not minors:
        raise ValueError("update rule is constant in x_{n-1} for every x_n")

    g = minors[0]
    for mab in minors[1:]:
        g = g.gcd(mab)
        if g.degree == 0:
            break

    found: list[ValueToken] = []
    if g.degree > 0:
        roots = rational_roots(g)
        for r, _ in roots:
            nvec = [p(r) for p in nrows]
            dvec = [p(r) for p in drows]
            if _is_rank_one(nvec, dvec):
                found.append(ValueToken.finite(r))
        # anything left after removing the rational roots?
        residual = g
        for r, mult in roots:
            lin = Polynomial((-r, 1))
            for _ in range(mult):
                if residual.degree > 0 and residual(r) == 0:
                    residual = residual.exact_div(lin)
        if residual.degree > 0 and real_root_count(residual) > 0:
            raise NonRationalSingularity(
                f"vanishing-minor factor {residual} has a real root "
                "outside Q (and the mapping's parameters)")

    # v = ∞: compare top x-coefficients; flag only a finite constant image
    ntop = [p.coefficient(dx) for p in nrows]
    dtop = [p.coefficient(dx) for p in drows]
    if any(dtop) and _is_rank_one(ntop, dtop):
        found.append(ValueToken.infinity())

    excluded = set(exclude)
    return sorted([t for t in found if t not in excluded])


# ---------------------------------------------------------------------------
# perturbed tracing
# ---------------------------------------------------------------------------

def _entering_series(value: ValueToken | Fraction) -> LaurentSeries:
    token = _as_token(value)
    if token.is_infinite:
        return LaurentSeries.eps(-1)
    v = token.resolved()
    if v is None:
        raise ValueError(f"cannot enter a trace at token {token}")
    return LaurentSeries(0, (v, Fraction(1)))


def _as_token(value) -> ValueToken:
    if isinstance(value, ValueToken):
        return value
    if isinstance(value, (int, Fraction)):
        return ValueToken.finite(value)
    if value in ("inf", float("inf")):
        return ValueToken.infinity()
    raise TypeError(f"not a value token: {value!r}")


class _ProbeRun:
    """One lazily-advanced perturbed orbit for a fixed probe seed."""

    def __init__(self, m: Mapping, entering: ValueToken, seed: Fraction,
                 n_start: int, terms: int):
        self.m = m
        self.n_start = n_start
        self.terms = terms
        self.prev = LaurentSeries.constant(seed)
        self.cur = _entering_series(entering)
        self.history = [self.cur]

    def at(self, k: int) -> LaurentSeries:
        while len(self.history) <= k:
            step_index = self.n_start + len(self.history) - 1
            self.cur, self.prev = (
                step_series(self.m, step_index, self.cur, self.prev, self.terms),
                self.cur)
            self.history.append(self.cur)
        return self.history[k]


def _step_signature(s: LaurentSeries) -> tuple[int, str]:
    return (s.valuation, str(s.coeffs[0]))


def _entry_multiplicity(s: LaurentSeries) -> int:
    return abs(s.valuation) if s.valuation != 0 else 1


def _entry_token(s: LaurentSeries) -> ValueToken:
    limit = s.limit_value()
    if limit is None:
        return ValueToken.infinity()
    return ValueToken.finite(limit)


def trace_singularity(m: Mapping, entering, n_start: int = 1,
                      max_steps: int = DEFAULT_MAX_STEPS,
                      terms: int = DEFAULT_TERMS, *,
                      recognize_params: bool = True) -> PatternReport:
    """Trace one singular value to confinement (or raise NotConfined).

    Confinement is declared at the first step whose eps -> 0 limit is
    finite and differs between the generic probe seeds; values on which
    the first two seeds coincide are double-checked against a third
    before being treated as forced.  PrecisionExhausted retries at
    doubled window size up to the cap.
    """
    token = _as_token(entering)
    while True:
        try:
            return _trace_at(m, token, n_start, max_steps, terms,
                             recognize_params)
        except PrecisionExhausted:
            if terms >= MAX_TERMS:
                raise
            terms = min(2 * terms, MAX_TERMS)


def _trace_at(m: Mapping, token: ValueToken, n_start: int, max_steps: int,
              terms: int, recognize_params: bool) -> PatternReport:
    g1, g2, g3 = PROBE_SEEDS
    run1 = _ProbeRun(m, token, g1, n_start, terms)
    run2 = _ProbeRun(m, token, g2, n_start, terms)
    run3 = None  # tiebreak probe, advanced only if the first two agree

    entries: list[PatternEntry] = [
        PatternEntry(token, _entry_multiplicity(run1.at(0)))]
    confined_at = None
    for k in range(1, max_steps + 1):
        s1, s2 = run1.at(k), run2.at(k)
        v1, v2 = s1.limit_value(), s2.limit_value()
        if v1 is None or v2 is None:
            if s1.valuation != s2.valuation:
                raise InvertZero(
                    "probe seeds disagree on a pole order; the entering "
                    "value is not singular in the expected sense")
            entries.append(PatternEntry(ValueToken.infinity(),
                                        _entry_multiplicity(s1)))
            continue
        if v1 != v2:
            confined_at = k
            break
        # seeds agree on a finite value: forced, unless accidental
        if run3 is None:
            run3 = _ProbeRun(m, token, g3, n_start, terms)
        if run3.at(k).limit_value() != v1:
            confined_at = k
            break
        entries.append(PatternEntry(_entry_token(s1),
                                    _entry_multiplicity(s1)))

    seen = len(entries) + (1 if confined_at is not None else 0)
    evidence = (tuple(_step_signature(s) for s in run1.history[:seen]),
                tuple(_step_signature(s) for s in run2.history[:seen]))

    if confined_at is None:
        report = PatternReport(token, tuple(entries), False, None, evidence)
        raise NotConfined(
            f"no recovery within {max_steps} steps from {token}", report)

    entries.append(PatternEntry(ValueToken.free()))
    report = PatternReport(token, tuple(entries), True, confined_at, evidence)
    if recognize_params and m.parameters:
        report = _recognize_parameters(m, report, n_start, max_steps, terms)
    return report


def _recognize_parameters(m: Mapping, report: PatternReport, n_start: int,
                          max_steps: int, terms: int) -> PatternReport:
    """Relabel forced rationals that track a parameter under perturbation.

    A traced constant equal to a bound parameter value is renamed to the
    parameter symbol only if re-tracing with that parameter nudged keeps
    the entry equal to the nudged value (identity, not coincidence).
    """
    entries = list(report.entries)
    for pname, pval in m.parameters.items():
        hits = [i for i, e in enumerate(entries)
                if e.value.kind == "finite" and e.value.value == pval]
        if not hits:
            continue
        nudged = pval + PARAM_PERTURBATION
        m2 = m.with_parameters(**{pname: nudged})
        enter2 = report.entering
        if enter2.kind == "finite" and enter2.value == pval:
            enter2 = ValueToken.finite(nudged)
        try:
            probe = _trace_at(m2, enter2, n_start, max_steps, terms,
                              recognize_params=False)
        except (NotConfined, PrecisionExhausted, InvertZero):
            continue
        if len(probe.entries) != len(entries):
            continue
        for i in hits:
            pv = probe.entries[i].value
            if pv.kind == "finite" and pv.value == nudged:
                entries[i] = PatternEntry(ValueToken.param(pname, pval),
                                          entries[i].multiplicity)
        if (report.entering.kind == "finite"
                and report.entering.value == pval
                and probe.entering.value == nudged):
            first = entries[0]
            token = ValueToken.param(pname, pval)
            entries[0] = PatternEntry(token, first.multiplicity)
            report = PatternReport(token, tuple(entries), report.confined,
                                   report.steps_to_confine, report.evidence)
            continue
    return PatternReport(report.entering, tuple(entries), report.confined,
                         report.steps_to_confine, report.evidence)


def pattern_for_late_confinement(m: Mapping, entering,
                                 max_steps: int = 2 * DEFAULT_MAX_STEPS,
                                 n_start: int = 1,
                                 terms: int = DEFAULT_TERMS) -> PatternReport:
    """trace_singularity tuned for streams that confine only after several
    blocks; identical contract, longer default horizon."""
    return trace_singularity(m, entering, n_start=n_start,
                             max_steps=max_steps, terms=terms)
