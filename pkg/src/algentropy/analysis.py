"""Full analysis pipeline: degrees, singularities, counts, heights.

Stages run in a fixed order and each failure is recorded in the report
instead of aborting the run (parse errors excepted, which never reach
this layer).  The agreement section compares every pair of methods that
produced a verdict or a growth-ratio estimate:

  * verdict consistency: the exact count-route verdict must match the
    degree-growth classification (integrable <=> polynomial/bounded);
  * ratio consistency: for non-integrable runs, the isolated root, the
    degree estimate (geometric mean of the last three ratios) and the
    height estimate must agree pairwise within RATIO_TOLERANCE.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .catalog import CatalogEntry, ExpressInput
from .degrees import DegreeSequence, GrowthVerdict, classify_growth, degree_sequence
from .errors import AlgentropyError, NotConfined
from .express import Verdict, characteristic_from_equations, characteristic_polynomial, verdict
from .heights import HeightTrace, diophantine_degree
from .mapping import Mapping
from .parser import format_mapping, mapping_to_json
from .singularities import PatternReport, find_singular_values, trace_singularity
from .tokens import ValueToken

RATIO_TOLERANCE = 0.05


@dataclass
class StageOutcome:
    ok: bool
    error: str | None = None


@dataclass
class AnalysisReport:
    mapping: Mapping
    degree: DegreeSequence | None = None
    growth: GrowthVerdict | None = None
    patterns: list[PatternReport] = field(default_factory=list)
    pattern_errors: list[str] = field(default_factory=list)
    express: Verdict | None = None
    express_source: str | None = None
    express_error: str | None = None
    diophantine: HeightTrace | None = None
    stage_errors: dict[str, str] = field(default_factory=dict)
    agreement: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return bool(self.agreement.get("consistent", True))

    def to_json(self, timestamp: str | None = None) -> dict:
        out: dict = {"schema": "analysis-report/1",
                     "mapping": mapping_to_json(self.mapping)}
        out["mapping"]["definition"] = format_mapping(self.mapping)
        if timestamp is not None:
            out["timestamp"] = timestamp
        if self.degree is not None:
            out["degree"] = self.degree.to_json()
            if self.growth is not None:
                out["degree"]["growth"] = self.growth.to_json()
        if self.patterns or self.pattern_errors:
            out["patterns"] = [p.to_json() for p in self.patterns]
            if self.pattern_errors:
                out["pattern_errors"] = list(self.pattern_errors)
        if self.express is not None:
            out["express"] = self.express.to_json()
            out["express"]["source"] = self.express_source
        elif self.express_error:
            out["express_error"] = self.express_error
        if self.diophantine is not None:
            out["diophantine"] = self.diophantine.to_json()
        if self.stage_errors:
            out["stage_errors"] = dict(self.stage_errors)
        out["agreement"] = self.agreement
        return out


def express_verdict_for(entry_or_input) -> tuple[Verdict, str]:
    """Verdict from curated express input (patterns or raw equations)."""
    ex: ExpressInput = entry_or_input.express \
        if isinstance(entry_or_input, CatalogEntry) else entry_or_input
    if ex.raw_equations:
        polys = characteristic_from_equations(list(ex.raw_equations))
        return verdict(polys), "raw-equations"
    polys = characteristic_polynomial(ex.system())
    return verdict(polys), "curated-patterns"


def express_verdict_from_traces(patterns: Sequence[PatternReport]) -> tuple[Verdict, str]:
    """Advisory fallback: build the count system from traced patterns.

    Exclusivity defaults to every non-free value occurring in the traces;
    this is only a default, since exclusivity is an inspection call.
    """
    from .express import PatternSpec, build_equations
    specs = []
    exclusive: list[ValueToken] = []
    for i, rep in enumerate(patterns):
        if not rep.confined:
            continue
        entries = []
        for pos, e in enumerate(rep.entries):
            if e.value.is_free:
                continue
            entries.append((pos, e.value, e.multiplicity))
            if e.value not in exclusive:
                exclusive.append(e.value)
        specs.append(PatternSpec(f"P{i}", entries))
    if not specs:
        raise AlgentropyError("no confined pattern to build equations from")
    system = build_equations(specs, exclusive)
    polys = characteristic_polynomial(system)
    return verdict(polys), "traced-patterns"


def run_analysis(m: Mapping, *, entry: CatalogEntry | None = None,
                 stages: Sequence[str] = ("degrees", "singularities",
                                          "express", "dioph"),
                 degrees_n: int | None = None,
                 x0: Fraction = Fraction(5),
                 x1: Fraction = Fraction(22, 7),
                 iters: int = 20,
                 max_steps: int = 24,
                 bit_budget: int = 10**7,
                 degree_cap: int = 5000) -> AnalysisReport:
    report = AnalysisReport(m)

    if "degrees" in stages:
        n_max = degrees_n or (entry.classify_n_max if entry else 12)
        try:
            report.degree = degree_sequence(m, n_max, x0, degree_cap=degree_cap)
            report.growth = classify_growth(report.degree)
        except AlgentropyError as exc:
            report.stage_errors["degrees"] = f"{type(exc).__name__}: {exc}"

    if "singularities" in stages:
        try:
            values = find_singular_values(m, 1)
        except AlgentropyError as exc:
            report.stage_errors["singularities"] = f"{type(exc).__name__}: {exc}"
            values = []
        for v in values:
            try:
                report.patterns.append(
                    trace_singularity(m, v, max_steps=max_steps))
            except NotConfined as exc:
                report.pattern_errors.append(
                    f"{v}: not confined within {max_steps} steps")
                if exc.report is not None:
                    report.patterns.append(exc.report)
            except AlgentropyError as exc:
                report.pattern_errors.append(f"{v}: {type(exc).__name__}: {exc}")

    if "express" in stages:
        try:
            if entry is not None:
                report.express, report.express_source = express_verdict_for(entry)
            else:
                confined = [p for p in report.patterns if p.confined]
                report.express, report.express_source = \
                    express_verdict_from_traces(confined)
        except AlgentropyError as exc:
            report.express_error = f"{type(exc).__name__}: {exc}"

    if "dioph" in stages:
        try:
            report.diophantine = diophantine_degree(
                m, x0, x1, iters, bit_budget=bit_budget)
        except AlgentropyError as exc:
            report.stage_errors["dioph"] = f"{type(exc).__name__}: {exc}"

    report.agreement = build_agreement(report)
    return report


def _close(a: float, b: float, tol: float = RATIO_TOLERANCE) -> bool:
    return abs(a - b) <= tol * max(abs(a), abs(b))


def build_agreement(report: AnalysisReport) -> dict:
    pairs = []

    def add(methods, consistent, detail):
        pairs.append({"methods": list(methods), "consistent": bool(consistent),
                      "detail": detail})

    ex = report.express
    growth = report.growth
    if ex is not None and growth is not None:
        ok = ex.integrable == growth.is_integrable_like
        add(("express", "degrees"), ok,
            f"integrable={ex.integrable} vs classification="
            f"{growth.classification}")
        if not ex.integrable and growth.lambda_point is not None:
            ok = _close(ex.dynamical_degree, growth.lambda_point)
            add(("express-lambda", "degrees-lambda"), ok,
                f"{ex.dynamical_degree:.6f} vs {growth.lambda_point:.6f}")
    if ex is not None and report.diophantine is not None and not ex.integrable:
        ok = _close(ex.dynamical_degree, report.diophantine.lambda_last)
        add(("express-lambda", "dioph-lambda"), ok,
            f"{ex.dynamical_degree:.6f} vs {report.diophantine.lambda_last:.6f}")
    if (growth is not None and report.diophantine is not None
            and growth.classification == "exponential"
            and growth.lambda_point is not None):
        ok = _close(growth.lambda_point, report.diophantine.lambda_last)
        add(("degrees-lambda", "dioph-lambda"), ok,
            f"{growth.lambda_point:.6f} vs "
            f"{report.diophantine.lambda_last:.6f}")

    consistent = all(p["consistent"] for p in pairs) and not report.stage_errors
    return {"pairs": pairs, "consistent": consistent,
            "tolerance": RATIO_TOLERANCE}
