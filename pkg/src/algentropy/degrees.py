"""Degree growth of exact symbolic iterates, and its classification.

The iteration starts from a generic constant x_0 and x_1 = z; the degree
d_n of the n-th reduced iterate (as a rational function of z) is then the
generic preimage count.  Direct degree growth is the ground truth the
pattern-based route is checked against: polynomial growth means zero
entropy, exponential growth means a dynamical degree above 1.

Genericity of the constant seed is not assumed but tested: every run is
confirmed with a second seed, and any disagreement raises NonGenericSeed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ComputationAborted, DegreeCapExceeded, NonGenericSeed, TooShort
from .mapping import Mapping, SymbolicState, engine_step
from .streams import CoefficientStream

DEFAULT_SEED = Fraction(5)
CONFIRM_SEED = Fraction(22, 7)
DEFAULT_DEGREE_CAP = 5000


@dataclass(frozen=True)
class DegreeSequence:
    """d_0 .. d_N for one mapping and one (verified generic) seed."""

    mapping_name: str
    seed: Fraction
    degrees: tuple[int, ...]

    def __len__(self):
        return len(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def ratio(self, n: int) -> float:
        """d_n / d_{n-1} as a float."""
        return self.degrees[n] / self.degrees[n - 1]

    def to_json(self) -> dict:
        return {"mapping": self.mapping_name, "seed": str(self.seed),
                "degrees": list(self.degrees)}

    def csv_rows(self) -> list[tuple[int, int]]:
        return [(n, d) for n, d in enumerate(self.degrees)]


@dataclass(frozen=True)
class GrowthVerdict:
    """Growth class of a finite degree sequence.

    The lambda estimate is finite-data evidence only and is never used
    for the integrability verdict (that comes from the exact root test);
    the caveat field says so explicitly.
    """

    classification: str              # bounded | polynomial | exponential
    order: int | None = None         # polynomial order k
    lambda_last: float | None = None
    lambda_interval: tuple[float, float] | None = None
    lambda_point: float | None = None
    entropy_estimate: float = 0.0
    caveat: str = field(default="finite-n estimate; verdicts use exact roots")

    @property
    def is_integrable_like(self) -> bool:
        return self.classification in ("bounded", "polynomial")

    def to_json(self) -> dict:
        out = {"classification": self.classification,
               "entropy_estimate": self.entropy_estimate,
               "caveat": self.caveat}
        if self.order is not None:
            out["order"] = self.order
        if self.lambda_interval is not None:
            out["lambda_last"] = self.lambda_last
            out["lambda_interval"] = list(self.lambda_interval)
            out["lambda_point"] = self.lambda_point
        return out


def iterate_symbolic(m: Mapping, n_max: int, x0: Fraction,
                     degree_cap: int = DEFAULT_DEGREE_CAP,
                     should_abort: Callable[[], bool] | None = None):
    """Yield SymbolicState iterates x_1 .. x_{n_max} (x_1 = z)."""
    prev = SymbolicState.from_constant(x0)
    cur = SymbolicState.seed_variable()
    yield cur
    for n in range(1, n_max):
        if should_abort is not None and should_abort():
            raise ComputationAborted("degree iteration cancelled", [])
        cur, prev = engine_step(m, n, cur, prev, cap=degree_cap), cur
        yield cur


def _degrees_for_seed(m: Mapping, n_max: int, x0: Fraction, degree_cap: int,
                      should_abort) -> list[int]:
    degrees = [0]
    try:
        for state in iterate_symbolic(m, n_max, x0, degree_cap, should_abort):
            degrees.append(state.degree)
    except (DegreeCapExceeded, ComputationAborted) as exc:
        exc.partial = degrees
        raise
    return degrees


def degree_sequence(m: Mapping, n_max: int, x0: Fraction = DEFAULT_SEED, *,
                    confirm_seed: Fraction | None = CONFIRM_SEED,
                    degree_cap: int = DEFAULT_DEGREE_CAP,
                    should_abort: Callable[[], bool] | None = None) -> DegreeSequence:
    """Exact degrees d_0..d_{n_max} with the two-seed genericity check."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    x0 = Fraction(x0)
    main = _degrees_for_seed(m, n_max, x0, degree_cap, should_abort)
    if confirm_seed is not None and confirm_seed != x0:
        check = _degrees_for_seed(m, n_max, Fraction(confirm_seed),
                                  degree_cap, should_abort)
        if check != main:
            raise NonGenericSeed(
                f"seeds {x0} and {confirm_seed} disagree on degrees: "
                f"{main} vs {check}")
    return DegreeSequence(m.name, x0, tuple(main))


# ---------------------------------------------------------------------------
# growth classification
# ---------------------------------------------------------------------------

def _difference(seq: Sequence[int]) -> list:
    return [b - a for a, b in zip(seq, seq[1:])]


def _eventually_periodic(seq: Sequence, max_period: int) -> int | None:
    """Smallest period of a suffix window, or None.

    The window is the last max(2*max_period, 2/3 of the data) entries, so
    a claimed period is confirmed over at least two full cycles whenever
    the data allows it.
    """
    n = len(seq)
    if n < 4:
        return None
    window = min(n - 1, max(2 * max_period, (2 * n) // 3))
    start = n - window
    for p in range(1, max_period + 1):
        if window < 2 * p:
            break
        if all(seq[i] == seq[i + p] for i in range(start, n - p)):
            return p
    return None


def classify_growth(d: DegreeSequence | Sequence[int], *, max_order: int = 4,
                    max_period: int = 6) -> GrowthVerdict:
    """Bounded / polynomial(k) / exponential, from exact finite differences.

    Polynomial growth of the paper's mappings carries bounded periodic
    ripples (parity and period-3 terms), so "k-th differences eventually
    constant" is applied modulo a short period: the k-th differences must
    be eventually periodic with period at most max_period.
    """
    seq = list(d.degrees if isinstance(d, DegreeSequence) else d)
    if len(seq) < 8:
        raise TooShort(f"need at least 8 degrees, got {len(seq)}")
    level = seq
    for k in range(0, max_order + 1):
        period = _eventually_periodic(level, max_period)
        if period is not None:
            if k == 0:
                return GrowthVerdict("bounded")
            return GrowthVerdict("polynomial", order=k)
        level = _difference(level)

    tail = seq[-4:]
    if 0 in tail:
        raise TooShort("degrees still zero in the final window")
    ratios = [tail[i + 1] / tail[i] for i in range(3)]
    point = (tail[-1] / tail[0]) ** Fraction(1, 3)
    return GrowthVerdict(
        "exponential",
        lambda_last=ratios[-1],
        lambda_interval=(min(ratios), max(ratios)),
        lambda_point=float(point),
        entropy_estimate=math.log(float(point)),
    )


# ---------------------------------------------------------------------------
# closed form and recurrence checks for the multiplicative QRT example
# ---------------------------------------------------------------------------

def qrt_degree_closed_form(n: int) -> int:
    """Exact degree of the n-th iterate of the catalog entry eq1-qrt.

    Evaluates (6n^2 + 17 - 9(-1)^n - 4(w^n + w^2n))/36 with w a primitive
    cube root of unity, using w^n + w^2n = 2 when 3 | n and -1 otherwise.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    cube = 2 if n % 3 == 0 else -1
    total = 6 * n * n + 17 - 9 * (-1) ** n - 4 * cube
    q, r = divmod(total, 36)
    if r:
        raise AssertionError("closed form did not produce an integer")
    return q


def verify_recurrence(d: Sequence, coeffs: Sequence, inhom) -> bool:
    """Check sum_k coeffs[k] * d[n-k] == inhom(n) for every valid n.

    `inhom` may be a CoefficientStream, a constant, or a callable n -> Q.
    """
    cs = [Fraction(c) for c in coeffs]
    order = len(cs) - 1
    if len(d) <= order:
        raise ValueError("sequence shorter than the recurrence order")
    if isinstance(inhom, CoefficientStream):
        rhs = inhom.value_at
    elif callable(inhom):
        rhs = inhom
    else:
        const = Fraction(inhom)
        rhs = lambda n: const
    for n in range(order, len(d)):
        lhs = sum(c * Fraction(d[n - k]) for k, c in enumerate(cs))
        if lhs != rhs(n):
            return False
    return True
