"""Diophantine integrability probe: logarithmic height growth of orbits.

Iterating over exact rationals, the height h_n = log max(|p|, |q|) of the
reduced iterate p/q grows at the same exponential rate as the degree of
the symbolic iterate, so h_{n+1}/h_n estimates the dynamical degree with
nothing but big-integer arithmetic.  The orbit itself is exact; only the
reported heights are floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import HeightOverflow, SingularOrbit
from .mapping import Mapping, step
from .rationals import INDETERMINATE, ExtRational

DEFAULT_BIT_BUDGET = 10**7
MAX_RETRIES = 5


def int_log(n: int) -> float:
    """Natural log of |n| for integers of any size (0 maps to 0)."""
    n = abs(n)
    if n <= 1:
        return 0.0
    bl = n.bit_length()
    if bl <= 900:
        return math.log(n)
    top = n >> (bl - 64)
    return math.log(top) + (bl - 64) * math.log(2)


def height(x: ExtRational) -> float:
    """log max(|num|, |den|) of the reduced pair; 0 for 0, 1 and infinity."""
    return int_log(max(abs(x.num), x.den))


@dataclass(frozen=True)
class HeightTrace:
    """Height samples along one exact orbit."""

    mapping_name: str
    x0: Fraction
    x1: Fraction
    samples: tuple[tuple[int, float, float | None], ...]  # (n, h_n, ratio)
    lambda_last: float
    lambda_fit: float

    def heights(self) -> list[float]:
        return [h for _, h, _ in self.samples]

    def to_json(self) -> dict:
        return {"mapping": self.mapping_name,
                "x0": str(self.x0), "x1": str(self.x1),
                "samples": [{"n": n, "h": h, "ratio": r}
                            for n, h, r in self.samples],
                "lambda_last": self.lambda_last,
                "lambda_fit": self.lambda_fit}

    def csv_rows(self) -> list[tuple]:
        return [(n, h, "" if r is None else r) for n, h, r in self.samples]


def _run_orbit(m: Mapping, x0: Fraction, x1: Fraction, n_iter: int,
               bit_budget: int):
    prev = ExtRational(x0)
    cur = ExtRational(x1)
    values = [prev, cur]
    for n in range(1, n_iter):
        nxt = step(m, n, cur, prev)
        if nxt is INDETERMINATE:
            return None, n
        bits = max(abs(nxt.num).bit_length(), nxt.den.bit_length())
        if bits > bit_budget:
            raise HeightOverflow(
                f"iterate at n={n + 1} needs {bits} bits "
                f"(budget {bit_budget})")
        cur, prev = nxt, cur
        values.append(cur)
    return values, None


def diophantine_degree(m: Mapping, x0, x1, n_iter: int, *,
                       bit_budget: int = DEFAULT_BIT_BUDGET) -> HeightTrace:
    """Exact orbit of length n_iter with height-growth estimates.

    Seeds landing on an exact singularity (an indeterminate step) are
    perturbed and the orbit restarted, up to MAX_RETRIES; the trace is
    deterministic given mapping, streams and seeds.
    """
    if n_iter < 5:
        raise ValueError("need at least 5 iterations")
    x0 = Fraction(x0)
    x1 = Fraction(x1)
    for attempt in range(MAX_RETRIES + 1):
        values, hit = _run_orbit(m, x0, x1, n_iter, bit_budget)
        if values is not None:
            break
        x0 += Fraction(1, 7 + 3 * attempt)
        x1 += Fraction(1, 11 + 4 * attempt)
    else:
        raise SingularOrbit(
            f"orbit kept hitting exact singularities after {MAX_RETRIES} "
            "perturbed restarts")

    hs = [height(v) for v in values]
    samples = []
    for n, h in enumerate(hs):
        ratio = hs[n] / hs[n - 1] if n >= 1 and hs[n - 1] > 0 else None
        samples.append((n, h, ratio))
    if hs[-2] <= 0:
        raise SingularOrbit("orbit heights stayed trivial; cannot estimate")
    lambda_last = hs[-1] / hs[-2]

    # log-linear fit of log h_n over the final half of the samples
    pts = [(n, math.log(h)) for n, h, _ in samples[len(samples) // 2:] if h > 0]
    if len(pts) >= 2:
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        nm = len(pts)
        mx = sum(xs) / nm
        my = sum(ys) / nm
        denom = sum((u - mx) ** 2 for u in xs)
        slope = sum((u - mx) * (v - my) for u, v in zip(xs, ys)) / denom
        lambda_fit = math.exp(slope)
    else:
        lambda_fit = lambda_last
    return HeightTrace(m.name, x0, x1, tuple(samples), lambda_last, lambda_fit)
