"""Exact real-root isolation by Sturm sign-variation counting.

The integrability verdict rests on one exact decision: does an integer
polynomial have a real root strictly greater than 1?  That decision is
made here with Sturm chains over Fraction arithmetic; floating point
never enters.  Numeric refinement of the isolating interval is only for
reporting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Polynomial


@dataclass(frozen=True)
class RootInterval:
    """Interval [lo, hi] certified to contain exactly one real root.

    A degenerate interval (lo == hi) pins the root exactly (rational root).
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.midpoint())

    def __str__(self):
        if self.is_exact:
            return f"{self.lo}"
        return f"({self.lo}, {self.hi}]"


def sturm_chain(p: Polynomial) -> list[Polynomial]:
    """Standard Sturm chain of a square-free polynomial."""
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        rem = chain[-2] % chain[-1]
        if rem.is_zero:
            break
        chain.append(-rem)
    if chain[-1].is_zero:
        chain.pop()
    return chain


def _variations(signs: list[int]) -> int:
    prev = 0
    count = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _variations_at(chain: list[Polynomial], x: Fraction) -> int:
    return _variations([q.sign_at(x) for q in chain])


def count_roots_in(chain: list[Polynomial], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    if a >= b:
        return 0
    return _variations_at(chain, a) - _variations_at(chain, b)


def cauchy_bound(p: Polynomial) -> Fraction:
    """Strict upper bound on the absolute value of every real root."""
    lead = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + m / lead


def real_root_count(p: Polynomial) -> int:
    """Number of distinct real roots of p (any multiplicity)."""
    sq = p.square_free_part()
    if sq.degree <= 0:
        return 0
    b = cauchy_bound(sq)
    chain = sturm_chain(sq)
    return count_roots_in(chain, -b, b)


def isolate_largest_real_root(
    p: Polynomial,
    threshold: Fraction = Fraction(1),
    width: Fraction = Fraction(1, 10**12),
) -> RootInterval | None:
    """Isolating interval for the largest real root strictly above threshold.

    Returns None when no real root exceeds the threshold.  The comparison
    with the threshold is exact; the interval is refined to the requested
    width for reporting.  Multiplicity is read off the square-free
    decomposition of the input.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    threshold = Fraction(threshold)
    width = Fraction(width)
    sq = p.square_free_part()
    if sq.degree <= 0:
        return None
    if sq(threshold) == 0:
        # square-free, so (z - threshold) divides exactly once
        sq = sq.exact_div(Polynomial((-threshold, 1)))
    if sq.degree <= 0:
        return None

    if sq.degree == 1:
        root = -sq.coeffs[0] / sq.coeffs[1]
        if root <= threshold:
            return None
        return RootInterval(root, root, _multiplicity_at_point(p, root))

    chain = sturm_chain(sq)
    hi = max(cauchy_bound(sq), threshold + 1)
    lo = threshold
    total = count_roots_in(chain, lo, hi)
    if total == 0:
        return None

    # Shrink to the topmost root.
    while count_roots_in(chain, lo, hi) > 1:
        mid = (lo + hi) / 2
        if sq(mid) == 0:
            if count_roots_in(chain, mid, hi) >= 1:
                lo = mid
            else:
                hi = mid
            continue
        if count_roots_in(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid

    # Refine the unique root in (lo, hi] to the requested width.
    while hi - lo > width:
        mid = (lo + hi) / 2
        if sq(mid) == 0:
            return RootInterval(mid, mid, _multiplicity_at_point(p, mid))
        if count_roots_in(chain, mid, hi) == 1:
            lo = mid
        else:
            hi = mid

    return RootInterval(lo, hi, _multiplicity_in_interval(p, lo, hi))


def isolate_real_roots(p: Polynomial, width: Fraction = Fraction(1, 2**20)) -> list[RootInterval]:
    """Disjoint isolating intervals for every distinct real root, ascending."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    sq = p.square_free_part()
    if sq.degree <= 0:
        return []
    chain = sturm_chain(sq)
    b = cauchy_bound(sq)
    out: list[RootInterval] = []

    def split(lo: Fraction, hi: Fraction, count: int):
        if count == 0:
            return
        if count == 1:
            a, c = lo, hi
            while c - a > width:
                mid = (a + c) / 2
                if sq(mid) == 0:
                    out.append(RootInterval(mid, mid,
                                            _multiplicity_at_point(p, mid)))
                    return
                if count_roots_in(chain, mid, c) == 1:
                    a = mid
                else:
                    c = mid
            out.append(RootInterval(a, c, _multiplicity_in_interval(p, a, c)))
            return
        mid = (lo + hi) / 2
        while sq(mid) == 0:
            mid = (lo + mid) / 2
        upper = count_roots_in(chain, mid, hi)
        split(lo, mid, count - upper)
        split(mid, hi, upper)

    total = count_roots_in(chain, -b, b)
    split(-b, b, total)
    return out


def _small_divisors(n: int, cap: int = 10**6) -> list[int]:
    """Positive divisors of |n|, by trial division (complete for |n| <= cap^2
    or smooth n; a huge semiprime tail may leave some divisors unlisted)."""
    n = abs(n)
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n and d <= cap:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for prime, mult in factors.items():
        divs = [dv * prime**k for dv in divs for k in range(mult + 1)]
    return sorted(set(divs))


def rational_roots(p: Polynomial) -> list[tuple[Fraction, int]]:
    """All rational roots of p with multiplicities, ascending.

    Roots are located by exact isolation, then pinned by testing u/v for
    each divisor v of the leading coefficient (u forced by the interval).
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    _, ints = p.to_integer()
    k = 0
    while ints and ints[0] == 0:
        ints = ints[1:]
        k += 1
    out: list[tuple[Fraction, int]] = []
    poly = Polynomial.from_int_coeffs(ints) if ints else Polynomial.one()
    if k:
        out.append((Fraction(0), k + (_multiplicity_at_point(poly, Fraction(0))
                                      if poly(Fraction(0)) == 0 else 0)))
    if poly.degree <= 0:
        return out
    divisors = _small_divisors(ints[-1])
    vmax = divisors[-1]
    width = Fraction(1, 2 * vmax * vmax) if vmax > 1 else Fraction(1, 4)
    for interval in isolate_real_roots(poly, width):
        if interval.is_exact:
            r = interval.lo
            if r != 0:
                out.append((r, _multiplicity_at_point(poly, r)))
            continue
        for v in divisors:
            u = math.floor(interval.hi * v)
            cand = Fraction(u, v)
            if interval.lo < cand <= interval.hi and poly(cand) == 0:
                if cand != 0:
                    out.append((cand, _multiplicity_at_point(poly, cand)))
                break
    out.sort(key=lambda t: t[0])
    return out


def _multiplicity_at_point(p: Polynomial, r: Fraction) -> int:
    m = 0
    q = p
    lin = Polynomial((-r, 1))
    while q(r) == 0:
        q = q.exact_div(lin)
        m += 1
    return m


def _multiplicity_in_interval(p: Polynomial, lo: Fraction, hi: Fraction) -> int:
    for factor, mult in p.square_free_decomposition():
        if factor.degree <= 0:
            continue
        if factor(lo) == 0:
            continue  # root at the open end belongs to a neighbour
        if factor(hi) == 0:
            return mult
        if count_roots_in(sturm_chain(factor), lo, hi) == 1:
            return mult
    return 1
