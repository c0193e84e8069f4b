"""Dense univariate integer-polynomial kernels.

A polynomial is a plain ``list[int]`` with index = power and no trailing
zeros; the empty list is the zero polynomial.  These kernels back the
Fraction-level Polynomial class: everything degree-heavy (iterate
reduction, gcd cancellation) is routed through here after clearing
denominators.

The gcd strategy is layered because desk-scale inputs span degree 2 with
single-digit coefficients up to degree ~2000 with coefficients of many
thousand bits:

  * small inputs: subresultant PRS with content stripping;
  * large inputs: heuristic evaluation gcd (power-of-two evaluation point,
    balanced-digit reconstruction) certified by a mod-p degree bound and
    exact trial division;
  * fallback: Brown-style modular gcd (per-prime Euclid on numpy int64
    vectors, CRT lifting, division check).

All certified paths are exact: a candidate is only returned once it
divides both inputs and matches a mod-p degree certificate, so no answer
ever depends on the heuristics being lucky.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

try:
    import gmpy2

    def _int_gcd(x: int, y: int) -> int:
        return int(gmpy2.gcd(x, y))

    def _int_mul(x: int, y: int) -> int:
        return int(gmpy2.mpz(x) * gmpy2.mpz(y))

except ImportError:  # pragma: no cover - exercised only without gmpy2
    gmpy2 = None

    def _int_gcd(x: int, y: int) -> int:
        return math.gcd(x, y)

    def _int_mul(x: int, y: int) -> int:
        return x * y


class ExactDivisionError(ArithmeticError):
    """Raised when an allegedly exact division leaves a remainder."""


IntPoly = list


def trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(c: list[int]) -> int:
    """Degree with the usual -1 convention for the zero polynomial."""
    return len(c) - 1


def add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return trim(out)


def sub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return trim(out)


def neg(a: list[int]) -> list[int]:
    return [-x for x in a]


def scale(a: list[int], k: int) -> list[int]:
    if k == 0:
        return []
    return [x * k for x in a]


def shift(a: list[int], k: int) -> list[int]:
    """Multiply by z**k."""
    if not a:
        return []
    return [0] * k + list(a)


def norm_inf(a: list[int]) -> int:
    return max((abs(x) for x in a), default=0)


# ---------------------------------------------------------------------------
# multiplication
# ---------------------------------------------------------------------------

_KRONECKER_CUTOFF = 64 * 64


def mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) == 1:
        return scale(b, a[0])
    if len(b) == 1:
        return scale(a, b[0])
    if len(a) * len(b) >= _KRONECKER_CUTOFF:
        return _mul_kronecker(a, b)
    return _mul_school(a, b)


def _mul_school(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return trim(out)


def _pack_nonneg(c: list[int], nbytes: int) -> int:
    buf = bytearray(len(c) * nbytes)
    for i, x in enumerate(c):
        if x:
            off = i * nbytes
            buf[off:off + (x.bit_length() + 7) // 8] = x.to_bytes(
                (x.bit_length() + 7) // 8, "little")
    return int.from_bytes(buf, "little")


def _unpack_nonneg(m: int, nbytes: int, count: int) -> list[int]:
    raw = m.to_bytes(count * nbytes, "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little")
            for i in range(count)]


def _mul_kronecker(a: list[int], b: list[int]) -> list[int]:
    """Multiply via evaluation at 2**B (Kronecker substitution).

    Signs are handled by a positive/negative split: with
    a = a+ - a- and b = b+ - b-, the digit streams of
    (a+ b+ + a- b-) and (a+ b- + a- b+) are both bounded by the
    convolution of |a| and |b|, so a shared digit width works.
    """
    bits = (norm_inf(a).bit_length() + norm_inf(b).bit_length()
            + min(len(a), len(b)).bit_length() + 1)
    nbytes = (bits + 7) // 8
    ap = _pack_nonneg([x if x > 0 else 0 for x in a], nbytes)
    an = _pack_nonneg([-x if x < 0 else 0 for x in a], nbytes)
    bp = _pack_nonneg([x if x > 0 else 0 for x in b], nbytes)
    bn = _pack_nonneg([-x if x < 0 else 0 for x in b], nbytes)
    pos = _int_mul(ap, bp) + _int_mul(an, bn)
    negv = _int_mul(ap, bn) + _int_mul(an, bp)
    count = len(a) + len(b) - 1
    dp = _unpack_nonneg(pos, nbytes, count)
    dn = _unpack_nonneg(negv, nbytes, count)
    return trim([p - q for p, q in zip(dp, dn)])


def mul_many(polys: Iterable[list[int]]) -> list[int]:
    out = [1]
    for p in polys:
        out = mul(out, p)
        if not out:
            return []
    return out


def pow_int(a: list[int], k: int) -> list[int]:
    if k == 0:
        return [1]
    out = a
    for _ in range(k - 1):
        out = mul(out, a)
    return out


# ---------------------------------------------------------------------------
# content / primitive part / evaluation
# ---------------------------------------------------------------------------

def content(a: list[int]) -> int:
    g = 0
    for x in a:
        if x:
            g = _int_gcd(g, x)
            if g == 1:
                return 1
    return g


def primitive(a: list[int]) -> tuple[int, list[int]]:
    """Return (content, primitive part); content > 0, sign stays on the part."""
    if not a:
        return 0, []
    c = content(a)
    if c == 1:
        return 1, list(a)
    return c, [x // c for x in a]


def eval_int(a: list[int], x: int) -> int:
    out = 0
    for c in reversed(a):
        out = out * x + c
    return out


def derivative(a: list[int]) -> list[int]:
    return trim([i * c for i, c in enumerate(a)][1:])


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------

def divmod_exact(a: list[int], b: list[int]) -> list[int]:
    """Quotient of an exact division a / b over Z; raises if not exact."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        raise ExactDivisionError("degree too small")
    lb = b[-1]
    r = list(a)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        top = r[db + k]
        if top:
            qc, rem = divmod(top, lb)
            if rem:
                raise ExactDivisionError("leading coefficient not divisible")
            q[k] = qc
            for j in range(db + 1):
                r[j + k] -= qc * b[j]
    if any(r):
        raise ExactDivisionError("nonzero remainder")
    return trim(q)


def pseudo_divmod(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Return (q, r) with lc(b)**(da-db+1) * a = q*b + r, all over Z."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    da, db = len(a) - 1, len(b) - 1
    if da < db or not a:
        return [], list(a)
    lb = b[-1]
    r = list(a)
    q = [0] * (da - db + 1)
    steps = da - db + 1
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        t = r[-1]
        for i in range(len(q)):
            q[i] *= lb
        q[k] += t
        for i in range(len(r)):
            r[i] *= lb
        for j in range(db + 1):
            r[j + k] -= t * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        steps -= 1
    f = lb**steps
    if f != 1:
        q = [c * f for c in q]
        r = [c * f for c in r]
    return trim(q), trim(r)


def pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    return pseudo_divmod(a, b)[1]


# ---------------------------------------------------------------------------
# subresultant gcd (small inputs; also the reference oracle in tests)
# ---------------------------------------------------------------------------

def subresultant_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd with positive leading coefficient, by subresultant PRS."""
    _, a = primitive(a)
    _, b = primitive(b)
    if degree(a) < degree(b):
        a, b = b, a
    if not b:
        return _pos(a)
    g, h = 1, 1
    while True:
        d = degree(a) - degree(b)
        r = pseudo_rem(a, b)
        if not r:
            return _pos(primitive(b)[1])
        if degree(r) == 0:
            return [1]
        k = g * h**d
        if any(c % k for c in r):
            raise ExactDivisionError("subresultant step not integral")
        a, b = b, [c // k for c in r]
        g = a[-1]
        h = g**d // h**(d - 1) if d > 0 else h

def _pos(a: list[int]) -> list[int]:
    return neg(a) if a and a[-1] < 0 else a


# ---------------------------------------------------------------------------
# modular arithmetic (numpy int64, primes below 2**31)
# ---------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIME_CACHE: list[int] = []


def _primes():
    """Yield distinct primes just below 2**31, extending a shared cache."""
    i = 0
    while True:
        if i < len(_PRIME_CACHE):
            yield _PRIME_CACHE[i]
            i += 1
            continue
        candidate = _PRIME_CACHE[-1] - 2 if _PRIME_CACHE else 2**31 - 1
        while not _is_prime(candidate):
            candidate -= 2
        _PRIME_CACHE.append(candidate)


def poly_mod(a: list[int], p: int) -> np.ndarray:
    arr = np.array([x % p for x in a], dtype=np.int64)
    n = len(arr)
    while n and arr[n - 1] == 0:
        n -= 1
    return arr[:n]


def _np_rem(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    db = len(b) - 1
    inv_lb = pow(int(b[-1]), -1, p)
    a = a.copy()
    n = len(a)
    while n - 1 >= db:
        top = int(a[n - 1])
        if top:
            factor = top * inv_lb % p
            lo = n - 1 - db
            a[lo:n] = (a[lo:n] - factor * b) % p
        n -= 1
        while n and a[n - 1] == 0:
            n -= 1
    return a[:n]


def gcd_mod_p(a: list[int], b: list[int], p: int) -> np.ndarray:
    """Monic gcd of a and b in GF(p)[z] as an int64 array."""
    x, y = poly_mod(a, p), poly_mod(b, p)
    while len(y):
        x, y = y, _np_rem(x, y, p)
    if len(x):
        inv = pow(int(x[-1]), -1, p)
        x = x * inv % p
    return x


def divides_mod_p(b: list[int], a: list[int], p: int) -> bool:
    """Quick necessary test for b | a: remainder vanishes mod p."""
    x, y = poly_mod(a, p), poly_mod(b, p)
    if not len(y):
        return not len(x)
    return len(_np_rem(x, y, p)) == 0


# ---------------------------------------------------------------------------
# gcd dispatcher
# ---------------------------------------------------------------------------

_SMALL_AREA = 48 * 48
_SMALL_BITS = 192


def gcd_primitive(a: list[int], b: list[int]) -> list[int]:
    return gcd_cofactors(a, b)[0]


def gcd_cofactors(a: list[int], b: list[int]) -> tuple[list[int], list[int], list[int]]:
    """Return (g, a/g, b/g) with g the primitive positive-lc gcd of a, b.

    Cofactors are of the primitive parts' quotients scaled back, i.e.
    a = content(a) missing; callers that care track contents themselves:
    here simply a/g and b/g as exact integer polynomials.
    """
    if not a and not b:
        raise ValueError("gcd(0, 0) undefined")
    if not a:
        g = _pos(primitive(b)[1])
        return g, [], divmod_exact(b, g)
    if not b:
        g = _pos(primitive(a)[1])
        return g, divmod_exact(a, g), []
    ca, pa = primitive(a)
    cb, pb = primitive(b)
    if degree(pa) == 0 or degree(pb) == 0:
        return [1], list(a), list(b)
    if (len(pa) * len(pb) <= _SMALL_AREA
            and norm_inf(pa).bit_length() <= _SMALL_BITS
            and norm_inf(pb).bit_length() <= _SMALL_BITS):
        g = subresultant_gcd(pa, pb)
        if degree(g) == 0:
            return [1], list(a), list(b)
        return g, scale(divmod_exact(pa, g), ca), scale(divmod_exact(pb, g), cb)
    g = _gcd_large(pa, pb)
    if degree(g) == 0:
        return [1], list(a), list(b)
    return g, scale(divmod_exact(pa, g), ca), scale(divmod_exact(pb, g), cb)


def _degree_certificate(pa, pb, primes, count=2):
    """Upper bound for deg gcd from `count` usable primes."""
    bound = min(degree(pa), degree(pb))
    seen = 0
    for p in primes:
        if pa[-1] % p == 0 or pb[-1] % p == 0:
            continue
        bound = min(bound, len(gcd_mod_p(pa, pb, p)) - 1)
        seen += 1
        if bound == 0 or seen >= count:
            break
    return bound


def _verify_candidate(h, pa, pb, d_bound, check_prime):
    if not h or degree(h) != d_bound:
        return False
    if not divides_mod_p(h, pa, check_prime) or not divides_mod_p(h, pb, check_prime):
        return False
    try:
        divmod_exact(pa, h)
        divmod_exact(pb, h)
    except ExactDivisionError:
        return False
    return True


def _gcd_large(pa: list[int], pb: list[int]) -> list[int]:
    primes = _primes()
    d_bound = _degree_certificate(pa, pb, primes)
    if d_bound == 0:
        return [1]
    check_prime = next(p for p in primes if pa[-1] % p and pb[-1] % p)

    # Heuristic evaluation gcd at xi = 2**t with balanced reconstruction.
    t = min(norm_inf(pa).bit_length(), norm_inf(pb).bit_length()) + 16
    t = (t + 7) // 8 * 8
    for _ in range(5):
        h = _heu_candidate(pa, pb, t)
        if _verify_candidate(h, pa, pb, d_bound, check_prime):
            return _pos(h)
        # Either xi too small to hold the gcd digits, or the degree bound
        # came from unlucky primes; tighten the bound and widen xi.
        d_bound = min(d_bound, _degree_certificate(pa, pb, primes, count=1))
        if d_bound == 0:
            return [1]
        t *= 2

    return _modular_gcd(pa, pb, d_bound, check_prime, primes)


def _heu_candidate(pa, pb, t):
    xi = 1 << t
    va = _eval_pow2(pa, t)
    vb = _eval_pow2(pb, t)
    g = _int_gcd(va, vb)
    digits = []
    while g:
        r = g & (xi - 1)
        if r > xi // 2:
            r -= xi
        digits.append(r)
        g = (g - r) >> t
    return primitive(trim(digits))[1]


def _eval_pow2(c: list[int], t: int) -> int:
    nbytes = (t + 7) // 8
    if t % 8 == 0:
        pos = _pack_nonneg([x if x > 0 else 0 for x in c], nbytes)
        negv = _pack_nonneg([-x if x < 0 else 0 for x in c], nbytes)
        return pos - negv
    return eval_int(c, 1 << t)


def _modular_gcd(pa, pb, d_bound, check_prime, primes):
    lc_target = _int_gcd(pa[-1], pb[-1])
    best_d = d_bound
    G: list[int] = []
    M = 1
    used = 0
    last = None
    for p in primes:
        if pa[-1] % p == 0 or pb[-1] % p == 0:
            continue
        gp = gcd_mod_p(pa, pb, p)
        d = len(gp) - 1
        if d == 0:
            return [1]
        if d > best_d:
            continue
        if d < best_d:
            best_d = d
            G, M, last = [], 1, None
        gp = [int(x) * (lc_target % p) % p for x in gp]
        G = _crt_merge(G, M, gp, p)
        M *= p
        used += 1
        candidate = primitive([_sym(x, M) for x in G])[1]
        if candidate == last or used % 4 == 0:
            if _verify_candidate(candidate, pa, pb, best_d, check_prime):
                return _pos(candidate)
        last = candidate
        if used > 4000:  # pragma: no cover - safety valve
            raise RuntimeError("modular gcd did not converge")
    raise RuntimeError("prime supply exhausted")  # pragma: no cover


def _crt_merge(G, M, gp, p):
    if M == 1:
        return [x % p for x in gp]
    out = []
    inv = pow(M % p, -1, p)
    n = max(len(G), len(gp))
    for i in range(n):
        g_old = G[i] if i < len(G) else 0
        g_new = gp[i] if i < len(gp) else 0
        t = (g_new - g_old) % p * inv % p
        out.append(g_old + M * t)
    return out


def _sym(x, m):
    x %= m
    return x - m if x > m // 2 else x
