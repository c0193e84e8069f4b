import random
from fractions import Fraction
from math import gcd, lcm

import pytest

from algentropy.catalog import catalog_get
from algentropy.degrees import (classify_growth, degree_sequence,
                                qrt_degree_closed_form, verify_recurrence)
from algentropy.errors import DegreeCapExceeded, TooShort
from algentropy.streams import CoefficientStream

QRT_DEGREES = [0, 1, 1, 2, 3, 5, 6, 9, 11, 14, 17, 21, 24, 29, 33]


# -- a deliberately naive, engine-independent symbolic iterator --------------

def _trimf(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _padd(a, b):
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, x in enumerate(b):
        out[i] += x
    return _trimf(out)


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _pgcd(a, b):
    a, b = list(a), list(b)
    while b:
        r = list(a)
        while r and len(r) >= len(b):
            t = r[-1] / b[-1]
            k = len(r) - len(b)
            for j, c in enumerate(b):
                r[j + k] -= t * c
            r.pop()
            _trimf(r)
        a, b = b, r
    return a


def _pdiv(a, b):
    q = []
    r = list(a)
    while r and len(r) >= len(b):
        t = r[-1] / b[-1]
        k = len(r) - len(b)
        q = _padd(q, [Fraction(0)] * k + [t])
        for j, c in enumerate(b):
            r[j + k] -= t * c
        r.pop()
        _trimf(r)
    assert not r
    return q


def naive_degrees(mapping, n_max, x0):
    """Straightforward Fraction-polynomial iteration used as an oracle."""
    num_prev, den_prev = [Fraction(x0)], [Fraction(1)]
    num_cur, den_cur = [Fraction(0), Fraction(1)], [Fraction(1)]
    degrees = [0, 1]
    for n in range(1, n_max):
        xy_num, xy_den, dx, dy = mapping.specialize(n)
        ppow = [[Fraction(1)]]
        qpow = [[Fraction(1)]]
        for _ in range(dx):
            ppow.append(_pmul(ppow[-1], num_cur))
            qpow.append(_pmul(qpow[-1], den_cur))
        rpow = [[Fraction(1)]]
        spow = [[Fraction(1)]]
        for _ in range(dy):
            rpow.append(_pmul(rpow[-1], num_prev))
            spow.append(_pmul(spow[-1], den_prev))

        def assemble(xy):
            total = []
            for (i, j), c in xy.items():
                term = _pmul(_pmul([c], _pmul(ppow[i], qpow[dx - i])),
                             _pmul(rpow[j], spow[dy - j]))
                total = _padd(total, term)
            return total

        big_num = assemble(xy_num)
        big_den = assemble(xy_den)
        g = _pgcd(big_num, big_den)
        if len(g) > 1:
            big_num = _pdiv(big_num, g)
            big_den = _pdiv(big_den, g)
        num_prev, den_prev = num_cur, den_cur
        num_cur, den_cur = big_num, big_den
        degrees.append(max(len(big_num), len(big_den)) - 1)
    return degrees


# -- tests --------------------------------------------------------------------

def test_qrt_degree_sequence_matches_published_list():
    m = catalog_get("eq1-qrt")
    ds = degree_sequence(m, 14)
    assert list(ds.degrees) == QRT_DEGREES


def test_closed_form_values():
    assert qrt_degree_closed_form(0) == 0
    assert qrt_degree_closed_form(5) == 5
    assert qrt_degree_closed_form(14) == 33
    assert [qrt_degree_closed_form(n) for n in range(15)] == QRT_DEGREES


def test_engine_agrees_with_naive_iterator():
    # the naive Fraction-Euclid oracle blows up quickly, so the cross-check
    # covers the first handful of terms (the published sequence covers more)
    for name, n_max in (("eq12-dp1-mult", 5), ("eq1-qrt", 7), ("eq14-hv", 4)):
        m = catalog_get(name)
        fast = degree_sequence(m, n_max, confirm_seed=None)
        slow = naive_degrees(m, n_max, Fraction(5))
        assert list(fast.degrees) == slow, name


def test_degrees_are_seed_independent():
    m = catalog_get("eq12-dp1-mult")
    a = degree_sequence(m, 9, Fraction(5), confirm_seed=None)
    b = degree_sequence(m, 9, Fraction(22, 7), confirm_seed=None)
    c = degree_sequence(m, 9, Fraction(-8, 3), confirm_seed=None)
    assert a.degrees == b.degrees == c.degrees


def test_preimage_count_oracle():
    # d_n equals the number of solutions of x_n(z) = w for random targets w
    rng = random.Random(61)
    from algentropy.mapping import SymbolicState, engine_step
    from algentropy.polynomials import Polynomial
    for name in ("eq1-qrt", "eq12-dp1-mult", "eq14-hv"):
        m = catalog_get(name)
        prev = SymbolicState.from_constant(Fraction(5))
        cur = SymbolicState.seed_variable()
        for n in range(1, 8):
            cur, prev = engine_step(m, n, cur, prev), cur
            num = Polynomial.from_int_coeffs(cur.p) * cur.scalar
            den = Polynomial.from_int_coeffs(cur.q)
            d = cur.degree
            for _ in range(3):
                w = Fraction(rng.randint(10**3, 10**6), rng.randint(1, 97))
                shifted = num - w * den
                assert shifted.degree == d


def test_hv_growth_ratio_window():
    m = catalog_get("eq14-hv")
    ds = degree_sequence(m, 8)
    assert ds.degrees[-1] > ds.degrees[-2] > ds.degrees[-3]
    v = classify_growth(ds)
    assert v.classification == "exponential"
    assert 2.55 <= v.lambda_last <= 2.68


def test_classify_bounded_and_polynomial():
    assert classify_growth([1] * 10).classification == "bounded"
    quad = [n * n for n in range(12)]
    v = classify_growth(quad)
    assert v.classification == "polynomial" and v.order == 2
    lin = [3 * n + 1 for n in range(10)]
    assert classify_growth(lin).order == 1
    published = classify_growth(QRT_DEGREES)
    assert published.classification == "polynomial" and published.order == 2
    assert published.entropy_estimate == 0.0
    assert published.lambda_interval is None


def test_classify_never_calls_periodic_quadratics_exponential():
    rng = random.Random(67)
    for _ in range(40):
        period = rng.randint(1, 6)
        ripple = [rng.randint(-3, 3) for _ in range(period)]
        a = Fraction(rng.randint(1, 5))
        seq = [int(a * n * n) + 10 * n + 50 + ripple[n % period]
               for n in range(18)]
        v = classify_growth(seq)
        assert v.classification != "exponential", seq


def test_classify_too_short():
    with pytest.raises(TooShort):
        classify_growth([0, 1, 2])


def test_degree_cap():
    m = catalog_get("eq14-hv")
    with pytest.raises(DegreeCapExceeded) as exc:
        degree_sequence(m, 10, degree_cap=100)
    assert exc.value.partial  # the partial sequence is reported


def test_verify_recurrence_on_published_degrees():
    seq = [qrt_degree_closed_form(n) for n in range(30)]
    inhom = CoefficientStream.periodic([0, 2])  # 1 - (-1)^n
    assert verify_recurrence(seq, [1, -1, 0, -1, 1], inhom)
    assert verify_recurrence([5] * 12, [1, -1], 0)
    assert not verify_recurrence(seq, [1, -2, 1], 0)
