import random
from fractions import Fraction
from math import gcd, lcm

import pytest

from algentropy import intpoly
from algentropy.intpoly import ExactDivisionError


def frac_euclid_gcd(a, b):
    """Independent reference: Euclid over Fraction, primitive-int result."""
    A = [Fraction(c) for c in a]
    B = [Fraction(c) for c in b]

    def trimf(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    A, B = trimf(A), trimf(B)
    while B:
        R = list(A)
        while R and len(R) >= len(B):
            t = R[-1] / B[-1]
            k = len(R) - len(B)
            for j, c in enumerate(B):
                R[j + k] -= t * c
            R.pop()
            while R and R[-1] == 0:
                R.pop()
        A, B = B, R
    if not A:
        return []
    lead = A[-1]
    monic = [c / lead for c in A]
    den = 1
    for c in monic:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in monic]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints]


def rand_poly(rng, max_deg, lo=-9, hi=9):
    c = [rng.randint(lo, hi) for _ in range(rng.randint(0, max_deg))]
    c.append(rng.randint(1, hi))
    return c


def test_pseudo_divmod_identity():
    rng = random.Random(1)
    for _ in range(400):
        a = rand_poly(rng, 9)
        b = rand_poly(rng, 7)
        if len(a) < len(b):
            a, b = b, a
        q, r = intpoly.pseudo_divmod(a, b)
        e = len(a) - len(b) + 1
        lhs = intpoly.scale(a, b[-1] ** e)
        assert lhs == intpoly.add(intpoly.mul(q, b), r)
        assert not r or len(r) < len(b)


@pytest.mark.parametrize("seed", [2, 3, 4])
def test_gcd_matches_independent_euclid(seed):
    rng = random.Random(seed)
    for _ in range(200):
        g = rand_poly(rng, 5)
        a = intpoly.mul(g, rand_poly(rng, 6))
        b = intpoly.mul(g, rand_poly(rng, 6))
        assert intpoly.subresultant_gcd(a, b) == frac_euclid_gcd(a, b)
        assert intpoly.gcd_primitive(a, b) == frac_euclid_gcd(a, b)


def test_gcd_of_coprime_inputs():
    rng = random.Random(9)
    for _ in range(100):
        a = rand_poly(rng, 6)
        b = rand_poly(rng, 6)
        ref = frac_euclid_gcd(a, b)
        assert intpoly.gcd_primitive(a, b) == ref


def test_kronecker_matches_schoolbook():
    rng = random.Random(11)
    for _ in range(150):
        a = intpoly.trim([rng.randint(-10**8, 10**8)
                          for _ in range(rng.randint(1, 120))])
        b = intpoly.trim([rng.randint(-10**8, 10**8)
                          for _ in range(rng.randint(1, 120))])
        if not a or not b:
            continue
        assert intpoly._mul_kronecker(a, b) == intpoly._mul_school(a, b)


def test_exact_division_and_cofactors():
    rng = random.Random(13)
    for _ in range(150):
        a = rand_poly(rng, 8)
        b = rand_poly(rng, 5)
        prod = intpoly.mul(a, b)
        assert intpoly.divmod_exact(prod, b) == a
    with pytest.raises(ExactDivisionError):
        intpoly.divmod_exact([1, 0, 1], [1, 1])


def test_large_modular_gcd_with_big_coefficients():
    rng = random.Random(17)
    common = [rng.randint(-10**40, 10**40) for _ in range(120)] + [1]
    a = intpoly.mul(common, [rng.randint(-10**40, 10**40) for _ in range(90)] + [1])
    b = intpoly.mul(common, [rng.randint(-10**40, 10**40) for _ in range(70)] + [1])
    g, qa, qb = intpoly.gcd_cofactors(a, b)
    assert intpoly.mul(g, qa) == a
    assert intpoly.mul(g, qb) == b
    assert intpoly.degree(g) >= 120


def test_content_primitive():
    assert intpoly.primitive([6, -12, 18]) == (6, [1, -2, 3])
    assert intpoly.content([0, 0]) == 0
    assert intpoly.primitive([]) == (0, [])
