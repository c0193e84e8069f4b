import random
from fractions import Fraction

import pytest

from algentropy.errors import ZeroDenominator
from algentropy.polynomials import Polynomial, poly_gcd
from algentropy.ratfun import RationalFunction, ratfun_reduce

z = Polynomial.variable()


def test_basic_reduction():
    rf = ratfun_reduce(z**2 - 1, z - 1)
    assert rf.num == z + 1
    assert rf.den == Polynomial.one()
    assert rf.degree == 1


def test_constant_folding_normal_form():
    rf = ratfun_reduce(2 * (z - 3), 5 * (z - 1))
    # independent check by cross-multiplication against the inputs
    assert rf.num * (5 * (z - 1)) == (2 * (z - 3)) * rf.den
    assert rf.den.is_monic and rf.den == z - 1
    assert rf.degree == 1


def test_constant_degree_zero():
    rf = ratfun_reduce(Polynomial.constant(7), Polynomial.one())
    assert rf.degree == 0 and rf.num == Polynomial.constant(7)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDenominator):
        ratfun_reduce(z, Polynomial.zero())


def test_reduction_idempotent_and_coprime():
    rng = random.Random(31)
    for _ in range(80):
        num = Polynomial([Fraction(rng.randint(-9, 9), rng.randint(1, 3))
                          for _ in range(rng.randint(1, 6))])
        den = Polynomial([rng.randint(-9, 9) for _ in range(rng.randint(0, 5))]
                         + [rng.randint(1, 9)])
        common = Polynomial([rng.randint(-4, 4), 1])
        rf = ratfun_reduce(num * common, den * common)
        if rf.num.is_zero:
            continue
        assert poly_gcd(rf.num, rf.den) == Polynomial.one()
        again = ratfun_reduce(rf.num, rf.den)
        assert again == rf
        # value equality via cross multiplication
        assert rf.num * (den * common) == (num * common) * rf.den


def test_arithmetic_matches_fraction_values():
    rng = random.Random(37)
    a = ratfun_reduce(z**2 + 1, z - 2)
    b = ratfun_reduce(3 * z, z + 1)
    combined = {
        "+": a + b, "-": a - b, "*": a * b, "/": a / b,
    }
    for _ in range(40):
        pt = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
        va, vb = a.evaluate(pt), b.evaluate(pt)
        if va is None or vb is None or vb == 0:
            continue
        ref = {"+": va + vb, "-": va - vb, "*": va * vb, "/": va / vb}
        for op, rf in combined.items():
            got = rf.evaluate(pt)
            if got is not None:
                assert got == ref[op]
