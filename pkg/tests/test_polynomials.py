import random
from fractions import Fraction

import pytest

from algentropy.errors import ExactDivisionError
from algentropy.polynomials import NEG_INFINITY, Polynomial, poly_gcd

z = Polynomial.variable()


def test_degree_conventions():
    assert Polynomial.zero().degree == NEG_INFINITY
    assert Polynomial.constant(7).degree == 0
    assert (z**3 - z).degree == 3


def test_gcd_examples():
    assert poly_gcd(z**2 - 1, z - 1) == z - 1
    # the cubic from the non-integrable benchmark factors as (z+1)(z^2-3z+1)
    cubic = z**3 - 2 * z**2 - 2 * z + 1
    assert (z + 1) * (z**2 - 3 * z + 1) == cubic
    assert poly_gcd(cubic, z + 1) == z + 1
    rng = random.Random(3)
    for _ in range(20):
        p = Polynomial([rng.randint(-9, 9) for _ in range(6)] + [1])
        assert poly_gcd(p, Polynomial.one()) == Polynomial.one()


def test_gcd_is_monic_and_divides():
    rng = random.Random(5)
    for _ in range(60):
        g = Polynomial([rng.randint(-5, 5) for _ in range(3)] + [rng.randint(1, 5)])
        a = g * Polynomial([rng.randint(-5, 5) for _ in range(3)] + [rng.randint(1, 5)])
        b = g * Polynomial([rng.randint(-5, 5) for _ in range(4)] + [rng.randint(1, 5)])
        d = poly_gcd(a, b)
        assert d.is_monic
        assert (a % d).is_zero and (b % d).is_zero
        # re-reducing the cofactors leaves nothing shared
        assert poly_gcd(a.exact_div(d), b.exact_div(d)).degree == 0


def test_divmod_roundtrip():
    rng = random.Random(8)
    for _ in range(100):
        a = Polynomial([Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                        for _ in range(rng.randint(1, 9))])
        b = Polynomial([Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                        for _ in range(rng.randint(1, 6))])
        if b.is_zero:
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero or r.degree < b.degree


def test_exact_div_raises_on_remainder():
    with pytest.raises(ExactDivisionError):
        (z**2 + 1).exact_div(z + 1)


def test_power_and_evaluation():
    p = (z - 1)**3
    assert p == z**3 - 3 * z**2 + 3 * z - 1
    assert p(Fraction(2)) == 1
    assert p(Fraction(1)) == 0
    assert (z**2 + 1)(z - 1) == z**2 - 2 * z + 2


def test_square_free_decomposition():
    p = (z - 1)**3 * (z + 2)**2 * (z - 5)
    decomp = p.square_free_decomposition()
    as_dict = {tuple(f.coeffs): m for f, m in decomp}
    assert as_dict == {(z - 5).coeffs: 1, (z + 2).coeffs: 2, (z - 1).coeffs: 3}
    sq = p.square_free_part()
    assert sq == ((z - 1) * (z + 2) * (z - 5)).monic()


def test_to_integer_normal_form():
    p = Fraction(2, 3) * z**2 - Fraction(4, 9)
    scalar, ints = p.to_integer()
    assert ints == [-2, 0, 3]
    assert Polynomial.from_int_coeffs(ints) * scalar == p


def test_printing_reads_back():
    p = 2 * z**3 - z + Fraction(1, 2)
    assert str(p) == "2*z^3 - z + 1/2"
