import math
import random
from fractions import Fraction

from algentropy.polynomials import Polynomial
from algentropy.roots import (cauchy_bound, count_roots_in, isolate_largest_real_root,
                              isolate_real_roots, rational_roots, sturm_chain)

z = Polynomial.variable()


def test_benchmark_roots():
    iv = isolate_largest_real_root(z**3 - 2 * z**2 - 2 * z + 1, Fraction(1),
                                   Fraction(1, 10**10))
    assert abs(float(iv) - (3 + math.sqrt(5)) / 2) < 1e-9
    assert isolate_largest_real_root((z - 1)**2, Fraction(1)) is None
    iv2 = isolate_largest_real_root(z**2 - z - 1, Fraction(1))
    assert abs(float(iv2) - (1 + math.sqrt(5)) / 2) < 1e-9


def test_exact_rational_root():
    iv = isolate_largest_real_root(z - 3, Fraction(1))
    assert iv.is_exact and iv.lo == 3
    iv2 = isolate_largest_real_root((z - 2) * (z**2 + 1), Fraction(1))
    assert iv2.is_exact and iv2.lo == 2


def test_threshold_is_strict():
    # a root exactly at the threshold does not count
    assert isolate_largest_real_root(z - 1, Fraction(1)) is None
    p = (z - 1) * (z - Fraction(3, 2))
    iv = isolate_largest_real_root(p, Fraction(1))
    assert iv.lo <= Fraction(3, 2) <= iv.hi or iv.is_exact


def test_multiplicity_reporting():
    p = (z - 2)**3 * (z - 1)
    iv = isolate_largest_real_root(p, Fraction(1))
    assert iv.multiplicity == 3
    assert iv.lo <= 2 <= iv.hi if not iv.is_exact else iv.lo == 2


def test_soundness_on_random_products():
    rng = random.Random(23)
    for _ in range(120):
        roots = sorted(Fraction(rng.randint(-8, 8), rng.randint(1, 4))
                       for _ in range(rng.randint(1, 4)))
        p = Polynomial.one()
        for r in set(roots):
            p = p * (z - r)**rng.randint(1, 2)
        threshold = Fraction(rng.randint(-10, 2))
        above = [r for r in set(roots) if r > threshold]
        iv = isolate_largest_real_root(p, threshold)
        if not above:
            assert iv is None
            continue
        want = max(above)
        assert iv.lo <= want <= iv.hi
        # widening by 2x still contains exactly one root of the square-free part
        sq = p.square_free_part()
        chain = sturm_chain(sq)
        w = iv.width if iv.width else Fraction(1, 10**13)
        assert count_roots_in(chain, iv.lo - w, iv.hi + w) == 1


def test_sign_change_certificate():
    rng = random.Random(29)
    for _ in range(60):
        p = Polynomial([rng.randint(-9, 9) for _ in range(rng.randint(2, 7))]
                       + [rng.randint(1, 9)])
        iv = isolate_largest_real_root(p, Fraction(0))
        if iv is None or iv.is_exact:
            continue
        sq = p.square_free_part()
        assert sq.sign_at(iv.lo) * sq.sign_at(iv.hi) < 0


def test_isolate_real_roots_counts():
    p = (z - 1) * (z + 2) * (z - Fraction(7, 2))
    ivs = isolate_real_roots(p)
    assert len(ivs) == 3
    found = sorted(Fraction(iv.lo + iv.hi, 2) for iv in ivs)
    for got, want in zip(found, [-2, 1, Fraction(7, 2)]):
        assert abs(got - want) < Fraction(1, 1000)


def test_rational_roots_extraction():
    p = 6 * (z - Fraction(2, 3))**2 * (z + 5) * (z**2 + 7)
    got = rational_roots(p)
    assert got == [(Fraction(-5), 1), (Fraction(2, 3), 2)]
    assert rational_roots(z**2 - 2) == []
    assert rational_roots(z**3) == [(Fraction(0), 3)]


def test_cauchy_bound_contains_roots():
    p = (z - 9) * (z + 11)
    b = cauchy_bound(p)
    assert b > 11
