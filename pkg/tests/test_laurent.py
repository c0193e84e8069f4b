import random
from fractions import Fraction

import pytest

from algentropy.errors import InvertZero, PrecisionExhausted
from algentropy.laurent import LaurentSeries, laurent_arith


def test_geometric_inverse():
    s = LaurentSeries.eps(2) * (1 + LaurentSeries.eps())
    inv = laurent_arith("inv", s, terms=6)
    assert inv.valuation == -2
    assert [inv.coefficient(k) for k in range(-2, 4)] == [1, -1, 1, -1, 1, -1]


def test_monomial_product():
    s = LaurentSeries.eps(-2) * LaurentSeries.eps(2)
    assert s.valuation == 0 and s.coefficient(0) == 1 and s.is_exact


def test_cancellation_renormalizes_and_shrinks_window():
    a = LaurentSeries(0, (1, 1), bound=2)   # 1 + eps + O(eps^2)
    b = LaurentSeries(0, (-1, 1), bound=2)  # -1 + eps + O(eps^2)
    s = laurent_arith("add", a, b)
    assert s.valuation == 1
    assert s.coefficient(1) == 2
    assert s.precision == 1  # window shrank by the cancelled coefficient
    # independent coefficient arithmetic
    assert s.coefficient(1) == a.coefficient(1) + b.coefficient(1)


def test_full_cancellation_raises_for_truncated():
    a = LaurentSeries(0, (1, 2, 3), bound=3)
    with pytest.raises(PrecisionExhausted):
        a - a
    # exact series cancel silently to the exact zero
    e = LaurentSeries(0, (1, 2, 3))
    assert (e - e).is_zero


def test_invert_zero():
    with pytest.raises(InvertZero):
        LaurentSeries.zero().inverse()


def test_valuation_additivity_randomized():
    rng = random.Random(41)
    for _ in range(300):
        v1, v2 = rng.randint(-5, 5), rng.randint(-5, 5)
        c1 = [Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(0, 4))]
        c2 = [Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(0, 4))]
        s = LaurentSeries(v1, [Fraction(rng.randint(1, 5))] + c1)
        t = LaurentSeries(v2, [Fraction(rng.randint(1, 5))] + c2)
        assert (s * t).valuation == s.valuation + t.valuation
        inv = s.inverse(8)
        assert inv.valuation == -s.valuation
        one = s * inv
        assert one.valuation == 0 and one.coefficient(0) == 1


def test_window_propagation_through_products():
    a = LaurentSeries(1, (1, 1), bound=3)      # eps + eps^2 + O(eps^3)
    b = LaurentSeries(-1, (2,), bound=0)       # 2/eps + O(1)
    p = a * b
    # error term: eps * O(1) -> O(eps); nothing above eps^0 is guaranteed
    assert p.valuation == 0 and p.bound == 1
    assert p.coefficient(0) == 2


def test_inverse_respects_existing_window():
    s = LaurentSeries(0, (1, 1), bound=2)
    inv = s.inverse(10)
    assert inv.precision == 2  # cannot exceed the input's knowledge
    assert inv.coefficient(0) == 1 and inv.coefficient(1) == -1


def test_division_and_powers():
    s = LaurentSeries(0, (1, 1))
    q = LaurentSeries.constant(1) / s
    assert q.coefficient(0) == 1 and q.coefficient(1) == -1
    sq = s**2
    assert [sq.coefficient(k) for k in range(3)] == [1, 2, 1]
