from fractions import Fraction

import pytest

from algentropy.errors import AlgentropyError
from algentropy.streams import CoefficientStream


def test_constant_and_polynomial():
    c = CoefficientStream.constant(Fraction(3, 4))
    assert c(0) == c(100) == Fraction(3, 4)
    p = CoefficientStream.polynomial_in_n([1, Fraction(1, 2)])
    assert [p(n) for n in range(4)] == [1, Fraction(3, 2), 2, Fraction(5, 2)]
    assert p(-2) == 0


def test_periodic():
    s = CoefficientStream.periodic([0, 2])
    assert [s(n) for n in range(5)] == [0, 2, 0, 2, 0]
    assert s(-1) == 2


def test_recurrence_forward_and_memo():
    # a_n = a_{n-1} + a_{n-2} - a_{n-3}
    s = CoefficientStream.recurrence([1, 1, -1], [2, 3, 5])
    want = [2, 3, 5, 6, 8, 9, 11, 12, 14]
    assert [s(n) for n in range(9)] == want
    # re-evaluation agrees (memo consistency)
    assert [s(n) for n in range(9)] == want


def test_recurrence_satisfies_its_own_relation():
    s = CoefficientStream.recurrence([1, 1, -1], [2, 3, 5])
    assert s.satisfies([1, 1, -1], range(3, 53))
    assert not s.satisfies([2, -1], range(2, 20))


def test_recurrence_backward_extension():
    s = CoefficientStream.recurrence([1, 1, -1], [2, 3, 5])
    # relation at n=2: a_2 = a_1 + a_0 - a_{-1}  =>  a_{-1} = 0
    assert s(-1) == 0
    assert s.satisfies([1, 1, -1], range(2, 10))
    blocked = CoefficientStream.recurrence([1, 0], [1, 2])
    with pytest.raises(AlgentropyError):
        blocked(-1)


def test_antiperiodic_recurrence():
    s = CoefficientStream.recurrence([0, 0, 0, -1],
                                     [1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)])
    assert s(4) == -1 and s(5) == Fraction(-1, 2)
    assert s(8) == 1
    assert all(s(n) != 0 for n in range(30))


def test_json_roundtrip():
    for s in [CoefficientStream.constant(2),
              CoefficientStream.polynomial_in_n([1, 1, Fraction(1, 2)]),
              CoefficientStream.periodic([0, 2]),
              CoefficientStream.recurrence([1, 1, -1], [2, 3, 5])]:
        back = CoefficientStream.from_json(s.to_json())
        assert [back(n) for n in range(8)] == [s(n) for n in range(8)]
