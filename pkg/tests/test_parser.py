import json
from fractions import Fraction

import pytest

from algentropy.catalog import catalog_entry, catalog_names
from algentropy.errors import (DivisionByZeroPolynomial, MappingSyntaxError,
                               UnboundSymbol)
from algentropy.parser import (format_mapping, mapping_from_json,
                               mapping_to_json, parse_mapping)
from algentropy.streams import CoefficientStream


def test_hv_form():
    m = parse_mapping("x + 1/x^2 - y")
    num, den, dx, dy = m.specialize(0)
    assert den == {(2, 0): Fraction(1)}
    assert num == {(3, 0): Fraction(1), (0, 0): Fraction(1), (2, 1): Fraction(-1)}
    assert (dx, dy) == (3, 1)


def test_parameterized_form():
    m = parse_mapping("a*(x-b)/((x-1)*y)", parameters={"a": 2, "b": 3})
    num, den, dx, dy = m.specialize(5)
    assert num == {(1, 0): Fraction(2), (0, 0): Fraction(-6)}
    assert den == {(1, 1): Fraction(1), (0, 1): Fraction(-1)}


def test_syntax_error_with_position():
    with pytest.raises(MappingSyntaxError) as exc:
        parse_mapping("x/")
    assert exc.value.position == 2
    with pytest.raises(MappingSyntaxError):
        parse_mapping("x + * y")
    with pytest.raises(MappingSyntaxError):
        parse_mapping("x^0 + y")  # exponents are positive integers
    with pytest.raises(MappingSyntaxError):
        parse_mapping("x[n+1] + y")  # x cannot carry an index


def test_unbound_symbol():
    with pytest.raises(UnboundSymbol):
        parse_mapping("q*x + y")
    # binding it as a parameter fixes the same text
    parse_mapping("q*x + y", parameters={"q": 7})


def test_division_by_zero_polynomial():
    with pytest.raises(DivisionByZeroPolynomial):
        parse_mapping("x/(y - y)")


def test_stream_shift_syntax():
    s = CoefficientStream.polynomial_in_n([0, 1])
    m = parse_mapping("z[n+1] + z[n]*x - z[n-1]*y", streams={"z": s})
    num, den, _, _ = m.specialize(3)
    assert num == {(0, 0): Fraction(4), (1, 0): Fraction(3), (0, 1): Fraction(-2)}
    # alternative spellings normalize to the same symbols
    m2 = parse_mapping("z[+1] + z*x - z[-1]*y", streams={"z": s})
    assert m2.specialize(3)[0] == num


def test_rationals_are_division():
    m = parse_mapping("22/7 + x - y")
    num, den, _, _ = m.specialize(0)
    assert num[(0, 0)] / den[(0, 0)] == Fraction(22, 7)
    assert num[(1, 0)] / den[(0, 0)] == 1


def test_roundtrip_all_catalog_entries():
    for name in catalog_names():
        entry = catalog_entry(name)
        m = entry.mapping
        text = format_mapping(m)
        again = parse_mapping(text, name=m.name,
                              parameters=m.parameters, streams=m.streams)
        assert again.num == m.num and again.den == m.den


def test_mapping_json_roundtrip(tmp_path):
    entry = catalog_entry("eq12-dp1-mult")
    blob = mapping_to_json(entry.mapping)
    path = tmp_path / "m.json"
    path.write_text(json.dumps(blob))
    back = mapping_from_json(path)
    assert back.num == entry.mapping.num
    assert back.den == entry.mapping.den
    assert back.specialize(4) == entry.mapping.specialize(4)
