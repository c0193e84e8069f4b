"""Parser for the mapping-definition expression language.

Grammar (EBNF, whitespace insignificant):

    expr    = term , { ("+" | "-") , term } ;
    term    = unary , { ("*" | "/") , unary } ;
    unary   = { "+" | "-" } , power ;
    power   = atom , [ "^" , integer ] ;
    atom    = integer | symbol | "(" , expr , ")" ;
    symbol  = name , [ "[" , "n" , [ ("+" | "-") , integer ] , "]" ] ;
    name    = letter , { letter | digit | "_" } ;

`x` stands for x_n and `y` for x_{n-1}.  Any other name must be a bound
parameter or a stream; `a[n+1]`, `a[n]`, `a[n-1]` (also written `a[+1]`,
`a[0]`, `a[-1]`) select shifted stream access.  Exponents are positive
integers; rationals are written with the division operator (`22/7`), so
no float ever appears.  Expressions denote ratios of polynomials; the
parser tracks an exact (numerator, denominator) pair.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .errors import DivisionByZeroPolynomial, MappingSyntaxError
from .mapping import Mapping, stream_symbol
from .mpoly import MPoly
from .streams import CoefficientStream

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*(?:\[\s*(?:n)?\s*(?:[+-]\s*\d+)?\s*\])?)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)

_BRACKET = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)\[\s*(n)?\s*(?:([+-])\s*(\d+))?\s*\]$")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise MappingSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            out.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def _normalize_name(token: str, pos: int) -> str:
    """Canonical symbol: bare name for shift 0, name[n+k] otherwise."""
    if "[" not in token:
        return token
    m = _BRACKET.match(token)
    if not m:
        raise MappingSyntaxError(f"malformed stream reference {token!r}", pos)
    base, has_n, sign, digits = m.groups()
    if digits is None:
        shift = 0
    else:
        shift = int(digits) * (-1 if sign == "-" else 1)
    if base in ("x", "y"):
        raise MappingSyntaxError(f"{base} cannot carry an index", pos)
    if shift not in (-1, 0, 1):
        raise MappingSyntaxError(
            f"stream shift {shift:+d} out of range (only -1, 0, +1)", pos)
    return stream_symbol(base, shift)


class _Parser:
    def __init__(self, tokens, vars_tuple):
        self.tokens = tokens
        self.i = 0
        self.vars = vars_tuple

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise MappingSyntaxError(f"expected {op!r}", pos)
        self.advance()

    # each rule returns an exact (num, den) MPoly pair

    def parse(self):
        pair = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise MappingSyntaxError(f"trailing input {val!r}", pos)
        return pair

    def expr(self):
        num, den = self.term()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                n2, d2 = self.term()
                if val == "+":
                    num, den = num * d2 + n2 * den, den * d2
                else:
                    num, den = num * d2 - n2 * den, den * d2
            else:
                return num, den

    def term(self):
        num, den = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.advance()
                n2, d2 = self.unary()
                if val == "*":
                    num, den = num * n2, den * d2
                else:
                    if n2.is_zero:
                        raise DivisionByZeroPolynomial(
                            f"division by zero polynomial at position {pos}")
                    num, den = num * d2, den * n2
            else:
                return num, den

    def unary(self):
        sign = 1
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                if val == "-":
                    sign = -sign
            else:
                break
        num, den = self.power()
        if sign < 0:
            num = -num
        return num, den

    def power(self):
        num, den = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            kind, val, pos = self.peek()
            if kind != "int":
                raise MappingSyntaxError("exponent must be a positive integer", pos)
            self.advance()
            k = int(val)
            if k < 1:
                raise MappingSyntaxError("exponent must be a positive integer", pos)
            num, den = num**k, den**k
        return num, den

    def atom(self):
        kind, val, pos = self.advance()
        if kind == "int":
            return MPoly.constant(self.vars, Fraction(int(val))), \
                MPoly.constant(self.vars, 1)
        if kind == "name":
            sym = _normalize_name(val, pos)
            return MPoly.variable(self.vars, sym), MPoly.constant(self.vars, 1)
        if kind == "op" and val == "(":
            pair = self.expr()
            self.expect_op(")")
            return pair
        raise MappingSyntaxError(f"unexpected token {val or 'end of input'!r}", pos)


def parse_update_rule(text: str) -> tuple[MPoly, MPoly]:
    """Parse an expression into an exact (num, den) MPoly pair."""
    tokens = _tokenize(text)
    names = []
    for kind, val, pos in tokens:
        if kind == "name":
            sym = _normalize_name(val, pos)
            if sym not in names:
                names.append(sym)
    others = sorted(n for n in names if n not in ("x", "y"))
    vars_tuple = ("x", "y", *others)
    return _Parser(tokens, vars_tuple).parse()


def parse_mapping(text: str, *, name: str = "mapping",
                  parameters: dict | None = None,
                  streams: dict[str, CoefficientStream] | None = None) -> Mapping:
    """Parse an update-rule expression into a structurally valid Mapping."""
    num, den = parse_update_rule(text)
    if den.is_zero:
        raise DivisionByZeroPolynomial("denominator is identically zero")
    return Mapping(name, num, den, parameters, streams, text=text)


def format_mapping(m: Mapping) -> str:
    """Canonical printable form; reparsing yields a structurally equal Mapping."""
    den = m.den
    if not den.is_zero and den.terms == {(0,) * len(den.vars): Fraction(1)}:
        return f"({m.num})"
    return f"({m.num}) / ({m.den})"


def mapping_from_json(blob: dict | str | Path) -> Mapping:
    """Load a mapping-definition JSON document (see docs/formats.md)."""
    if isinstance(blob, (str, Path)):
        blob = json.loads(Path(blob).read_text(encoding="utf-8"))
    params = {k: Fraction(v) for k, v in blob.get("parameters", {}).items()}
    streams = {k: CoefficientStream.from_json(v)
               for k, v in blob.get("streams", {}).items()}
    return parse_mapping(blob["update"], name=blob.get("name", "mapping"),
                         parameters=params, streams=streams)


def mapping_to_json(m: Mapping) -> dict:
    return {
        "name": m.name,
        "update": m.text or format_mapping(m),
        "parameters": {k: str(v) for k, v in m.parameters.items()},
        "streams": {k: s.to_json() for k, s in m.streams.items()},
    }
