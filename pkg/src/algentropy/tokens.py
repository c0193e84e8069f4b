"""Value tokens: the labels singularity patterns are written in.

A pattern entry is a positioned token; tokens name finite rationals,
infinity, bound parameters, shifted stream values, opaque symbolic labels
(for hand-written pattern families), or the "free" marker that closes a
confined pattern.  Serialized forms: "p/q", "inf", "param:a",
"stream:z[+1]", "sym:label", "free".
"""

from __future__ import annotations

from fractions import Fraction


class ValueToken:
    __slots__ = ("kind", "value", "name", "shift")

    def __init__(self, kind: str, value: Fraction | None = None,
                 name: str | None = None, shift: int | None = None):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "shift", shift)

    def __setattr__(self, *a):
        raise AttributeError("ValueToken is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def finite(cls, q) -> "ValueToken":
        return cls("finite", value=Fraction(q))

    @classmethod
    def infinity(cls) -> "ValueToken":
        return cls("infinity")

    @classmethod
    def param(cls, name: str, value=None) -> "ValueToken":
        return cls("param", value=None if value is None else Fraction(value),
                   name=name)

    @classmethod
    def stream(cls, name: str, shift: int = 0) -> "ValueToken":
        return cls("stream", name=name, shift=shift)

    @classmethod
    def symbol(cls, label: str) -> "ValueToken":
        return cls("symbol", name=label)

    @classmethod
    def free(cls) -> "ValueToken":
        return cls("free")

    # -- identity ------------------------------------------------------------

    def _key(self):
        if self.kind == "finite":
            return ("finite", self.value)
        if self.kind == "param":
            return ("param", self.name)
        if self.kind == "stream":
            return ("stream", self.name, self.shift)
        if self.kind == "symbol":
            return ("symbol", self.name)
        return (self.kind,)

    def __eq__(self, other):
        if not isinstance(other, ValueToken):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        return str(self) < str(other)

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinity"

    @property
    def is_free(self) -> bool:
        return self.kind == "free"

    def resolved(self) -> Fraction | None:
        """The rational value this token stands for, when one is known."""
        if self.kind == "finite":
            return self.value
        if self.kind == "param":
            return self.value
        return None

    def __str__(self):
        if self.kind == "finite":
            return str(self.value)
        if self.kind == "infinity":
            return "inf"
        if self.kind == "param":
            return f"param:{self.name}"
        if self.kind == "stream":
            return f"stream:{self.name}[{self.shift:+d}]"
        if self.kind == "symbol":
            return f"sym:{self.name}"
        return "free"

    __repr__ = __str__


def parse_token(text: str) -> ValueToken:
    text = text.strip()
    if text == "inf":
        return ValueToken.infinity()
    if text == "free":
        return ValueToken.free()
    if text.startswith("param:"):
        return ValueToken.param(text[6:])
    if text.startswith("sym:"):
        return ValueToken.symbol(text[4:])
    if text.startswith("stream:"):
        body = text[7:]
        name, _, rest = body.partition("[")
        shift = int(rest.rstrip("]")) if rest else 0
        return ValueToken.stream(name, shift)
    return ValueToken.finite(Fraction(text))
