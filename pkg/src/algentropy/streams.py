"""n-dependent exact coefficient streams for deautonomised mappings.

Four kinds cover everything the catalog needs:

  constant          a_n = q
  polynomial        a_n = c_0 + c_1 n + c_2 n^2 + ...
  periodic          a_n cycles through a fixed list
  recurrence        a_n = r_1 a_{n-1} + ... + r_k a_{n-k}, given k seeds

Values are exact rationals for every queried index.  Recurrence streams
memoize; recomputation is idempotent and entries are written atomically,
so concurrent readers are safe.  Indices may be negative for every kind;
a recurrence extends backwards only if its trailing coefficient is
nonzero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import AlgentropyError


def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class CoefficientStream:
    """Exactly evaluable sequence n -> Q."""

    __slots__ = ("kind", "data", "_memo")

    def __init__(self, kind: str, data: tuple):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "_memo", {})

    def __setattr__(self, *a):
        raise AttributeError("CoefficientStream is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, value) -> "CoefficientStream":
        return cls("constant", (_fr(value),))

    @classmethod
    def polynomial_in_n(cls, coeffs: Sequence) -> "CoefficientStream":
        return cls("polynomial", tuple(_fr(c) for c in coeffs))

    @classmethod
    def periodic(cls, values: Sequence) -> "CoefficientStream":
        vals = tuple(_fr(v) for v in values)
        if not vals:
            raise ValueError("periodic stream needs at least one value")
        return cls("periodic", vals)

    @classmethod
    def recurrence(cls, coeffs: Sequence, initial: Sequence) -> "CoefficientStream":
        cs = tuple(_fr(c) for c in coeffs)
        init = tuple(_fr(v) for v in initial)
        if len(init) != len(cs):
            raise ValueError("need exactly one initial value per coefficient")
        if not cs:
            raise ValueError("empty recurrence")
        return cls("recurrence", (cs, init))

    # -- evaluation ------------------------------------------------------------

    def value_at(self, n: int) -> Fraction:
        if self.kind == "constant":
            return self.data[0]
        if self.kind == "polynomial":
            acc = Fraction(0)
            for c in reversed(self.data):
                acc = acc * n + c
            return acc
        if self.kind == "periodic":
            return self.data[n % len(self.data)]
        return self._recurrence_at(n)

    __call__ = value_at

    def _recurrence_at(self, n: int) -> Fraction:
        coeffs, init = self.data
        order = len(coeffs)
        if 0 <= n < order:
            return init[n]
        memo = self._memo
        if n in memo:
            return memo[n]
        if n >= order:
            window = list(init)
            for m in range(order, n + 1):
                nxt = memo.get(m)
                if nxt is None:
                    nxt = sum(c * v for c, v in zip(coeffs, reversed(window)))
                    memo[m] = nxt
                window = window[1:] + [nxt]
            return memo[n]
        # n < 0: back-solve a_{m} from the relation at m + order
        if coeffs[-1] == 0:
            raise AlgentropyError(
                "recurrence stream cannot extend to negative indices "
                "(trailing coefficient is zero)")
        for m in range(-1, n - 1, -1):
            if m in memo:
                continue
            head = self.value_at(m + order)
            partial = sum(coeffs[i] * self.value_at(m + order - 1 - i)
                          for i in range(order - 1))
            memo[m] = (head - partial) / coeffs[-1]
        return memo[n]

    # -- bookkeeping -------------------------------------------------------------

    def satisfies(self, coeffs: Sequence, indices: Sequence[int]) -> bool:
        """Check a_n = sum coeffs[i] * a_{n-1-i} at each given n."""
        cs = [_fr(c) for c in coeffs]
        for n in indices:
            lhs = self.value_at(n)
            rhs = sum(c * self.value_at(n - 1 - i) for i, c in enumerate(cs))
            if lhs != rhs:
                return False
        return True

    def to_json(self) -> dict:
        if self.kind == "constant":
            return {"kind": "constant", "value": str(self.data[0])}
        if self.kind == "polynomial":
            return {"kind": "polynomial", "coeffs": [str(c) for c in self.data]}
        if self.kind == "periodic":
            return {"kind": "periodic", "values": [str(v) for v in self.data]}
        coeffs, init = self.data
        return {"kind": "recurrence",
                "coeffs": [str(c) for c in coeffs],
                "initial": [str(v) for v in init]}

    @classmethod
    def from_json(cls, blob: dict) -> "CoefficientStream":
        kind = blob.get("kind")
        if kind == "constant":
            return cls.constant(Fraction(blob["value"]))
        if kind == "polynomial":
            return cls.polynomial_in_n([Fraction(c) for c in blob["coeffs"]])
        if kind == "periodic":
            return cls.periodic([Fraction(v) for v in blob["values"]])
        if kind == "recurrence":
            return cls.recurrence([Fraction(c) for c in blob["coeffs"]],
                                  [Fraction(v) for v in blob["initial"]])
        raise AlgentropyError(f"unknown stream kind {kind!r}")

    def __repr__(self):
        return f"CoefficientStream({self.kind}, {self.data})"
