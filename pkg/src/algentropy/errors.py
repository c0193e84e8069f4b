"""Exception hierarchy shared across the toolkit.

Every error raised by the package derives from AlgentropyError so callers
(notably the CLI) can distinguish tool failures from programming bugs.
"""

from __future__ import annotations


class AlgentropyError(Exception):
    """Base class for all toolkit errors."""


# -- exact arithmetic ------------------------------------------------------

class ZeroDenominator(AlgentropyError):
    """A rational function was built with an identically-zero denominator."""


class ExactDivisionError(AlgentropyError):
    """An exact polynomial division left a nonzero remainder."""


class PrecisionExhausted(AlgentropyError):
    """A truncated series result has an empty guaranteed window."""


class InvertZero(AlgentropyError):
    """Inversion of the exact zero series was requested."""


# -- mapping definitions ---------------------------------------------------

class MappingSyntaxError(AlgentropyError):
    """Malformed mapping expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnboundSymbol(AlgentropyError):
    """Expression uses a name that is neither a parameter nor a stream."""


class DivisionByZeroPolynomial(AlgentropyError):
    """Expression divides by a polynomial that is identically zero."""


class UnknownMapping(AlgentropyError):
    """Requested catalog entry does not exist."""


class DenominatorVanishesIdentically(AlgentropyError):
    """A symbolic step produced the constant-infinity rational function."""


# -- degree growth ---------------------------------------------------------

class NonGenericSeed(AlgentropyError):
    """Two generic seeds disagreed on the degree sequence."""


class DegreeCapExceeded(AlgentropyError):
    """Iteration aborted: intermediate degree above the cap.

    Carries the partial degree list computed so far.
    """

    def __init__(self, message: str, partial: list[int]):
        super().__init__(message)
        self.partial = partial


class TooShort(AlgentropyError):
    """Sequence too short for the requested classification."""


class ComputationAborted(AlgentropyError):
    """A cooperative cancellation callback asked the iteration to stop."""

    def __init__(self, message: str, partial: list[int]):
        super().__init__(message)
        self.partial = partial


# -- singularity analysis --------------------------------------------------

class NonRationalSingularity(AlgentropyError):
    """A vanishing-minor polynomial has a real root outside Q."""


class NotConfined(AlgentropyError):
    """Singularity trace hit max_steps without recovering initial data.

    Carries the (unconfined) trace report for inspection.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


# -- express engine --------------------------------------------------------

class ExclusiveValueAbsent(AlgentropyError):
    """A value declared pattern-exclusive occurs in no pattern."""


class InvalidSymmetry(AlgentropyError):
    """Symmetry class merges patterns with incompatible entry layouts."""


class Underdetermined(AlgentropyError):
    """Fewer independent count equations than unknowns."""


class Inconsistent(AlgentropyError):
    """Every square subsystem has an identically-zero determinant."""


# -- height probe ----------------------------------------------------------

class SingularOrbit(AlgentropyError):
    """All retry seeds ran into an exact singularity."""


class HeightOverflow(AlgentropyError):
    """Orbit heights exceeded the configured bit budget."""
