"""
Exception hierarchy for the sigfour library.

Every failure raised by the numerical engines derives from `Sig4Error`, so
callers (the certifier, the CLI) can catch the whole family in one place.
Each class also derives from the closest builtin so generic handlers keep
working.
"""

from __future__ import annotations


class Sig4Error(Exception):
    """Base class for all sigfour errors."""


class DomainError(Sig4Error, ValueError):
    """An argument lies outside the domain of the requested function."""


class SlowConvergence(DomainError):
    """A series was asked to sum too close to its logarithmic singularity."""


class InvalidSquareRoot(DomainError):
    """The branch constant A of a quartic IVP does not square to f(a)."""


class SubdivisionLimit(Sig4Error, ArithmeticError):
    """Adaptive quadrature ran out of subdivisions before meeting tolerance."""


class BracketError(Sig4Error, ValueError):
    """A monotone inversion target lies outside the image of the bracket."""


class IterationLimit(Sig4Error, ArithmeticError):
    """An iterative method exhausted its iteration budget."""


class PoleError(Sig4Error, ZeroDivisionError):
    """
    Evaluation landed inside the guard zone of a pole.

    Attributes:
        nearest: The special point (lattice point or half-period congruent)
            closest to the requested argument.
        label: Human-readable name of that point, e.g. "OmegaPrime".
    """

    def __init__(self, message: str, nearest: complex = 0j, label: str = "lattice"):
        super().__init__(message)
        self.nearest = complex(nearest)
        self.label = label
