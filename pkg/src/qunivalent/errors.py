"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class QUnivalentError(Exception):
    """Base class for all errors raised by qunivalent."""


class DomainError(QUnivalentError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class NonConvergence(QUnivalentError, ArithmeticError):
    """A truncated infinite product or series did not settle."""


class DenominatorZero(QUnivalentError, ZeroDivisionError):
    """A denominator Pochhammer symbol vanished inside the truncation range."""


class NegativeCoefficient(QUnivalentError, ValueError):
    def __init__(self, n: int, value: float):
        self.n = n
        self.value = value
        super().__init__(f"coefficient a_{n} = {value!r} is negative")


class BadWeights(QUnivalentError, ValueError):
    """Convex-combination weights are negative or do not sum to one."""


class NonPositiveWeight(QUnivalentError, ValueError):
    def __init__(self, n: int, value: float):
        self.n = n
        self.value = value
        super().__init__(f"operator weight at n={n} is {value!r}; must be finite and > 0")


class TruncationMismatch(QUnivalentError, ValueError):
    """Two objects with incompatible truncation orders were combined."""


class DegenerateDenominator(QUnivalentError, ArithmeticError):
    def __init__(self, message: str, n: int | None = None):
        self.n = n
        super().__init__(message)


class GuardTripped(QUnivalentError, ArithmeticError):
    """A sample point was too close to a zero of a denominator."""


class AllPointsExcluded(QUnivalentError, RuntimeError):
    """Every point of a sampling grid tripped the division guard."""
