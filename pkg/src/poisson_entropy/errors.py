"""Exception hierarchy shared by every module."""


class PoissonEntropyError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PoissonEntropyError, ValueError):
    """A parameter lies outside the domain of the requested quantity."""


class DegenerateOrder(DomainError):
    """An entropy order sits on a singular value (alpha == 1, alpha == beta, ...)."""


class GammaOutOfRange(DomainError):
    """Mittag-Leffler bound parameter gamma is outside [gamma_*, 1 - 1e-6]."""


class EmptyGrid(DomainError):
    """A scan or table grid has too few points."""


class TruncationFailure(PoissonEntropyError, ArithmeticError):
    """A series did not meet its tail bound within ``max_terms`` terms."""


class BoundViolation(PoissonEntropyError, AssertionError):
    """A computed bound failed to enclose the entropy value."""
