"""Error taxonomy shared by all fracspde modules.

Every failure mode raised by the library derives from FracspdeError so
callers (and the CLI) can map categories to exit codes without matching
on message text.
"""


class FracspdeError(Exception):
    """Base class for all library errors."""


class ConfigError(FracspdeError):
    """Invalid or inconsistent configuration input."""


class NonPositiveArgument(FracspdeError):
    """Argument outside the positive domain of a special function."""


class ConvergenceFailure(FracspdeError):
    """No evaluation branch reached the requested tolerance."""


class DomainOverflow(FracspdeError):
    """Argument beyond the supported evaluation domain."""


class QuadratureFailure(FracspdeError):
    """A quadrature could not certify its error target."""


class DegenerateInterval(FracspdeError):
    """Interval endpoints violate the required strict ordering."""


class CholeskyFailure(FracspdeError):
    """Covariance factorization failed even after the ridge retry."""


class NonPositiveTime(FracspdeError):
    """A strictly positive time argument was zero or negative."""


class AliasingRisk(FracspdeError):
    """Collocation grid too coarse to dealias a quadratic product."""


class UnknownForcing(FracspdeError):
    """Forcing descriptor not recognized."""


class RateConditionViolation(FracspdeError):
    """An exponent hypothesis of the underlying theory fails."""


class InsufficientData(FracspdeError):
    """Not enough points, or too little span, for a rate fit."""


class NoConvergence(FracspdeError):
    """Fixed-point iteration exhausted its sweep budget."""


class BallEscape(FracspdeError):
    """An iterate left the invariant ball the contraction needs."""


class NoFeasibleHorizon(FracspdeError):
    """No grid horizon satisfies the contraction bound."""
