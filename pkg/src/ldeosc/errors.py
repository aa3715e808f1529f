"""Exception hierarchy for ldeosc."""


class LdeOscError(Exception):
    """Base class for numerical failures raised by this package."""


class DomainError(LdeOscError, ValueError):
    """An argument lies outside the domain of the operation."""


class NoOscillation(LdeOscError):
    """The energy level does not produce a bounded oscillation."""


class NoConvergence(LdeOscError):
    """An iterative refinement did not meet its tolerance."""


class FactorizationFailure(LdeOscError):
    """E - V(x) has extra zeros or a sign change inside the oscillation interval."""


class ConvergenceViolation(LdeOscError):
    """|Delta(x)| >= 1 somewhere on the interval, so the delta series diverges."""


class NoStationaryPoint(LdeOscError):
    """The truncated period has no stationary point in the search bracket."""


class StepUnderflow(LdeOscError):
    """The integrator step size fell below the representable minimum."""
