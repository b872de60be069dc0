"""Exception hierarchy for the solver."""


class SphereFlameError(Exception):
    """Base class for every error raised by the package."""


class DomainError(SphereFlameError, ValueError):
    """An argument lies outside the domain of the operation."""


class NonphysicalStateError(SphereFlameError):
    """A computed state has non-positive density or pressure."""


class SingularityError(SphereFlameError):
    """The similarity ODE denominator vanishes (sonic point)."""


class IntegrationError(SphereFlameError):
    """The intermediate-zone march hit the sonic guard before the reactive shock.

    ``x`` and ``sonic_margin`` hold the last accepted node and its value of
    u + c - x.
    """

    def __init__(self, message, x=None, sonic_margin=None):
        super().__init__(message)
        self.x = x
        self.sonic_margin = sonic_margin


class NoRootError(SphereFlameError):
    """The reactive-shock residual never changed sign on the grid."""


class ConvergenceError(SphereFlameError):
    """The secant iteration on the Mach number failed.

    The partial iteration history is attached as ``trace``.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
