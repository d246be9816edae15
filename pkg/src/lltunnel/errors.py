"""Exception hierarchy for the tunneling package."""


class TunnelError(Exception):
    """Base class for every error raised by this package."""


class InvalidScenarioError(TunnelError, ValueError):
    """A scenario violates a physical precondition (E <= 0, d <= 0, ...)."""


class ResonantEdgeError(TunnelError):
    """E equals V0: the interior wave number vanishes and closed forms are singular.

    Callers sweeping across the edge are expected to perturb the point or skip it.
    """


class ZeroMomentumError(TunnelError, ValueError):
    """A spinor was requested at (kx, ky) = (0, 0)."""


class QxZeroError(TunnelError):
    """The interior normal wave number is zero; closed forms are undefined."""


class VerificationFailed(TunnelError):
    """An algebraic identity of a matrix representation does not hold."""

    def __init__(self, identity, residual):
        self.identity = identity
        self.residual = residual
        super().__init__(f"{identity} violated (residual {residual:.3e})")


class SingularEtaPrimeError(TunnelError):
    """eta + eps * eta^dagger is numerically singular."""


class IllConditionedError(TunnelError):
    """The matching system is too ill-conditioned to trust the solve."""

    def __init__(self, message, scenario=None, cond=None):
        self.scenario = scenario
        self.cond = cond
        super().__init__(message)


class ConsistencyError(TunnelError):
    """An analytically real quantity came out with a non-negligible imaginary part."""
