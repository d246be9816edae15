"""Scattering scenario and the wave-vector quantities derived from it."""

import cmath
import enum
import math
from dataclasses import dataclass, replace

from .errors import InvalidScenarioError, ResonantEdgeError
from .units import HBAR, UNITS, kappa

# E = V0 is rejected within this absolute tolerance (meV).
RESONANT_EDGE_TOL = 1e-12


class Regime(enum.Enum):
    PROPAGATING = "propagating"
    EVANESCENT = "evanescent"
    TOTAL_INTERNAL = "total_internal"


@dataclass(frozen=True)
class PhysicalScenario:
    """Full definition of one scattering experiment.

    Energies in meV, width in nm, angle in radians, mass in free-electron
    masses, Fermi velocity in m/s.
    """

    energy_E: float
    barrier_V0: float
    width_d: float
    angle_phi: float = 0.0
    mass_m: float = 1.0
    fermi_velocity_v: float = 1.0e6

    def __post_init__(self):
        for name in ("energy_E", "barrier_V0", "width_d", "angle_phi", "mass_m", "fermi_velocity_v"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidScenarioError(f"{name} must be finite")
        if self.energy_E <= 0:
            raise InvalidScenarioError(f"energy_E must be > 0, got {self.energy_E}")
        if self.width_d <= 0:
            raise InvalidScenarioError(f"width_d must be > 0, got {self.width_d}")
        if self.mass_m <= 0:
            raise InvalidScenarioError(f"mass_m must be > 0, got {self.mass_m}")
        if self.fermi_velocity_v <= 0:
            raise InvalidScenarioError(f"fermi_velocity_v must be > 0, got {self.fermi_velocity_v}")
        if not abs(self.angle_phi) < math.pi / 2:
            raise InvalidScenarioError(f"|angle_phi| must be < pi/2, got {self.angle_phi}")

    @property
    def kappa(self):
        """m v / hbar in nm^-1."""
        return kappa(self.mass_m, self.fermi_velocity_v)

    def with_(self, **changes):
        return replace(self, **changes)


@dataclass(frozen=True)
class Kinematics:
    k: float
    kx: float
    ky: float
    q: complex
    qx: complex
    theta: complex
    regime: Regime


def _branch_qx(qx2):
    qx = cmath.sqrt(qx2)
    if qx.imag < 0 or (qx.imag == 0 and qx.real < 0):
        qx = -qx
    return qx


def derive_kinematics(scenario):
    """Wave numbers in the three regions.

    ``qx`` takes the branch with Im(qx) >= 0 (and Re(qx) >= 0 when real), so the
    ``a`` interior term is the one that decays into the barrier.
    """
    E, V0, phi = scenario.energy_E, scenario.barrier_V0, scenario.angle_phi
    if E <= 0:
        raise InvalidScenarioError("incident energy must be positive")
    if abs(E - V0) <= RESONANT_EDGE_TOL:
        raise ResonantEdgeError(f"E = V0 = {E} meV: interior wave number vanishes")

    m = UNITS.mass_to_internal(scenario.mass_m)
    k = math.sqrt(2.0 * m * E) / HBAR
    kx = k * math.cos(phi)
    ky = k * math.sin(phi)
    q = k * cmath.sqrt((E - V0) / E)
    qx = _branch_qx(q * q - ky * ky)
    theta = cmath.asin(ky / q)

    if E < V0:
        regime = Regime.EVANESCENT
    elif abs(ky) > abs(q):
        regime = Regime.TOTAL_INTERNAL
    else:
        regime = Regime.PROPAGATING
    return Kinematics(k=k, kx=kx, ky=ky, q=q, qx=qx, theta=theta, regime=regime)


def critical_angle(scenario):
    """Angle beyond which the interior wave is evanescent although E > V0.

    Returns None without a barrier (V0 <= 0).
    """
    E, V0 = scenario.energy_E, scenario.barrier_V0
    if V0 <= 0:
        return None
    if V0 >= E:
        raise InvalidScenarioError("critical angle needs E > V0")
    return math.asin(math.sqrt((E - V0) / E))
