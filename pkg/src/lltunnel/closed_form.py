"""Analytic transmission and reflection coefficients for the rectangular barrier.

All expressions share the spin-summed barrier factor

    D = 4 kx^2 qx^2 cos^2(d qx) + (kx^2 + qx^2)^2 sin^2(d qx)

with T = 4 kx^2 qx^2 / D and R = (kx^2 - qx^2)^2 sin^2(d qx) / D. The 4x4
representations then split R into spin-preserving and spin-flip parts with
purely kinematic weights; wherever a mass-velocity product m v appears in a
wave-number slot it is kappa = m v / hbar.

For evanescent interiors qx is purely imaginary and the trigonometric functions
become hyperbolic. Beyond |Im(d qx)| > 20 the cot form (dividing through by
sin^2) is used to keep intermediate values finite; sin cannot vanish there.
"""

import cmath
from dataclasses import dataclass

from .errors import ConsistencyError, QxZeroError
from .kinematics import derive_kinematics

_COT_FORM_THRESHOLD = 20.0


@dataclass(frozen=True)
class ClosedFormInput:
    kx: float
    ky: float
    qx: complex
    d: float
    kappa: float

    def __post_init__(self):
        if not self.kx > 0:
            raise ValueError("kx must be positive")
        if not self.d > 0:
            raise ValueError("d must be positive")
        if not self.kappa > 0:
            raise ValueError("kappa must be positive")

    @classmethod
    def from_scenario(cls, scenario):
        kin = derive_kinematics(scenario)
        return cls(kin.kx, kin.ky, kin.qx, scenario.width_d, scenario.kappa)


def _real(z, what):
    if abs(z.imag) > 1e-10 * abs(z.real) + 1e-14:
        raise ConsistencyError(f"{what} has imaginary part {z.imag:.3e} (real part {z.real:.3e})")
    return z.real


def _barrier_factors(inp):
    """(T_QM, R_QM) as complex numbers, before the real-output check."""
    kx2 = inp.kx * inp.kx
    qx = complex(inp.qx)
    if abs(qx) <= 1e-14 * inp.kx:
        raise QxZeroError("qx = 0: E = V0 or exactly at the critical angle")
    qx2 = qx * qx
    z = inp.d * qx
    four = 4 * kx2 * qx2
    if abs(z.imag) <= _COT_FORM_THRESHOLD:
        s2 = cmath.sin(z) ** 2
        c2 = cmath.cos(z) ** 2
        den = four * c2 + (kx2 + qx2) ** 2 * s2
        return four / den, (kx2 - qx2) ** 2 * s2 / den
    cot2 = 1 / cmath.tan(z) ** 2
    csc2 = 1 / cmath.sin(z) ** 2 if abs(z.imag) < 700 else 0j
    den = four * cot2 + (kx2 + qx2) ** 2
    return four * csc2 / den, (kx2 - qx2) ** 2 / den


def tr_2x2(inp):
    """Spin-summed (T_QM, R_QM)."""
    t, r = _barrier_factors(inp)
    return _real(t, "T_QM"), _real(r, "R_QM")


def coeffs_rep_a(inp):
    """(T1, T2, R1, R2) for eta = (gamma_0 + i gamma_5)/sqrt(2).

    R1 carries 4 kappa^4 + 4 kappa^2 (ky^2 - kx^2) + k^4 and R2 carries
    8 kappa^2 kx^2, both over (2 kappa^2 + k^2)^2; they add up to R_QM.
    """
    t, r = _barrier_factors(inp)
    kx2, ky2, kap2 = inp.kx**2, inp.ky**2, inp.kappa**2
    k2 = kx2 + ky2
    norm = (2 * kap2 + k2) ** 2
    r1 = r * (4 * kap2 * kap2 + 4 * kap2 * (ky2 - kx2) + k2 * k2) / norm
    r2 = r * 8 * kap2 * kx2 / norm
    return _real(t, "T1"), 0.0, _real(r1, "R1"), _real(r2, "R2")


def coeffs_rep_b(inp):
    """(T1, T2, R1, R2) for eta = -i (gamma_2 + gamma_5)/sqrt(2).

    Transmission is unchanged from rep A. Reflection splits with weights
    ky^2 / 2(ky^2 + kappa^2) (spin kept) and (ky^2 + 2 kappa^2) / 2(ky^2 + kappa^2)
    (spin flipped). At sin(d qx) = 0 both vanish.
    """
    t, r = _barrier_factors(inp)
    ky2, kap2 = inp.ky**2, inp.kappa**2
    r1 = r * ky2 / (2 * (ky2 + kap2))
    r2 = r * (ky2 + 2 * kap2) / (2 * (ky2 + kap2))
    return _real(t, "T1"), 0.0, _real(r1, "R1"), _real(r2, "R2")
