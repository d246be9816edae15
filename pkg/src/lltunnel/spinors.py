"""Plane-wave eigenstates of the momentum-space Levy-Leblond equation.

Spinors are component-pinned, not unit-normalised: the 2x2 state keeps its
second component at 1, and the 4x4 spin-up / spin-down states keep their upper
block at (1, 0) / (0, 1). Amplitudes in the matching problem are therefore
directly the r, t coefficients multiplying these states.

The 4x4 closed forms are the exact null vectors for ``FOUR_REP_A``. Under the
opposite gamma_5 sign convention the components carrying i(k^2 - 2 kappa^2)
flip sign; transmission and reflection probabilities do not depend on it.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .clifford import RepTag, build_rep, lle_operator
from .errors import ZeroMomentumError
from .units import HBAR, UNITS, dispersion_energy, kappa

SQRT2 = np.sqrt(2.0)


class Spin(enum.Enum):
    UP = "up"
    DOWN = "down"
    NONE = "none"


@dataclass(frozen=True, eq=False)
class Spinor:
    rep_tag: RepTag
    components: np.ndarray
    kx: complex
    ky: float
    spin: Spin

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.components, dtype=dtype)


def _check_momentum(kx, ky):
    if kx == 0 and ky == 0:
        raise ZeroMomentumError("spinor undefined at zero momentum")


def spinor_2x2(kx, ky, mass_me=1.0, fermi_velocity=1e6):
    """[sqrt(2) kappa / (kx + i ky), 1] with kappa = m v / hbar."""
    _check_momentum(kx, ky)
    kap = kappa(mass_me, fermi_velocity)
    comps = np.array([SQRT2 * kap / (kx + 1j * ky), 1.0], dtype=complex)
    return Spinor(RepTag.TWO_BY_TWO, comps, complex(kx), float(ky), Spin.NONE)


def _lower_parts(kx, ky, kap):
    k2 = kx * kx + ky * ky
    den = 2 * kap * kap + k2
    diag = 1j * (k2 - 2 * kap * kap) / den
    return diag, 2 * SQRT2 * kap * (kx + 1j * ky) / den, 2 * SQRT2 * kap * (kx - 1j * ky) / den


def spinor_4x4_up(kx, ky, mass_me=1.0, fermi_velocity=1e6):
    _check_momentum(kx, ky)
    diag, plus, _ = _lower_parts(kx, ky, kappa(mass_me, fermi_velocity))
    comps = np.array([1.0, 0.0, diag, plus], dtype=complex)
    return Spinor(RepTag.FOUR_REP_A, comps, complex(kx), float(ky), Spin.UP)


def spinor_4x4_down(kx, ky, mass_me=1.0, fermi_velocity=1e6):
    _check_momentum(kx, ky)
    diag, _, minus = _lower_parts(kx, ky, kappa(mass_me, fermi_velocity))
    comps = np.array([0.0, 1.0, minus, diag], dtype=complex)
    return Spinor(RepTag.FOUR_REP_A, comps, complex(kx), float(ky), Spin.DOWN)


def nullspace_spinors(rep, kx, ky, mass_me=1.0, fermi_velocity=1e6):
    """Spin-up and spin-down eigenstates of a 4x4 rep, found numerically.

    The two-dimensional on-shell null space is computed by SVD and re-expressed
    in the basis whose upper block is (1, 0) / (0, 1), the same labelling as the
    closed-form ``FOUR_REP_A`` states.
    """
    _check_momentum(kx, ky)
    if rep.dim != 4:
        raise ValueError("nullspace_spinors needs a 4x4 representation")
    energy = dispersion_energy(kx * kx + ky * ky, mass_me)
    op = lle_operator(rep, kx, ky, energy, mass_me, fermi_velocity)
    _, _, vh = np.linalg.svd(op)
    null = vh[2:].conj().T
    pinned = null @ np.linalg.inv(null[:2, :])
    up = Spinor(rep.tag, pinned[:, 0].copy(), complex(kx), float(ky), Spin.UP)
    down = Spinor(rep.tag, pinned[:, 1].copy(), complex(kx), float(ky), Spin.DOWN)
    return up, down


def spinor_pair(rep, kx, ky, mass_me=1.0, fermi_velocity=1e6):
    """Channel states at one momentum: (state,) for 2x2, (up, down) for 4x4."""
    if rep.tag is RepTag.TWO_BY_TWO:
        return (spinor_2x2(kx, ky, mass_me, fermi_velocity),)
    if rep.tag is RepTag.FOUR_REP_A:
        return (spinor_4x4_up(kx, ky, mass_me, fermi_velocity), spinor_4x4_down(kx, ky, mass_me, fermi_velocity))
    return nullspace_spinors(rep, kx, ky, mass_me, fermi_velocity)


def lle_residual(spinor, mass_me=1.0, fermi_velocity=1e6, rep=None):
    """Relative residual ||L s|| / (scale ||s||) of the eigen-equation.

    ``scale`` is the largest of m v^2, hbar v |k| and |E|.

    The energy is the on-shell value hbar^2 (kx^2 + ky^2) / 2m, with kx complex
    if the spinor was built at complex momentum.
    """
    rep = rep if rep is not None else build_rep(spinor.rep_tag)
    kx, ky = spinor.kx, spinor.ky
    energy = dispersion_energy(kx * kx + ky * ky, mass_me)
    op = lle_operator(rep, kx, ky, energy, mass_me, fermi_velocity)
    s = np.asarray(spinor.components)
    v = UNITS.velocity_to_internal(fermi_velocity)
    m = UNITS.mass_to_internal(mass_me)
    scale = max(m * v * v, HBAR * v * abs(np.sqrt(kx * kx + ky * ky)), abs(energy))
    return float(np.linalg.norm(op @ s) / (scale * np.linalg.norm(s)))
