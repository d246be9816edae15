"""Scalar Schrodinger matching for the barrier.

Reduces the problem to one dimension along x with kinetic energy
hbar^2 kx^2 / 2m and matches psi and psi' at both interfaces. It shares no
code with the spinor machinery and serves as a third check on the spin-summed
coefficients.
"""

import numpy as np

from .errors import QxZeroError
from .kinematics import derive_kinematics


def schrodinger_transfer_matrix(scenario):
    """(T, R) for a rectangular barrier of height V0 and width d.

    Unknowns (r, a, b, t) with interior a exp(i qx x) + b exp(-i qx (x - d)),
    so every matrix entry stays bounded when qx is imaginary.
    """
    kin = derive_kinematics(scenario)
    kx, qx, d = kin.kx, complex(kin.qx), scenario.width_d
    if abs(qx) <= 1e-14 * kx:
        raise QxZeroError("qx = 0 at the critical angle")
    eq = np.exp(1j * qx * d)
    ek = np.exp(1j * kx * d)
    # rows: psi(0), psi'(0) / i, psi(d), psi'(d) / i
    A = np.array(
        [
            [1, -1, -eq, 0],
            [-kx, -qx, qx * eq, 0],
            [0, eq, 1, -ek],
            [0, qx * eq, -qx, -kx * ek],
        ],
        dtype=complex,
    )
    rhs = np.array([-1, -kx, 0, 0], dtype=complex)
    r, _, _, t = np.linalg.solve(A, rhs)
    return float(abs(t) ** 2), float(abs(r) ** 2)
