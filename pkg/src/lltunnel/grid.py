"""Randomised scenario grid shared by the validation report and the tests."""

import math

import numpy as np

from .kinematics import PhysicalScenario

E_RANGE = (10.0, 200.0)
D_RANGE = (1.0, 30.0)
PHI_MAX = 1.2
# excluded neighbourhoods of the degenerate edges
EDGE_ENERGY_GAP = 0.1
EDGE_ANGLE_GAP = 0.01


def near_edge(E, V0, phi):
    if abs(E - V0) < EDGE_ENERGY_GAP:
        return True
    if E > V0 > 0:
        phic = math.asin(math.sqrt((E - V0) / E))
        if abs(abs(phi) - phic) < EDGE_ANGLE_GAP:
            return True
    return False


def random_grid(points=200, seed=42, mass_m=1.0, fermi_velocity=1e6):
    """``points`` scenarios with E in [10, 200] meV, V0 in [0, 2E], d in [1, 30] nm
    and |phi| < 1.2, drawn reproducibly and rejecting the degenerate edges."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < points:
        E = rng.uniform(*E_RANGE)
        V0 = rng.uniform(0.0, 2.0 * E)
        d = rng.uniform(*D_RANGE)
        phi = rng.uniform(-PHI_MAX, PHI_MAX)
        if near_edge(E, V0, phi):
            continue
        out.append(PhysicalScenario(E, V0, d, phi, mass_m, fermi_velocity))
    return out
