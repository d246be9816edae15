"""Numerical boundary matching for the barrier, independent of the closed forms.

The wavefunction in each region is a superposition of plane-wave spinors
(see :mod:`lltunnel.spinors`); continuity of every spinor component at x = 0
and x = d gives a square linear system for the reflected, interior and
transmitted amplitudes. The common factor exp(i ky y) is dropped.

The interior left-mover b exp(-i qx x) is referenced at x = d (stored as
b exp(-i qx d)) so that for evanescent interiors no matrix entry grows like
exp(|qx| d). The physical b is recovered after the solve.
"""

import enum
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .clifford import RepTag, build_rep
from .errors import ConsistencyError, IllConditionedError
from .kinematics import derive_kinematics
from .spinors import spinor_pair

COND_MAX = 1e12
RESIDUAL_TOL = 1e-10


class Model(enum.Enum):
    TWO_BY_TWO = "2x2"
    FOUR_BY_FOUR = "4x4"


def resolve_rep(model, rep_tag):
    model = Model(model)
    if model is Model.TWO_BY_TWO:
        if rep_tag not in (None, RepTag.TWO_BY_TWO, "2x2"):
            raise ValueError("the 2x2 model has a single representation")
        return model, RepTag.TWO_BY_TWO
    tag = RepTag(rep_tag if rep_tag is not None else RepTag.FOUR_REP_A)
    if tag is RepTag.TWO_BY_TWO:
        raise ValueError("the 4x4 model needs representation 'a' or 'b'")
    return model, tag


@dataclass(eq=False)
class LinearSystem:
    matrix: np.ndarray
    rhs: np.ndarray
    unknowns: tuple
    model: Model
    rep_tag: RepTag
    scenario: object
    kinematics: object
    incident: np.ndarray
    reflected: np.ndarray  # columns: left-moving channel states in region I
    transmitted: np.ndarray  # columns: right-moving channel states in region III
    interior_phase: complex  # exp(i qx d)
    current: np.ndarray = field(repr=False)

    @property
    def channels(self):
        return self.reflected.shape[1]


@dataclass(frozen=True)
class ScatterAmplitudes:
    model: Model
    rep_tag: RepTag
    r: tuple
    t: tuple
    a: tuple
    b: tuple
    cond: float
    residual: float

    @property
    def r1(self):
        return self.r[0]

    @property
    def r2(self):
        return self.r[1] if len(self.r) > 1 else 0j

    @property
    def t1(self):
        return self.t[0]

    @property
    def t2(self):
        return self.t[1] if len(self.t) > 1 else 0j


@dataclass(frozen=True)
class ScatterCoefficients:
    T1: float
    T2: float
    R1: float
    R2: float
    model: Model = Model.FOUR_BY_FOUR

    @property
    def T(self):
        return self.T1 + self.T2

    @property
    def R(self):
        return self.R1 + self.R2

    # aliases for the spin-summed (2x2) reading
    T_QM = T
    R_QM = R

    @property
    def unitarity_residual(self):
        return self.T1 + self.T2 + self.R1 + self.R2 - 1.0

    def as_tuple(self):
        return (self.T1, self.T2, self.R1, self.R2)


def _columns(states):
    return np.column_stack([np.asarray(s.components) for s in states])


def assemble_system(scenario, model, rep_tag=None):
    """Continuity equations at x = 0 and x = d.

    Unknowns are ordered (r, a, b, t) for 2x2 and
    (r1, r2, a1, a2, b1, b2, t1, t2) for 4x4, where a_j multiply interior
    right-movers and b_j interior left-movers of spin j.
    """
    model, tag = resolve_rep(model, rep_tag)
    rep = build_rep(tag)
    kin = derive_kinematics(scenario)
    m, v = scenario.mass_m, scenario.fermi_velocity_v
    kx, ky, qx, d = kin.kx, kin.ky, kin.qx, scenario.width_d

    right_I = _columns(spinor_pair(rep, kx, ky, m, v))
    left_I = _columns(spinor_pair(rep, -kx, ky, m, v))
    right_II = _columns(spinor_pair(rep, qx, ky, m, v))
    left_II = _columns(spinor_pair(rep, -qx, ky, m, v))

    n = rep.dim
    c = n // 2
    eq = np.exp(1j * qx * d)
    ek = np.exp(1j * kx * d)
    A = np.zeros((2 * n, 2 * n), dtype=complex)
    rhs = np.zeros(2 * n, dtype=complex)
    # x = 0
    A[:n, 0:c] = left_I
    A[:n, c : 2 * c] = -right_II
    A[:n, 2 * c : 3 * c] = -left_II * eq
    rhs[:n] = -right_I[:, 0]
    # x = d
    A[n:, c : 2 * c] = right_II * eq
    A[n:, 2 * c : 3 * c] = left_II
    A[n:, 3 * c :] = -right_I * ek

    if c == 1:
        names = ("r", "a", "b", "t")
    else:
        names = ("r1", "r2", "a1", "a2", "b1", "b2", "t1", "t2")
    return LinearSystem(
        matrix=A,
        rhs=rhs,
        unknowns=names,
        model=model,
        rep_tag=tag,
        scenario=scenario,
        kinematics=kin,
        incident=right_I[:, 0].copy(),
        reflected=left_I,
        transmitted=right_I,
        interior_phase=eq,
        current=rep.current_operator(),
    )


def solve_amplitudes(system):
    """LU with partial pivoting on the matching system."""
    A, rhs = system.matrix, system.rhs
    cond = float(np.linalg.cond(A))
    if not cond <= COND_MAX:
        raise IllConditionedError(
            f"matching system condition number {cond:.3e} exceeds {COND_MAX:.0e}",
            scenario=system.scenario,
            cond=cond,
        )
    x = scipy.linalg.lu_solve(scipy.linalg.lu_factor(A), rhs)
    residual = float(np.linalg.norm(A @ x - rhs) / np.linalg.norm(rhs))
    if not residual < RESIDUAL_TOL:
        raise ConsistencyError(f"matching solve residual {residual:.3e}")
    c = system.channels
    b_ref = x[2 * c : 3 * c]
    return ScatterAmplitudes(
        model=system.model,
        rep_tag=system.rep_tag,
        r=tuple(complex(z) for z in x[:c]),
        t=tuple(complex(z) for z in x[3 * c :]),
        a=tuple(complex(z) for z in x[c : 2 * c]),
        b=tuple(complex(z) for z in b_ref * system.interior_phase),
        cond=cond,
        residual=residual,
    )


def _flux(current, psi):
    return float(np.real(np.conj(psi) @ current @ psi))


def coefficients_from_amplitudes(amps, system):
    """Probabilities from amplitudes.

    The spin-summed T and R are flux ratios of the full transmitted and
    reflected waves, so T + R = 1 follows from current conservation. Each is
    split between spin channels in proportion to |amplitude|^2. For the 2x2
    model and for ``FOUR_REP_A`` the channel states carry equal, mutually
    orthogonal flux and this is exactly T_j = |t_j|^2, R_j = |r_j|^2.
    """
    S = system.current
    j_in = _flux(S, system.incident)
    r = np.array(amps.r)
    t = np.array(amps.t)
    R = -_flux(S, system.reflected @ r) / j_in
    T = _flux(S, system.transmitted @ t) / j_in

    def split(total, amp):
        w = np.abs(amp) ** 2
        s = w.sum()
        return total * w / s if s > 0 else np.zeros_like(w)

    Ts = split(T, t)
    Rs = split(R, r)
    if system.channels == 1:
        return ScatterCoefficients(float(Ts[0]), 0.0, float(Rs[0]), 0.0, Model.TWO_BY_TWO)
    return ScatterCoefficients(float(Ts[0]), float(Ts[1]), float(Rs[0]), float(Rs[1]), Model.FOUR_BY_FOUR)


def scatter(scenario, model, rep_tag=None):
    """Assemble, solve and reduce to coefficients in one call."""
    system = assemble_system(scenario, model, rep_tag)
    amps = solve_amplitudes(system)
    return coefficients_from_amplitudes(amps, system), amps
