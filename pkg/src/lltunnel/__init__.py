"""Spin-resolved tunneling of non-relativistic electrons through a 2D barrier,
described by the Levy-Leblond equation."""

__version__ = "0.1.0"

from .clifford import MatrixRep, RepTag, build_rep, hamiltonian_spectrum, verify_algebra
from .closed_form import ClosedFormInput, coeffs_rep_a, coeffs_rep_b, tr_2x2
from .engines import Engine, compute
from .kinematics import Kinematics, PhysicalScenario, Regime, critical_angle, derive_kinematics
from .matching import (
    Model,
    ScatterAmplitudes,
    ScatterCoefficients,
    assemble_system,
    coefficients_from_amplitudes,
    scatter,
    solve_amplitudes,
)
from .schrodinger import schrodinger_transfer_matrix
from .spinors import Spin, Spinor, nullspace_spinors, spinor_2x2, spinor_4x4_down, spinor_4x4_up

__all__ = [
    "ClosedFormInput",
    "Engine",
    "Kinematics",
    "MatrixRep",
    "Model",
    "PhysicalScenario",
    "Regime",
    "RepTag",
    "ScatterAmplitudes",
    "ScatterCoefficients",
    "Spin",
    "Spinor",
    "assemble_system",
    "build_rep",
    "coefficients_from_amplitudes",
    "coeffs_rep_a",
    "coeffs_rep_b",
    "compute",
    "critical_angle",
    "derive_kinematics",
    "hamiltonian_spectrum",
    "nullspace_spinors",
    "scatter",
    "schrodinger_transfer_matrix",
    "solve_amplitudes",
    "spinor_2x2",
    "spinor_4x4_down",
    "spinor_4x4_up",
    "tr_2x2",
    "verify_algebra",
]
