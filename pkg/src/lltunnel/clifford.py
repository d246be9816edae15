"""Matrix representations of the Levy-Leblond equation and their algebra.

Three representations are supported:

``TWO_BY_TWO``
    mu_1 = I, mu_2 = i sigma_3, eta = (sigma_1 - i sigma_2)/sqrt(2).
``FOUR_REP_A``
    Dirac-basis gamma_1, gamma_2 with eta = (gamma_0 + i gamma_5)/sqrt(2).
``FOUR_REP_B``
    eta = -i (gamma_2 + gamma_5)/sqrt(2). gamma_2 does not anticommute with
    this eta, so the two in-plane matrices are i gamma_0 (along x) and gamma_3
    (along y), the Clifford pair orthogonal to both gamma_2 and gamma_5.

Each representation also carries ``current_weight`` W: the matrix for which
W eta, W eta^dagger and W Gamma_i are all Hermitian. The conserved probability
current along x is then psi^dagger W Gamma_1 psi.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import SingularEtaPrimeError, VerificationFailed
from .units import HBAR, UNITS

SQRT2 = np.sqrt(2.0)

SIGMA_0 = np.eye(2, dtype=complex)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)


def _block(a, b, c, d):
    return np.block([[a, b], [c, d]])


# Dirac basis
GAMMA_0 = _block(SIGMA_0, _Z2, _Z2, -SIGMA_0)
GAMMA_1 = _block(_Z2, SIGMA_1, -SIGMA_1, _Z2)
GAMMA_2 = _block(_Z2, SIGMA_2, -SIGMA_2, _Z2)
GAMMA_3 = _block(_Z2, SIGMA_3, -SIGMA_3, _Z2)
GAMMA_5 = _block(_Z2, SIGMA_0, SIGMA_0, _Z2)

# tolerance for every algebraic identity check
ALGEBRA_TOL = 1e-12
# eta + eps eta^dagger is treated as singular above this condition number
ETA_PRIME_COND_MAX = 1e14


class RepTag(enum.Enum):
    TWO_BY_TWO = "2x2"
    FOUR_REP_A = "a"
    FOUR_REP_B = "b"

    @property
    def dim(self):
        return 2 if self is RepTag.TWO_BY_TWO else 4


@dataclass(frozen=True, eq=False)
class MatrixRep:
    tag: RepTag
    spatial_matrices: tuple
    eta: np.ndarray
    eta_dagger: np.ndarray
    current_weight: np.ndarray = field(repr=False)

    @property
    def dim(self):
        return self.eta.shape[0]

    def gamma_dot_k(self, kx, ky):
        g1, g2 = self.spatial_matrices
        return g1 * kx + g2 * ky

    def current_operator(self):
        """S such that the x-flux of a plane wave is psi^dagger S psi."""
        return self.current_weight @ self.spatial_matrices[0]

    def with_eta(self, eta):
        """Copy with a different eta (used to exercise the verifier)."""
        eta = np.asarray(eta, dtype=complex)
        return MatrixRep(self.tag, self.spatial_matrices, eta, eta.conj().T, self.current_weight)


def build_rep(tag):
    tag = RepTag(tag)
    if tag is RepTag.TWO_BY_TWO:
        spatial = (SIGMA_0.copy(), 1j * SIGMA_3)
        eta = (SIGMA_1 - 1j * SIGMA_2) / SQRT2
        weight = SIGMA_1.copy()
    elif tag is RepTag.FOUR_REP_A:
        spatial = (GAMMA_1.copy(), GAMMA_2.copy())
        eta = (GAMMA_0 + 1j * GAMMA_5) / SQRT2
        weight = GAMMA_0.copy()
    else:
        spatial = (1j * GAMMA_0, GAMMA_3.copy())
        eta = -1j * (GAMMA_2 + GAMMA_5) / SQRT2
        weight = -1j * GAMMA_2
    for a in (*spatial, eta, weight):
        a.setflags(write=False)
    eta_dagger = eta.conj().T
    eta_dagger.setflags(write=False)
    return MatrixRep(tag=tag, spatial_matrices=spatial, eta=eta, eta_dagger=eta_dagger, current_weight=weight)


def lle_operator(rep, kx, ky, energy, mass_me, fermi_velocity):
    """hbar v Gamma.k - (eta E + eta^dagger m v^2), in meV.

    Plane-wave eigenstates at energy ``energy`` (meV, measured from the local
    potential) are its null vectors. ``kx`` may be complex.
    """
    v = UNITS.velocity_to_internal(fermi_velocity)
    m = UNITS.mass_to_internal(mass_me)
    return HBAR * v * rep.gamma_dot_k(kx, ky) - (rep.eta * energy + rep.eta_dagger * (m * v * v))


@dataclass
class AlgebraReport:
    tag: RepTag
    residuals: dict
    tol: float = ALGEBRA_TOL

    @property
    def failures(self):
        return [name for name, r in self.residuals.items() if not r < self.tol]

    @property
    def passed(self):
        return not self.failures

    @property
    def worst(self):
        return max(self.residuals.values())


def _maxabs(a):
    return float(np.max(np.abs(a)))


def _natural_lle(rep, kx, ky, energy):
    # hbar = m = v = 1
    return rep.gamma_dot_k(kx, ky) - (rep.eta * energy + rep.eta_dagger)


def verify_algebra(rep, draws=100, seed=0, kmax=10.0, raise_on_failure=True):
    """Check the identities every representation must satisfy.

    The dispersion check works in natural units (hbar = m = v = 1) at random,
    possibly complex, momenta and off-shell energies. For 4x4 reps the LLE
    operator must square to 2(E - k^2/2) I; for the 2x2 rep its determinant
    must equal k^2 - 2E. In both cases the on-shell null space must have
    dimension dim/2.
    """
    n = rep.dim
    eye = np.eye(n)
    eta, etad = rep.eta, rep.eta_dagger
    res = {
        "eta nilpotency": _maxabs(eta @ eta),
        "eta_dagger nilpotency": _maxabs(etad @ etad),
        "eta_dagger is adjoint": _maxabs(etad - eta.conj().T),
        "eta anticommutator {eta, eta_dagger} = 2": _maxabs(eta @ etad + etad @ eta - 2 * eye),
    }
    w = rep.current_weight
    herm = 0.0
    for x in (*rep.spatial_matrices, eta, etad):
        y = w @ x
        herm = max(herm, _maxabs(y - y.conj().T))
    res["current weight hermiticity"] = herm

    if n == 4:
        g = rep.spatial_matrices
        cl = 0.0
        ac = 0.0
        for i in range(2):
            for j in range(2):
                cl = max(cl, _maxabs(g[i] @ g[j] + g[j] @ g[i] + 2 * (i == j) * eye))
            ac = max(ac, _maxabs(g[i] @ eta + eta @ g[i]), _maxabs(g[i] @ etad + etad @ g[i]))
        res["spatial Clifford relations"] = cl
        res["spatial matrices anticommute with eta"] = ac

    rng = np.random.default_rng(seed)
    disp = 0.0
    null = 0.0
    for _ in range(draws):
        kmag = rng.uniform(0.0, kmax)
        a = rng.uniform(0, 2 * np.pi)
        kx = kmag * np.cos(a) + 1j * rng.uniform(0, kmax) * (rng.random() < 0.5)
        ky = kmag * np.sin(a)
        k2 = kx * kx + ky * ky
        energy = rng.uniform(-kmax, kmax) ** 2
        lle = _natural_lle(rep, kx, ky, energy)
        scale = 1.0 + abs(k2) + abs(energy)
        if n == 4:
            r = _maxabs(lle @ lle - 2 * (energy - k2 / 2) * eye) / scale
        else:
            r = abs(np.linalg.det(lle) - (k2 - 2 * energy)) / scale
        disp = max(disp, r)
        if abs(k2) > 1e-6:
            on_shell = _natural_lle(rep, kx, ky, k2 / 2)
            sv = np.linalg.svd(on_shell, compute_uv=False)
            null = max(null, float(sv[n // 2] / sv[0]))
    res["LLE squares to Schrodinger dispersion"] = disp
    res["on-shell null space has dim/2"] = null

    report = AlgebraReport(rep.tag, res)
    if raise_on_failure and not report.passed:
        name = report.failures[0]
        raise VerificationFailed(name, res[name])
    return report


def hamiltonian_spectrum(rep, kx, ky, mass_me, fermi_velocity, epsilon):
    """Eigenvalues (meV) of the eps-regularised Hamiltonian, sorted by modulus.

    H = (eta + eps eta^dagger)^-1 (hbar v Gamma.k - m v^2 eta^dagger). As eps -> 0
    half of the spectrum approaches hbar^2 k^2 / 2m and the other half diverges
    like -m v^2 / eps.
    """
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    if rep.dim != 4:
        raise ValueError("the regularised Hamiltonian is defined for 4x4 representations")
    eta_prime = rep.eta + epsilon * rep.eta_dagger
    cond = np.linalg.cond(eta_prime)
    if not cond < ETA_PRIME_COND_MAX:
        raise SingularEtaPrimeError(f"cond(eta + eps eta^dagger) = {cond:.3e} at eps = {epsilon}")
    v = UNITS.velocity_to_internal(fermi_velocity)
    m = UNITS.mass_to_internal(mass_me)
    rhs = HBAR * v * rep.gamma_dot_k(kx, ky) - m * v * v * rep.eta_dagger
    ev = np.linalg.eigvals(np.linalg.solve(eta_prime, rhs))
    return ev[np.argsort(np.abs(ev), kind="stable")]
