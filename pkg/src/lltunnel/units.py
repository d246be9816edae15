"""Physical constants and unit conventions.

Internally everything is expressed in meV, nm and ps. In these units wave
numbers of interest are O(1) nm^-1 and the Fermi velocity 1e6 m/s is 1000 nm/ps.
Constants come from CODATA 2018 through ``scipy.constants``.
"""

from dataclasses import dataclass

from scipy import constants as _c

# meV <-> J
MEV_TO_J = _c.e * 1e-3
J_TO_MEV = 1.0 / MEV_TO_J

# nm <-> m, ps <-> s
NM_TO_M = 1e-9
M_TO_NM = 1e9
PS_TO_S = 1e-12
S_TO_PS = 1e12

# m/s -> nm/ps
MPS_TO_NMPS = M_TO_NM / S_TO_PS

# hbar [meV ps]
HBAR = _c.hbar * J_TO_MEV * S_TO_PS

# free electron mass [meV ps^2 / nm^2]
ELECTRON_MASS = _c.m_e * J_TO_MEV * S_TO_PS**2 / M_TO_NM**2


@dataclass(frozen=True)
class UnitSystem:
    """The meV / nm / ps system, with its conversion factors.

    Kept as a value so it can be written into result metadata.
    """

    hbar: float = HBAR
    electron_mass: float = ELECTRON_MASS
    mev_to_j: float = MEV_TO_J
    nm_to_m: float = NM_TO_M
    ps_to_s: float = PS_TO_S

    def mev_to_joule(self, x):
        return x * self.mev_to_j

    def joule_to_mev(self, x):
        return x / self.mev_to_j

    def nm_to_meter(self, x):
        return x * self.nm_to_m

    def meter_to_nm(self, x):
        return x / self.nm_to_m

    def velocity_to_internal(self, v_mps):
        """m/s -> nm/ps."""
        return v_mps * self.ps_to_s / self.nm_to_m

    def velocity_to_si(self, v_nmps):
        return v_nmps * self.nm_to_m / self.ps_to_s

    def mass_to_internal(self, mass_me):
        """Multiples of the free electron mass -> meV ps^2 / nm^2."""
        return mass_me * self.electron_mass

    def as_dict(self):
        return {
            "energy": "meV",
            "length": "nm",
            "time": "ps",
            "hbar_meV_ps": self.hbar,
            "electron_mass_meV_ps2_per_nm2": self.electron_mass,
        }


UNITS = UnitSystem()


def kappa(mass_me, fermi_velocity):
    """Wave-number scale m v / hbar in nm^-1.

    ``mass_me`` is in free-electron masses, ``fermi_velocity`` in m/s.
    """
    return UNITS.mass_to_internal(mass_me) * UNITS.velocity_to_internal(fermi_velocity) / HBAR


def dispersion_energy(k_squared, mass_me):
    """hbar^2 k^2 / 2m in meV for k^2 in nm^-2 (complex k^2 allowed)."""
    return HBAR**2 * k_squared / (2.0 * UNITS.mass_to_internal(mass_me))
