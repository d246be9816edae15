import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lltunnel.clifford import RepTag, build_rep, lle_operator
from lltunnel.errors import ZeroMomentumError
from lltunnel.spinors import (
    Spin,
    lle_residual,
    nullspace_spinors,
    spinor_2x2,
    spinor_4x4_down,
    spinor_4x4_up,
    spinor_pair,
)
from lltunnel.units import dispersion_energy, kappa

KAPPA = kappa(1.0, 1e6)
comp = st.floats(-8, 8)


def random_momenta(n, seed=0):
    rng = np.random.default_rng(seed)
    kx = rng.uniform(-8, 8, n) + 1j * rng.uniform(0, 8, n) * (rng.random(n) < 0.5)
    ky = rng.uniform(-8, 8, n)
    return list(zip(kx, ky))


def test_2x2_examples():
    assert np.allclose(spinor_2x2(KAPPA, 0.0).components, [np.sqrt(2), 1])
    s = spinor_2x2(1.4491, 0.0, 1.0, 1e6)
    # sqrt(2) * 8.63799 / 1.4491; a hand value rounded from kappa ~ 8.637 gives 8.429
    assert np.isclose(s.components[0].real, 8.429, rtol=2e-4)
    assert np.isclose(s.components[0], np.sqrt(2) * KAPPA / 1.4491, rtol=1e-14)
    assert s.spin is Spin.NONE


def test_4x4_labels():
    u = spinor_4x4_up(1.0, 0.3)
    v = spinor_4x4_down(1.0, 0.3)
    assert u.spin is Spin.UP and v.spin is Spin.DOWN
    assert np.allclose(u.components[:2], [1, 0]) and np.allclose(v.components[:2], [0, 1])


def test_up_fourth_component_real_at_zero_ky():
    kx = 1.7
    c4 = spinor_4x4_up(kx, 0.0).components[3]
    assert np.isclose(c4, 2 * np.sqrt(2) * KAPPA * kx / (2 * KAPPA**2 + kx**2), rtol=1e-14)
    assert c4.imag == 0


def test_mirror_relations():
    kx, ky = 1.3, 0.8
    a, b = spinor_4x4_up(kx, ky).components, spinor_4x4_up(-kx, ky).components
    assert np.allclose(a[:3], b[:3])
    assert np.isclose(a[3].real, -b[3].real) and np.isclose(a[3].imag, b[3].imag)


@pytest.mark.parametrize("ctor", [spinor_2x2, spinor_4x4_up, spinor_4x4_down])
def test_zero_momentum(ctor):
    with pytest.raises(ZeroMomentumError):
        ctor(0.0, 0.0)


def test_residuals_1000_draws():
    rep_a = build_rep("a")
    rep_2 = build_rep("2x2")
    worst = 0.0
    for kx, ky in random_momenta(1000):
        worst = max(
            worst,
            lle_residual(spinor_2x2(kx, ky), rep=rep_2),
            lle_residual(spinor_4x4_up(kx, ky), rep=rep_a),
            lle_residual(spinor_4x4_down(kx, ky), rep=rep_a),
        )
    assert worst < 1e-12


@pytest.mark.parametrize("tag", ["a", "b"])
def test_nullspace_residuals(tag):
    rep = build_rep(tag)
    for kx, ky in random_momenta(200, seed=3):
        for s in nullspace_spinors(rep, kx, ky):
            assert lle_residual(s, rep=rep) < 1e-12


def test_nullspace_matches_closed_form_rep_a():
    rep = build_rep("a")
    for kx, ky in random_momenta(100, seed=4):
        up, down = nullspace_spinors(rep, kx, ky)
        assert np.allclose(up.components, spinor_4x4_up(kx, ky).components, atol=1e-12)
        assert np.allclose(down.components, spinor_4x4_down(kx, ky).components, atol=1e-12)


def test_linear_independence():
    for kx, ky in random_momenta(100, seed=5):
        stack = np.column_stack([spinor_4x4_up(kx, ky).components, spinor_4x4_down(kx, ky).components])
        assert np.linalg.matrix_rank(stack) == 2


def test_spinor_pair_dispatch():
    assert len(spinor_pair(build_rep("2x2"), 1.0, 0.2)) == 1
    a = spinor_pair(build_rep("a"), 1.0, 0.2)
    assert np.allclose(a[0].components, spinor_4x4_up(1.0, 0.2).components)
    b = spinor_pair(build_rep("b"), 1.0, 0.2)
    assert b[0].rep_tag is RepTag.FOUR_REP_B


@settings(max_examples=200)
@given(comp, comp, st.floats(0, 8))
def test_2x2_ratio(kx, ky, im):
    kxc = complex(kx, im)
    if abs(kxc + 1j * ky) < 1e-3:
        return
    s = spinor_2x2(kxc, ky).components
    assert np.isclose(s[0] / s[1], np.sqrt(2) * KAPPA / (kxc + 1j * ky), rtol=1e-13)


@settings(max_examples=200)
@given(comp, comp, st.floats(0, 8))
def test_degenerate_pair_property(kx, ky, im):
    kxc = complex(kx, im)
    if abs(kxc) + abs(ky) < 1e-3 or abs(kxc * kxc + ky * ky + 2 * KAPPA**2) < 1e-6:
        return
    rep = build_rep("a")
    assert lle_residual(spinor_4x4_up(kxc, ky), rep=rep) < 1e-12
    assert lle_residual(spinor_4x4_down(kxc, ky), rep=rep) < 1e-12


def _printed_forms(kx, ky):
    k2 = kx * kx + ky * ky
    den = 2 * KAPPA**2 + k2
    c3 = -1j + 4j * KAPPA**2 / den
    c4 = 2 * np.sqrt(2) * KAPPA * (kx - 1j * ky) / den
    return np.array([1, 0, c3, c4]), np.array([0, 1, c4, c3])


def test_listed_component_signs_need_repair():
    """The listed forms (after the kappa repair) are not null vectors of rep A.

    The implemented states differ only in the sign of the i(k^2 - 2 kappa^2)
    entries and, for spin up, of ky.
    """
    rep = build_rep("a")
    kx, ky = 1.3, 0.7
    op = lle_operator(rep, kx, ky, dispersion_energy(kx * kx + ky * ky, 1.0), 1.0, 1e6)
    u, v = _printed_forms(kx, ky)
    assert np.linalg.norm(op @ u) > 1e2
    assert np.linalg.norm(op @ v) > 1e2
    up, down = spinor_4x4_up(kx, ky).components, spinor_4x4_down(kx, ky).components
    assert np.allclose(up, np.conj(u))
    assert np.allclose(down[[0, 1, 2]], v[[0, 1, 2]])
    assert np.isclose(down[3], -v[3])
    # the printed forms are null vectors once eta is complex conjugated
    conj = rep.with_eta(rep.eta.conj())
    e = dispersion_energy(kx * kx + ky * ky, 1.0)
    assert np.linalg.norm(lle_operator(conj, kx, ky, e, 1.0, 1e6) @ v) < 1e-10
    assert np.linalg.norm(lle_operator(conj, kx, -ky, e, 1.0, 1e6) @ u) < 1e-10
