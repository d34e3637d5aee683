import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from annular_cp import closed_forms as cf
from annular_cp.kernels import disc_energy_quadrature, ring_energy_quadrature
from annular_cp.machine import energy_scale
from annular_cp.tensors import AnnularPolarizability, AtomPolarizability

ER = cf.ring_scale()
EP = cf.plate_scale()
thetas = st.floats(-math.pi, math.pi, allow_nan=False)
heights = st.floats(0.0, 6.0)


def test_printed_special_values():
    assert cf.ring_energy_component(1, "phi", 1.0, 0.7, 0.0) == 0.0
    assert cf.ring_energy_component(1, "rho", 1.0, 0.0, math.pi / 2) == pytest.approx(-40 * ER, rel=1e-15)
    assert cf.ring_energy_component(1, "z", 1.0, 0.0, 0.0) == pytest.approx(-52 * ER, rel=1e-15)
    assert cf.ring_energy_component(1, "z", 1.0, 0.0, 0.0) == pytest.approx(-energy_scale(), rel=1e-15)
    assert cf.plate_energy_closed("iso", 1.0, 0.0, 0.0) == 0.0


@given(heights, thetas)
@settings(max_examples=60)
def test_e2_rotated_matches_e1(h, theta):
    for comp in cf.RING_COMPONENTS:
        e1 = cf.ring_energy_component(1, comp, 1.0, h, theta)
        e2 = cf.ring_energy_component(2, comp, 1.0, h, theta - math.pi / 2, math.pi / 2)
        assert e2 == pytest.approx(e1, rel=1e-12, abs=1e-15 * ER)


@given(heights, thetas, thetas)
@settings(max_examples=60)
def test_e3_is_e2_with_beta_shifted(h, theta, beta):
    for comp in cf.RING_COMPONENTS:
        e3 = cf.ring_energy_component(3, comp, 1.0, h, theta, beta)
        e2 = cf.ring_energy_component(2, comp, 1.0, h, theta, beta + math.pi / 2)
        assert e3 == pytest.approx(e2, rel=1e-12, abs=1e-15 * ER)


@given(heights, thetas)
@settings(max_examples=60)
def test_e1_depends_on_cos_2theta_only(h, theta):
    for mode in ("tangential", "radial", "axial", "iso"):
        e = cf.ring_energy_e1(mode, 1.0, h, theta)
        assert cf.ring_energy_e1(mode, 1.0, h, -theta) == pytest.approx(e, rel=1e-13, abs=1e-16)
        assert cf.ring_energy_e1(mode, 1.0, h, math.pi - theta) == pytest.approx(e, rel=1e-13, abs=1e-16)
    for mode in cf.DISC_MODES:
        e = cf.plate_energy_closed(mode, 1.0, h, theta)
        assert cf.plate_energy_closed(mode, 1.0, h, math.pi - theta) == pytest.approx(e, rel=1e-13, abs=1e-16)


@given(heights, thetas, thetas)
@settings(max_examples=60)
def test_isotropic_atom_sum_rule(h, theta, beta):
    for comp in cf.RING_COMPONENTS:
        total = sum(cf.ring_energy_component(i, comp, 1.0, h, theta, beta) for i in (1, 2, 3))
        ref = sum(cf.ring_energy_component(i, comp, 1.0, h, 0.0, 0.0) for i in (1, 2, 3))
        assert total == pytest.approx(ref, rel=1e-12)


def test_iso_ring_is_tangential_plus_radial():
    for h in (0.0, 0.4, 2.0):
        for theta in (0.0, 0.6, 1.4):
            s = cf.ring_energy_e1("tangential", 1.0, h, theta) + cf.ring_energy_e1("radial", 1.0, h, theta)
            assert cf.ring_energy_e1("iso", 1.0, h, theta) == pytest.approx(s, rel=1e-14)


def test_ring_energy_closed_superposes():
    atom = AtomPolarizability(1.0, 0.4, 0.25, theta=0.8, beta=0.6)
    pol = AnnularPolarizability(0.3, 1.1, -0.4)
    for h in (0.0, 0.7, 3.0):
        assert cf.ring_energy_closed(atom, pol, 1.0, h) == pytest.approx(
            ring_energy_quadrature(atom, pol, 1.0, h), rel=1e-12)


def test_scaling_with_radius():
    # E(a, h) = E(1, h / a) / a^6 for a ring and / a^5 for a plate
    assert cf.ring_energy_e1("radial", 2.0, 1.0, 0.3) == pytest.approx(cf.ring_energy_e1("radial", 1.0, 0.5, 0.3) / 64)
    assert cf.plate_energy_closed("axial", 2.0, 1.0, 0.3) == pytest.approx(cf.plate_energy_closed("axial", 1.0, 0.5, 0.3) / 32)


def test_ring_force_closed():
    assert cf.ring_force_closed("rho", 1.0, 0.0, 0.3) == 0.0
    # small h at theta = 0: bracket (28 - 532) < 0, so the force is repulsive
    assert cf.ring_force_closed("rho", 1.0, 1e-3, 0.0) > 0
    assert cf.ring_force_closed("z", 1.0, math.sqrt(2 / 9), math.pi / 2) == pytest.approx(0.0, abs=1e-16)
    with pytest.raises(ValueError, match="force_numeric"):
        cf.ring_force_closed("phi", 1.0, 0.5, 0.3)


@pytest.mark.parametrize("comp", ["rho", "z"])
def test_force_numeric_matches_printed_force(comp):
    rng = np.random.default_rng(3)
    for h, theta in zip(rng.uniform(0.05, 4, 25), rng.uniform(0, math.pi, 25)):
        num = cf.force_numeric(lambda x: cf.ring_energy_component(1, comp, 1.0, x, theta), h)
        exact = cf.ring_force_closed(comp, 1.0, h, theta)
        scale = abs(cf.ring_force_closed(comp, 1.0, h, 0.0)) + abs(cf.ring_force_closed(comp, 1.0, h, math.pi / 2))
        assert abs(num - exact) <= 1e-7 * scale


def test_torque_vanishes_at_torsion_free_height():
    u = math.sqrt((78 - 8 * math.sqrt(91)) / 13)
    e = cf.ring_energy_e1("radial", 1.0, u, 0.0)
    t = cf.torque_numeric(lambda th: cf.ring_energy_e1("radial", 1.0, u, th), 0.7)
    assert abs(t) <= 1e-8 * abs(e)


def test_richardson_survives_a_coarse_first_step():
    # the first few differences are far from the asymptotic regime here
    f = lambda x: (1 - 2 * x * x) / (1 + x * x) ** 2.5
    exact = 3 * 2.156 * (2 * 2.156 ** 2 - 3) / (1 + 2.156 ** 2) ** 3.5
    d, _ = cf.richardson_derivative(f, 2.156, step=0.5)
    assert d == pytest.approx(exact, rel=1e-10)


def test_richardson_reports_underflow():
    with pytest.raises(cf.DerivativeError):
        cf.richardson_derivative(math.sin, 1e300, step=1e-300)


def test_disc_limits_and_errors():
    with pytest.raises(ValueError):
        cf.disc_energy_closed("radial", 1.0, 1.0, 0.5, 0.0)
    with pytest.raises(ValueError):
        cf.disc_energy_closed("bogus", 1.0, 2.0, 0.5, 0.0)
    for h in (0.0, 0.5, 3.0):
        for th in (0.0, 0.9):
            assert cf.disc_energy_closed("radial", 1.0, 1e6, h, th) == pytest.approx(
                cf.plate_energy_closed("radial", 1.0, h, th), rel=1e-10)
    assert cf.disc_energy_closed("iso", 1.0, math.inf, 0.5, 0.2) == cf.plate_energy_closed("iso", 1.0, 0.5, 0.2)


def test_thin_disc_is_iso_ring():
    for eps in (1e-2, 1e-3):
        for h in (0.2, 1.0):
            disc = cf.disc_energy_closed("iso", 1.0, 1 + eps, h, 0.4, lam=1 / eps)
            ring = cf.ring_energy_e1("iso", 1.0, h, 0.4)
            assert disc == pytest.approx(ring, rel=5 * eps)


def test_axial_disc_at_centre_matches_oracle():
    e = cf.disc_energy_closed("axial", 1.0, 1.5, 0.0, 0.0)
    assert e < 0
    assert e == pytest.approx(disc_energy_quadrature(AtomPolarizability.uniaxial(), AnnularPolarizability.axial(1.0), 1.0, 1.5, 0.0), rel=1e-12)


def test_uniaxial_only():
    cf.uniaxial_only(AtomPolarizability.uniaxial())
    with pytest.raises(ValueError):
        cf.uniaxial_only(AtomPolarizability(1.0, 0.1))


@pytest.mark.parametrize("geometry,mode", [("ring", "radial"), ("ring", "axial"),
                                           ("plate", "radial"), ("plate", "axial")])
def test_limiting_forms(geometry, mode):
    scale = ER if geometry == "ring" else EP
    for theta in (0.0, 0.5, 1.2):
        near = cf.limiting_energy(geometry, mode, 0.0, theta, "near")
        full = (cf.ring_energy_e1(mode, 1.0, 0.0, theta) if geometry == "ring"
                else cf.plate_energy_closed(mode, 1.0, 0.0, theta)) / scale
        assert near == pytest.approx(full, rel=1e-14, abs=1e-13)
    with pytest.raises(ValueError):
        cf.limiting_energy(geometry, mode, 1.0, 0.0, "middle")
