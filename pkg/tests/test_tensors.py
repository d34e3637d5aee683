import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from annular_cp.tensors import (AnnularPolarizability, AtomPolarizability, annulus_frame_tensor,
                                atom_tensor, cylindrical_frame, dyad, eigenbasis, rhat_on_axis,
                                spherical_frame)

angles = st.floats(-2 * math.pi, 2 * math.pi, allow_nan=False)


@given(angles, angles, angles)
def test_eigenbasis_is_right_handed_orthonormal(theta, beta, phi_s):
    e1, e2, e3 = eigenbasis(theta, beta, phi_s)
    gram = np.array([[np.dot(u, v) for v in (e1, e2, e3)] for u in (e1, e2, e3)])
    assert np.allclose(gram, np.eye(3), atol=1e-14)
    assert np.allclose(np.cross(e1, e2), e3, atol=1e-14)


def test_eigenbasis_aligned_with_axis():
    e1, e2, e3 = eigenbasis(0.0, 0.0, 0.0)
    assert np.allclose(e1, [0, 0, 1])
    assert abs(e2[2]) < 1e-15 and abs(e3[2]) < 1e-15


@given(angles, angles)
def test_e2_at_quarter_turn_reproduces_e1(theta, phi_s):
    e1 = eigenbasis(theta, 0.0, phi_s)[0]
    e2 = eigenbasis(theta - math.pi / 2, math.pi / 2, phi_s)[1]
    assert np.allclose(e1, e2, atol=1e-14)


@given(st.floats(0, 5), st.floats(0, 5), st.floats(0, 5), angles, angles, angles)
@settings(max_examples=50)
def test_atom_tensor_spectrum_and_symmetry(a1, a2, a3, theta, beta, phi_s):
    atom = AtomPolarizability(a1, a2, a3, theta, beta, phi_s)
    t = atom_tensor(atom)
    assert np.array_equal(t, t.T) or np.allclose(t, t.T, atol=1e-15)
    assert np.allclose(np.sort(np.linalg.eigvalsh(t)), np.sort([a1, a2, a3]), atol=1e-12 * (1 + a1 + a2 + a3))


def test_frames_are_unit():
    for th, ph in [(0.3, 1.1), (2.0, -0.7)]:
        for v in spherical_frame(th, ph):
            assert abs(np.linalg.norm(v) - 1) < 1e-14
    for v in cylindrical_frame(np.linspace(0, 6, 5)):
        assert np.allclose(np.linalg.norm(v, axis=-1), 1.0)


def test_dyad():
    u = np.array([1.0, 2.0, 3.0])
    assert np.allclose(dyad(u), np.outer(u, u))
    assert np.allclose(dyad(u, np.array([0, 1.0, 0])), np.outer(u, [0, 1, 0]))


def test_annular_tensor_components():
    pol = AnnularPolarizability(z=1.0, rho=2.0, phi=3.0)
    for phi in (0.0, 0.8, 2.5):
        chi = annulus_frame_tensor(pol, phi)
        rho_hat, phi_hat, z_hat = cylindrical_frame(phi)
        assert rho_hat @ chi @ rho_hat == pytest.approx(2.0)
        assert phi_hat @ chi @ phi_hat == pytest.approx(3.0)
        assert z_hat @ chi @ z_hat == pytest.approx(1.0)
    assert AnnularPolarizability.in_plane(2.0).components == (0.0, 2.0, 2.0)
    assert AnnularPolarizability().is_zero()


def test_annular_rejects_non_finite():
    with pytest.raises(ValueError):
        AnnularPolarizability(z=math.inf)


def test_rhat_on_axis():
    r, rhat = rhat_on_axis(3.0, 4.0, 0.0)
    assert r == 5.0
    assert np.allclose(rhat, [0.6, 0.0, -0.8])
    with pytest.raises(ValueError):
        rhat_on_axis(-1.0, 1.0)
    with pytest.raises(ValueError):
        rhat_on_axis(0.0, 0.0)


def test_replace_and_constructors():
    atom = AtomPolarizability.uniaxial(2.0, theta=0.5)
    assert atom.alphas == (2.0, 0.0, 0.0)
    assert atom.replace(theta=0.1).theta == 0.1
    iso = AtomPolarizability.isotropic(1.5)
    assert np.allclose(iso.tensor(), 1.5 * np.eye(3))
