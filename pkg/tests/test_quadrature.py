import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from annular_cp.quadrature import (QuadratureError, QuadratureSettings, adaptive_gauss_kronrod,
                                   periodic_trapezoid)


def test_polynomial_exact():
    assert adaptive_gauss_kronrod(lambda x: x ** 5 - 3 * x ** 2, -1.0, 2.0) == pytest.approx(
        (2 ** 6 - 1) / 6 - (8 + 1), rel=1e-15)


def test_smooth_functions():
    assert adaptive_gauss_kronrod(np.exp, 0.0, 3.0) == pytest.approx(math.exp(3) - 1, rel=1e-14)
    val = adaptive_gauss_kronrod(lambda x: 1 / (1 + x * x), 0.0, 50.0)
    assert val == pytest.approx(math.atan(50.0), rel=1e-13)


def test_semi_infinite():
    assert adaptive_gauss_kronrod(lambda x: x ** -2.0, 1.0, math.inf) == pytest.approx(1.0, rel=1e-14)
    val = adaptive_gauss_kronrod(lambda x: 1 / (x * x + 4), 2.0, math.inf)
    assert val == pytest.approx(math.pi / 8, rel=1e-13)
    with pytest.raises(ValueError):
        adaptive_gauss_kronrod(np.exp, 0.0, math.inf)


def test_vector_and_complex_integrands():
    def f(x):
        return np.stack([x, x ** 2 + 1j * x], axis=-1)
    val = adaptive_gauss_kronrod(f, 0.0, 1.0)
    assert np.allclose(val, [0.5, 1 / 3 + 0.5j], rtol=1e-14)


def test_empty_interval():
    assert adaptive_gauss_kronrod(np.exp, 1.0, 1.0) == 0.0


def test_nonconvergence_raises():
    tight = QuadratureSettings(rel_tol=1e-12, max_subdivisions=4)
    with pytest.raises(QuadratureError) as info:
        adaptive_gauss_kronrod(lambda x: np.sin(200 * x) ** 2 / np.sqrt(x + 1e-9), 0.0, 10.0, tight)
    assert info.value.estimate is not None


def test_settings_validation():
    with pytest.raises(ValueError):
        QuadratureSettings(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureSettings(rel_tol=0.5)


# sin^2(k phi) carries harmonic 2k, which must stay below 4 * start = 32
@given(st.integers(0, 15), st.floats(-3, 3), st.floats(-3, 3))
def test_trapezoid_exact_on_trig_polynomials(k, c0, ck):
    def f(phi):
        return c0 + ck * np.cos(k * phi) + np.sin(k * phi) ** 2
    expected = 2 * math.pi * c0 + (2 * math.pi * ck if k == 0 else 0.0) + (math.pi if k else 0.0)
    assert periodic_trapezoid(f) == pytest.approx(expected, abs=1e-12 * (1 + abs(c0) + abs(ck)))


def test_trapezoid_smooth_periodic():
    # 2 pi / sqrt(1 - e^2) for the mean of 1 / (1 + e cos phi)
    e = 0.9
    val = periodic_trapezoid(lambda p: 1 / (1 + e * np.cos(p)))
    assert val == pytest.approx(2 * math.pi / math.sqrt(1 - e * e), rel=1e-13)


def test_trapezoid_zero_integral_and_floor():
    assert abs(periodic_trapezoid(np.sin)) < 1e-15
    noise = np.random.default_rng(0)

    def jitter(phi):
        return 1e-20 * noise.standard_normal(np.shape(phi))
    with pytest.raises(QuadratureError):
        periodic_trapezoid(jitter)
    assert abs(periodic_trapezoid(jitter, floor=1e-18)) < 1e-18
