"""
Quadrature oracle for the dilute-dielectric Casimir-Polder energy.

For an atom of static polarizability alpha on the axis of a dilute dielectric
with susceptibility chi, the retarded energy is (hbar = c = 1)

    E = -1/(32 pi^2) int d^3x  r^-7 [13 tr(alpha.chi) - 56 rhat.alpha.chi.rhat
                                      + 63 (rhat.alpha.rhat)(rhat.chi.rhat)]

The routines here evaluate that integral directly for rings, annular discs
and apertured plates, with no knowledge of the closed forms in
`annular_cp.closed_forms`; they are the ground truth those are checked
against.  Forces and torques are obtained by complex-step differentiation of
the integrand, which is exact to rounding and needs no step tuning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import (DEFAULT_SETTINGS, QuadratureSettings, adaptive_gauss_kronrod,
                         periodic_trapezoid)
from .tensors import AnnularPolarizability, AtomPolarizability, annulus_frame_tensor, rhat_on_axis


@dataclass(frozen=True)
class DyadicKernel:
    """Coefficients of tr(a.x), rhat.a.x.rhat and (rhat.a.rhat)(rhat.x.rhat).

    `power` is the inverse power of the distance and `prefactor` the overall
    constant in units of hbar c.
    """

    c_tr: float
    c_cross: float
    c_dd: float
    power: int
    prefactor: float
    name: str = ""


CASIMIR_POLDER = DyadicKernel(13.0, -56.0, 63.0, 7, -1.0 / (32.0 * math.pi ** 2), "casimir-polder")

# Non-retarded triple.  Its prefactor multiplies a frequency integral of the
# polarizabilities that is not carried out here, so energies computed with it
# are only good for comparing shapes, not magnitudes.
LONDON = DyadicKernel(1.0, -6.0, 9.0, 6, -1.0 / (16.0 * math.pi ** 2), "london")

KERNELS = {"casimir-polder": CASIMIR_POLDER, "cp": CASIMIR_POLDER, "london": LONDON}

# complex-step size; the derivative is Im f(x + i eps) / eps
_CSTEP = 1e-30

# rounding floor of a cancelling integrand, relative to the integral of its |terms|
_NOISE = 100.0 * np.finfo(float).eps


def contractions(alpha, chi, rhat):
    """tr(alpha.chi), rhat.alpha.chi.rhat and (rhat.alpha.rhat)(rhat.chi.rhat)."""
    tr = np.einsum("...ij,...ji->...", alpha, chi)
    cross = np.einsum("...i,...ij,...jk,...k->...", rhat, alpha, chi, rhat)
    dd = (np.einsum("...i,...ij,...j->...", rhat, alpha, rhat)
          * np.einsum("...i,...ij,...j->...", rhat, chi, rhat))
    return tr, cross, dd


def kernel_bracket(alpha, chi, rhat, kernel: DyadicKernel = CASIMIR_POLDER):
    """c_tr tr(alpha.chi) + c_cross rhat.alpha.chi.rhat + c_dd (rhat.alpha.rhat)(rhat.chi.rhat).

    Broadcasts over leading axes of `chi` and `rhat`.
    """
    tr, cross, dd = contractions(alpha, chi, rhat)
    return kernel.c_tr * tr + kernel.c_cross * cross + kernel.c_dd * dd


def _density(alpha, pol, rho, h, phi, kernel):
    """bracket / r^p at annulus points (rho, phi); rho has shape (..., 1)."""
    r, rhat = rhat_on_axis(rho, h, phi)
    chi = annulus_frame_tensor(pol, phi)
    return kernel_bracket(alpha, chi, rhat, kernel) / r ** kernel.power


def _perturbed(atom, h, wrt):
    """Atom tensor and height, with a complex step applied to `wrt`."""
    if wrt == "theta":
        return atom.replace(theta=atom.theta + 1j * _CSTEP).tensor(), h
    if wrt == "h":
        return atom.tensor(), h + 1j * _CSTEP
    if wrt is None:
        return atom.tensor(), h
    raise ValueError(f"can only differentiate with respect to 'h' or 'theta', not {wrt!r}")


def _take(values, wrt):
    return values if wrt is None else np.imag(values) / _CSTEP


def _noise_floor(alpha, pol, rho, h, kernel, wrt):
    """
    Roundoff level of the angular integral of the energy density.

    Each contraction can lose up to |alpha| |chi| to cancellation, whatever
    its true size, so the bound is built from the tensor norms.  A height
    derivative brings down at most (p + 4) / r, an angle derivative 2.
    """
    phi = np.arange(16) * (2.0 * math.pi / 16)
    r, _ = rhat_on_axis(rho, np.real(h), phi)
    chi = annulus_frame_tensor(pol, phi)
    coeffs = abs(kernel.c_tr) + abs(kernel.c_cross) + abs(kernel.c_dd)
    bound = (coeffs * np.linalg.norm(np.real(alpha)) * np.linalg.norm(chi, axis=(-2, -1))
             / np.abs(r) ** kernel.power)
    if wrt == "h":
        bound = bound * (kernel.power + 4.0) / np.abs(r)
    elif wrt == "theta":
        bound = 2.0 * bound
    return _NOISE * 2.0 * math.pi * np.max(bound, axis=-1)


def ring_energy_quadrature(atom: AtomPolarizability, ring_pol: AnnularPolarizability, a, h,
                           kernel: DyadicKernel = CASIMIR_POLDER,
                           settings: QuadratureSettings = DEFAULT_SETTINGS, *, wrt=None):
    """
    Energy of an on-axis atom at height `h` above a ring of radius `a`.

    With ``wrt="h"`` or ``wrt="theta"`` the derivative of the energy with
    respect to that variable is returned instead.
    """
    if not a > 0:
        raise ValueError("ring radius must be positive")
    alpha, hh = _perturbed(atom, h, wrt)

    def integrand(phi):
        return _take(a * _density(alpha, ring_pol, np.asarray(a), hh, phi, kernel), wrt)

    floor = a * _noise_floor(alpha, ring_pol, np.asarray(a), hh, kernel, wrt)
    value = periodic_trapezoid(integrand, settings, floor=floor)
    return kernel.prefactor * float(np.real(value))


def ring_force_quadrature(atom, ring_pol, a, h, kernel=CASIMIR_POLDER, settings=DEFAULT_SETTINGS):
    """Axial force -dE/dh on the atom; positive pushes it away from the ring plane."""
    return -ring_energy_quadrature(atom, ring_pol, a, h, kernel, settings, wrt="h")


def ring_torque_quadrature(atom, ring_pol, a, h, kernel=CASIMIR_POLDER, settings=DEFAULT_SETTINGS):
    """Torque -dE/dtheta on the atom."""
    return -ring_energy_quadrature(atom, ring_pol, a, h, kernel, settings, wrt="theta")


def disc_energy_quadrature(atom: AtomPolarizability, disc_pol: AnnularPolarizability, a, b, h,
                           kernel: DyadicKernel = CASIMIR_POLDER,
                           settings: QuadratureSettings = DEFAULT_SETTINGS, *, wrt=None):
    """
    Energy of an on-axis atom above an annular disc a < rho < b.

    ``b = math.inf`` gives the plate with a circular aperture.  The radial
    integral is adaptive Gauss-Kronrod, the angular one a periodic trapezoid
    evaluated at every radial node.  `wrt` behaves as in
    `ring_energy_quadrature`.
    """
    if not a > 0:
        raise ValueError("inner radius must be positive")
    if not b > a:
        raise ValueError("outer radius must exceed inner radius")
    alpha, hh = _perturbed(atom, h, wrt)

    def g(rho):
        rho = np.asarray(rho)[:, None]

        def angular(phi):
            # shape (n_phi, n_rho)
            return _take((rho * _density(alpha, disc_pol, rho, hh, phi, kernel)).T, wrt)
        floor = rho[:, 0] * _noise_floor(alpha, disc_pol, rho, hh, kernel, wrt)
        return periodic_trapezoid(angular, settings, floor=floor)

    floor = _NOISE * norm_scale(atom, disc_pol, a, h, b, kernel) / abs(kernel.prefactor)
    if wrt == "h":
        floor *= (kernel.power + 4.0) / math.hypot(a, h)
    elif wrt == "theta":
        floor *= 2.0
    value = adaptive_gauss_kronrod(g, a, b, settings, floor)
    return kernel.prefactor * float(np.real(value))


def disc_force_quadrature(atom, disc_pol, a, b, h, kernel=CASIMIR_POLDER, settings=DEFAULT_SETTINGS):
    return -disc_energy_quadrature(atom, disc_pol, a, b, h, kernel, settings, wrt="h")


def disc_torque_quadrature(atom, disc_pol, a, b, h, kernel=CASIMIR_POLDER, settings=DEFAULT_SETTINGS):
    return -disc_energy_quadrature(atom, disc_pol, a, b, h, kernel, settings, wrt="theta")


def plate_energy_quadrature(atom, plate_pol, a, h, kernel=CASIMIR_POLDER,
                            settings=DEFAULT_SETTINGS, **kw):
    """Infinite plate with an aperture of radius `a`."""
    return disc_energy_quadrature(atom, plate_pol, a, math.inf, h, kernel, settings, **kw)


def norm_scale(atom, pol, a, h, b=None, kernel: DyadicKernel = CASIMIR_POLDER):
    """
    Size the energy would have if none of its terms cancelled:

        |prefactor| (|c_tr| + |c_cross| + |c_dd|) |alpha| |chi| int dA / r^p

    with Frobenius norms.  It bounds |E|, never vanishes, and is the scale
    against which closed forms and the oracle are compared.  `b=None` is the
    ring, `b=math.inf` the plate.
    """
    coeffs = abs(kernel.c_tr) + abs(kernel.c_cross) + abs(kernel.c_dd)
    chi = annulus_frame_tensor(pol, 0.0)
    amp = abs(kernel.prefactor) * coeffs * np.linalg.norm(atom.tensor()) * np.linalg.norm(chi)
    p = kernel.power
    if b is None:
        return amp * 2.0 * math.pi * a / (a * a + h * h) ** (0.5 * p)
    # int_a^b rho drho / (rho^2 + h^2)^(p/2)
    radial = (a * a + h * h) ** (1.0 - 0.5 * p)
    if not math.isinf(b):
        radial -= (b * b + h * h) ** (1.0 - 0.5 * p)
    return amp * 2.0 * math.pi * radial / (p - 2.0)


def atom_atom_cp(alpha1, alpha2, r):
    """
    Retarded energy of two isotropic atoms, -(23/4pi) alpha1 alpha2 / r^7.

    Evaluated through `kernel_bracket`, with the second atom entering as the
    point susceptibility 4 pi alpha2 delta(x - x2).
    """
    if not r > 0:
        raise ValueError("separation must be positive")
    eye = np.eye(3)
    rhat = np.array([0.0, 0.0, 1.0])
    bracket = kernel_bracket(alpha1 * eye, 4.0 * math.pi * alpha2 * eye, rhat, CASIMIR_POLDER)
    return CASIMIR_POLDER.prefactor * float(bracket) / r ** CASIMIR_POLDER.power


def atom_atom_london(alpha_product_integral, r):
    """
    Non-retarded energy of two isotropic atoms.

    `alpha_product_integral` is the integral of alpha1(i zeta) alpha2(i zeta)
    over zeta from 0 to infinity, supplied by the caller; the result is
    -(3/pi) times that integral over r^6.
    """
    if not r > 0:
        raise ValueError("separation must be positive")
    eye = np.eye(3)
    rhat = np.array([0.0, 0.0, 1.0])
    bracket = kernel_bracket(eye, 4.0 * math.pi * eye, rhat, LONDON)
    # the zeta integral runs over the whole real line: twice the half-line value
    return LONDON.prefactor * float(bracket) * 2.0 * alpha_product_integral / r ** LONDON.power
