"""
Permanent point dipole on the axis of a permanently polarized ring.

The dipole p sits at height h on the axis of a ring of radius a carrying a
dipole moment lambda per unit length.  `coulomb` is the constant
1/(4 pi eps0); with the default of 1 and p = lambda = a = 1 energies come out
in units of p lambda / (4 pi eps0 a^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import DEFAULT_SETTINGS, periodic_trapezoid
from .tensors import cylindrical_frame, spherical_frame

DIRECTIONS = ("tangential", "axial", "radial")


@dataclass(frozen=True)
class PointDipole:
    p: float
    theta: float = 0.0
    phi_s: float = 0.0

    def vector(self):
        return self.p * spherical_frame(self.theta, self.phi_s)[0]


@dataclass(frozen=True)
class PolarizedRing:
    a: float
    direction: str = "axial"
    lam: float = 1.0

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError("ring radius must be positive")
        if self.direction not in DIRECTIONS:
            raise ValueError(f"direction must be one of {DIRECTIONS}")

    def polarization(self, phi):
        rho_hat, phi_hat, z_hat = cylindrical_frame(phi)
        unit = {"radial": rho_hat, "tangential": phi_hat, "axial": z_hat}[self.direction]
        return self.lam * unit


def _profile(a, h):
    u2 = (np.asarray(h) / a) ** 2
    q = 1.0 + u2
    return (1.0 - 2.0 * u2) / (q * q * np.sqrt(q))


def es_energy_axial(p, lam, a, h, theta, coulomb=1.0):
    """(p.lambda / a^2) 2 pi coulomb a^3 (a^2 - 2h^2) / (a^2 + h^2)^(5/2), p.lambda = p lam cos(theta)."""
    return 2.0 * math.pi * coulomb * p * lam * np.cos(theta) / a ** 2 * _profile(a, h)


def es_force_axial(p, lam, a, h, theta, coulomb=1.0):
    """-dE/dh; vanishes at h = 0 and h = a sqrt(3/2)."""
    u = np.asarray(h) / a
    u2 = u * u
    q = 1.0 + u2
    return (2.0 * math.pi * coulomb * p * lam * np.cos(theta) / a ** 3
            * 3.0 * u * (3.0 - 2.0 * u2) / (q ** 3 * np.sqrt(q)))


def es_torque_axial(p, lam, a, h, theta, coulomb=1.0):
    """-dE/dtheta = |p x lambda| 2 pi coulomb a (a^2 - 2h^2) / (a^2 + h^2)^(5/2)."""
    return 2.0 * math.pi * coulomb * p * lam * np.sin(theta) / a ** 2 * _profile(a, h)


def norm_scale(dipole: PointDipole, ring: PolarizedRing, h, coulomb=1.0):
    """Energy if the two dipole-dipole terms never cancelled: 2 pi a 4 |p| |lambda| / r^3."""
    r = math.hypot(ring.a, h)
    return abs(coulomb) * 2.0 * math.pi * ring.a * 4.0 * abs(dipole.p) * abs(ring.lam) / r ** 3


def es_energy_quadrature(dipole: PointDipole, ring: PolarizedRing, h, coulomb=1.0,
                         settings=DEFAULT_SETTINGS, wrt=None):
    """
    coulomb * a int dphi' [p.lambda - 3 (p.rhat)(rhat.lambda)] / r^3 over the ring.

    ``wrt="h"`` or ``wrt="theta"`` returns the derivative by complex step.
    """
    if wrt not in (None, "h", "theta"):
        raise ValueError(f"can only differentiate with respect to 'h' or 'theta', not {wrt!r}")
    a = ring.a
    step = 1e-30
    hh = h + 1j * step if wrt == "h" else h
    if wrt == "theta":
        pvec = dipole.p * spherical_frame(dipole.theta + 1j * step, dipole.phi_s)[0]
    else:
        pvec = dipole.vector()

    def integrand(phi):
        rho_hat, _, z_hat = cylindrical_frame(phi)
        sep = hh * z_hat - a * rho_hat
        r = np.sqrt(np.sum(sep * sep, axis=-1))
        rhat = sep / r[:, None]
        lam = ring.polarization(phi)
        val = a * (lam @ pvec - 3.0 * (rhat @ pvec) * np.sum(rhat * lam, axis=-1)) / r ** 3
        return val if wrt is None else np.imag(val) / step

    # every ring element sits at the same distance; the two terms can cancel
    # down to rounding, which sets the convergence floor
    bound = norm_scale(dipole, ring, h)
    if wrt == "h":
        bound *= 1.0 + 3.0 / math.hypot(a, h)
    elif wrt == "theta":
        bound *= 2.0
    floor = 100.0 * np.finfo(float).eps * bound
    return coulomb * float(np.real(periodic_trapezoid(integrand, settings, floor=floor)))


def es_force_quadrature(dipole, ring, h, coulomb=1.0, settings=DEFAULT_SETTINGS):
    return -es_energy_quadrature(dipole, ring, h, coulomb, settings, wrt="h")


def es_torque_quadrature(dipole, ring, h, coulomb=1.0, settings=DEFAULT_SETTINGS):
    return -es_energy_quadrature(dipole, ring, h, coulomb, settings, wrt="theta")
