"""
Frames and polarizability tensors.

Vectors are numpy arrays of shape (..., 3) and tensors arrays of shape
(..., 3, 3) in the Cartesian basis (i, j, k).  Every routine accepts complex
angles as well as real ones so that derivatives can be taken by complex step.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def spherical_frame(theta, phi_s):
    """Return the spherical unit vectors (r_s, theta_s, phi_s) at the given angles."""
    st, ct = np.sin(theta), np.cos(theta)
    sp, cp = np.sin(phi_s), np.cos(phi_s)
    zero = 0.0 * st * sp
    r_s = np.stack(np.broadcast_arrays(st * cp, st * sp, ct + zero), axis=-1)
    t_s = np.stack(np.broadcast_arrays(ct * cp, ct * sp, -st + zero), axis=-1)
    p_s = np.stack(np.broadcast_arrays(-sp + zero, cp + zero, zero), axis=-1)
    return r_s, t_s, p_s


def eigenbasis(theta, beta, phi_s=0.0):
    """
    Principal axes (e1, e2, e3) of the atomic polarizability.

    e1 points along the spherical radial direction at polar angle `theta`
    and azimuth `phi_s`; e2 and e3 span the plane normal to e1 and are
    rotated by `beta` about e1::

        e1 = r_s
        e2 = cos(beta) phi_s + sin(beta) theta_s
        e3 = sin(beta) phi_s - cos(beta) theta_s

    e3 is chosen as e1 x e2 so the triad is right handed; only the dyad
    e3 e3 enters a polarizability, so its overall sign is immaterial.
    """
    r_s, t_s, p_s = spherical_frame(theta, phi_s)
    cb = np.cos(beta)[..., None] if np.ndim(beta) else np.cos(beta)
    sb = np.sin(beta)[..., None] if np.ndim(beta) else np.sin(beta)
    e2 = cb * p_s + sb * t_s
    e3 = sb * p_s - cb * t_s
    return r_s, e2, e3


def cylindrical_frame(phi):
    """Cylindrical unit vectors (rho_hat, phi_hat, z_hat) at azimuth `phi`."""
    phi = np.asarray(phi)
    c, s = np.cos(phi), np.sin(phi)
    zero, one = np.zeros_like(c), np.ones_like(c)
    rho_hat = np.stack([c, s, zero], axis=-1)
    phi_hat = np.stack([-s, c, zero], axis=-1)
    z_hat = np.stack([zero, zero, one], axis=-1)
    return rho_hat, phi_hat, z_hat


def dyad(u, v=None):
    """Outer product u v (u u when `v` is omitted), broadcast over leading axes."""
    v = u if v is None else v
    return u[..., :, None] * v[..., None, :]


@dataclass(frozen=True)
class AtomPolarizability:
    """Diagonal atomic polarizability (alpha1, alpha2, alpha3) and its orientation.

    Angles are in radians.  `phi_s` never changes an on-axis energy but is
    kept so that this invariance can be checked rather than assumed.
    """

    alpha1: float
    alpha2: float = 0.0
    alpha3: float = 0.0
    theta: float = 0.0
    beta: float = 0.0
    phi_s: float = 0.0

    @classmethod
    def uniaxial(cls, alpha1=1.0, theta=0.0, beta=0.0, phi_s=0.0):
        return cls(alpha1, 0.0, 0.0, theta, beta, phi_s)

    @classmethod
    def isotropic(cls, alpha=1.0):
        return cls(alpha, alpha, alpha)

    @property
    def alphas(self):
        return (self.alpha1, self.alpha2, self.alpha3)

    def axes(self):
        return eigenbasis(self.theta, self.beta, self.phi_s)

    def tensor(self):
        return atom_tensor(self)

    def replace(self, **changes) -> "AtomPolarizability":
        fields = dict(alpha1=self.alpha1, alpha2=self.alpha2, alpha3=self.alpha3,
                      theta=self.theta, beta=self.beta, phi_s=self.phi_s)
        fields.update(changes)
        return AtomPolarizability(**fields)


def atom_tensor(atom: AtomPolarizability) -> np.ndarray:
    """alpha1 e1 e1 + alpha2 e2 e2 + alpha3 e3 e3 as a 3x3 array."""
    e1, e2, e3 = atom.axes()
    return atom.alpha1 * dyad(e1) + atom.alpha2 * dyad(e2) + atom.alpha3 * dyad(e3)


@dataclass(frozen=True)
class AnnularPolarizability:
    """Polarizability of a ring, disc or plate, diagonal in (z, rho, phi).

    For a ring the components are line densities sigma (length^2), for a
    disc or plate surface densities lambda (length).
    """

    z: float = 0.0
    rho: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if not all(np.isfinite(c) for c in (self.z, self.rho, self.phi)):
            raise ValueError("annular polarizability components must be finite")

    @classmethod
    def axial(cls, value=1.0):
        return cls(z=value)

    @classmethod
    def radial(cls, value=1.0):
        return cls(rho=value)

    @classmethod
    def tangential(cls, value=1.0):
        return cls(phi=value)

    @classmethod
    def in_plane(cls, value=1.0):
        """Isotropic in the plane of the annulus: value (rho rho + phi phi)."""
        return cls(rho=value, phi=value)

    @property
    def components(self):
        return (self.z, self.rho, self.phi)

    def is_zero(self):
        return self.z == 0 and self.rho == 0 and self.phi == 0

    def tensor(self, phi):
        return annulus_frame_tensor(self, phi)


def annulus_frame_tensor(pol: AnnularPolarizability, phi) -> np.ndarray:
    """comp_z zz + comp_rho rho(phi) rho(phi) + comp_phi phi(phi) phi(phi)."""
    rho_hat, phi_hat, z_hat = cylindrical_frame(phi)
    return pol.z * dyad(z_hat) + pol.rho * dyad(rho_hat) + pol.phi * dyad(phi_hat)


def rhat_on_axis(rho, h, phi=0.0):
    """
    Separation from a point of the annulus at (rho, phi, 0) to an atom at (0, 0, h).

    Following the sign convention of the dielectric integral, the returned
    vector points from the atom to the annulus element::

        r = sqrt(rho**2 + h**2),   rhat = (rho rho_hat(phi) - h z_hat) / r

    Returns ``(r, rhat)``; `rhat` is expressed in Cartesian components at the
    requested azimuth(s).
    """
    rho = np.asarray(rho)
    if np.any(np.real(rho) < 0):
        raise ValueError("rho must be non-negative")
    if np.any((rho == 0) & (np.asarray(h) == 0)):
        raise ValueError("direction undefined for rho = h = 0")
    r = np.sqrt(rho * rho + h * h)
    rho_hat, _, z_hat = cylindrical_frame(phi)
    rhat = (rho[..., None] * rho_hat - np.asarray(h)[..., None] * z_hat) / r[..., None]
    return r, rhat
