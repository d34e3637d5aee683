"""
Closed-form Casimir-Polder energies and forces for an on-axis atom.

All expressions are written in the scaled height u = h/a; lengths, energies
and forces are in natural units (hbar = c = 1) unless a reduced scale is
applied with `ring_scale` / `plate_scale`.  Angles are in radians.

Ring energies are available for every (atom axis, ring component) pair, so a
general diagonal atom above a general (z, rho, phi) ring is handled by
superposition.  Disc and plate energies are available for a uniaxial atom
(polarizable along e1 only).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .tensors import AnnularPolarizability, AtomPolarizability

RING_COMPONENTS = ("phi", "rho", "z")
DISC_MODES = ("iso", "radial", "axial")

_COMP_ALIASES = {
    "phi": "phi", "tangential": "phi",
    "rho": "rho", "radial": "rho",
    "z": "z", "axial": "z",
}


def _comp(name):
    try:
        return _COMP_ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown ring component {name!r}") from None


def _mode(name):
    aliases = {"iso": "iso", "in-plane": "iso", "radial": "radial", "rho": "radial",
               "axial": "axial", "z": "axial"}
    try:
        return aliases[name]
    except KeyError:
        raise ValueError(f"unknown polarization mode {name!r}; expected one of {DISC_MODES}") from None


def _half_powers(q, n):
    """q ** (n / 2) by repeated multiplication; n odd."""
    return q ** (n // 2) * np.sqrt(q)


def ring_scale(alpha1=1.0, sigma=1.0, a=1.0):
    """E_r = alpha1 sigma / (64 pi a^6), the natural ring energy unit."""
    return alpha1 * sigma / (64.0 * math.pi * a ** 6)


def plate_scale(alpha1=1.0, lam=1.0, a=1.0):
    """E_p = alpha1 lambda / (64 pi a^5), the natural disc/plate energy unit."""
    return alpha1 * lam / (64.0 * math.pi * a ** 5)


@dataclass(frozen=True)
class ReducedEnergy:
    value: float
    scale_ring: float
    scale_plate: float

    @property
    def in_ring_units(self):
        return self.value / self.scale_ring

    @property
    def in_plate_units(self):
        return self.value / self.scale_plate


# ---------------------------------------------------------------------------
# ring
# ---------------------------------------------------------------------------

def _in_plane_weight(axis, theta, beta):
    """Squared in-plane projection of the atom axis (1 - (e.z)^2)."""
    st2, ct2 = np.sin(theta) ** 2, np.cos(theta) ** 2
    if axis == 1:
        return st2
    sb2, cb2 = np.sin(beta) ** 2, np.cos(beta) ** 2
    if axis == 2:
        return cb2 + sb2 * ct2
    return sb2 + cb2 * ct2


def _axial_weight(axis, theta, beta):
    """(e.z)^2 for the atom axis."""
    st2, ct2 = np.sin(theta) ** 2, np.cos(theta) ** 2
    if axis == 1:
        return ct2
    if axis == 2:
        return np.sin(beta) ** 2 * st2
    return np.cos(beta) ** 2 * st2


def ring_energy_component(axis, comp, a, h, theta, beta=0.0, alpha=1.0, sigma=1.0):
    """
    Energy of a uniaxial atom (polarizable along e_axis only) above a ring
    polarizable along one of its cylindrical directions.

    `axis` is 1, 2 or 3; `comp` one of "phi", "rho", "z" (or "tangential",
    "radial", "axial").  The e1 radial and axial cases use the cos(2 theta)
    forms; the e2/e3 ones are written with squared projections, which is how
    the rotation between the atomic axes shows up.
    """
    comp = _comp(comp)
    if axis not in (1, 2, 3):
        raise ValueError("atom axis must be 1, 2 or 3")
    u = np.asarray(h) / a
    u2 = u * u
    q = 1.0 + u2
    c2 = np.cos(2.0 * np.asarray(theta))

    if comp == "phi":
        # only the in-plane projection contributes since phi_hat . rhat = 0
        w = _in_plane_weight(axis, theta, beta)
        return -alpha * sigma / (32.0 * math.pi * a ** 6) * 13.0 * w / _half_powers(q, 7)

    denom = _half_powers(q, 11)
    if axis == 1:
        if comp == "rho":
            bracket = (20.0 + 96.0 * u2 + 13.0 * u2 * u2) - (20.0 - 156.0 * u2 + 13.0 * u2 * u2) * c2
        else:
            bracket = (26.0 + 3.0 * u2 + 40.0 * u2 * u2) + (26.0 - 123.0 * u2 + 40.0 * u2 * u2) * c2
        return -alpha * sigma / (64.0 * math.pi * a ** 6) * bracket / denom

    w_plane = _in_plane_weight(axis, theta, beta)
    w_axis = _axial_weight(axis, theta, beta)
    if comp == "rho":
        bracket = 126.0 * u2 * w_axis + (20.0 - 30.0 * u2 + 13.0 * u2 * u2) * w_plane
    else:
        bracket = 63.0 * u2 * w_plane + (26.0 - 60.0 * u2 + 40.0 * u2 * u2) * w_axis
    return -alpha * sigma / (32.0 * math.pi * a ** 6) * bracket / denom


def ring_energy_closed(atom: AtomPolarizability, ring: AnnularPolarizability, a, h):
    """Energy of a general diagonal atom above a (z, rho, phi) ring, by superposition."""
    if not a > 0:
        raise ValueError("ring radius must be positive")
    total = 0.0
    for axis, alpha in zip((1, 2, 3), atom.alphas):
        if alpha == 0:
            continue
        for comp, sigma in zip(("z", "rho", "phi"), ring.components):
            if sigma == 0:
                continue
            total = total + ring_energy_component(axis, comp, a, h, atom.theta, atom.beta,
                                                  alpha, sigma)
    return total


def ring_energy_e1(mode, a, h, theta, alpha1=1.0, sigma=1.0):
    """
    e1 atom above a ring; `mode` is "tangential", "radial", "axial" or "iso".

    "iso" means polarizable isotropically in the ring plane, sigma (rho rho +
    phi phi); its printed form is the sum of the tangential and radial ones.
    """
    if mode == "iso":
        u2 = (np.asarray(h) / a) ** 2
        c2 = np.cos(2.0 * np.asarray(theta))
        bracket = ((33.0 + 122.0 * u2 + 26.0 * u2 * u2)
                   - (33.0 - 130.0 * u2 + 26.0 * u2 * u2) * c2)
        return -alpha1 * sigma / (64.0 * math.pi * a ** 6) * bracket / _half_powers(1.0 + u2, 11)
    return ring_energy_component(1, mode, a, h, theta, 0.0, alpha1, sigma)


def ring_force_closed(comp, a, h, theta, alpha1=1.0, sigma=1.0):
    """
    Axial force -dE/dh on an e1 atom above a radially or axially polarizable ring.

    Positive values push the atom away from the ring plane.  Other component
    choices have no printed force; use `force_numeric` on the energy.
    """
    comp = _comp(comp)
    u = np.asarray(h) / a
    u2 = u * u
    c2 = np.cos(2.0 * np.asarray(theta))
    pref = -alpha1 * sigma / (64.0 * math.pi * a ** 7)
    denom = _half_powers(1.0 + u2, 13)
    if comp == "rho":
        bracket = (28.0 + 812.0 * u2 + 91.0 * u2 * u2) - (532.0 - 1456.0 * u2 + 91.0 * u2 * u2) * c2
        return pref * u * bracket / denom
    if comp == "z":
        bracket = (40.0 - 19.0 * u2 + 40.0 * u2 * u2) + (76.0 - 181.0 * u2 + 40.0 * u2 * u2) * c2
        return pref * 7.0 * u * bracket / denom
    raise ValueError(f"no closed-form force for ring component {comp!r}; use force_numeric")


# ---------------------------------------------------------------------------
# disc and plate (uniaxial e1 atom)
# ---------------------------------------------------------------------------

# (denominator of the prefactor, constant bracket, cos(2 theta) bracket); each
# bracket lists the coefficients of rho^4, rho^2 h^2, h^4.
_ANNULUS_TABLE = {
    "iso": (320.0, (33.0, 106.0, 38.0), (-33.0, 74.0, 2.0)),
    "radial": (64.0, (4.0, 16.0, 5.0), (-4.0, 20.0, 3.0)),
    "axial": (320.0, (26.0, 17.0, 26.0), (26.0, -73.0, 6.0)),
}


def _annulus_primitive(mode, s, u, c2):
    """Bracket / (s^2 + u^2)^(9/2) with s = rho/a, u = h/a."""
    _, p0, p2 = _ANNULUS_TABLE[mode]
    s2, u2 = s * s, u * u
    b0 = p0[0] * s2 * s2 + p0[1] * s2 * u2 + p0[2] * u2 * u2
    b2 = p2[0] * s2 * s2 + p2[1] * s2 * u2 + p2[2] * u2 * u2
    return (b0 + b2 * c2) / _half_powers(s2 + u2, 9)


def disc_energy_closed(mode, a, b, h, theta, alpha1=1.0, lam=1.0):
    """
    e1 atom above an annular disc a < rho < b polarizable in `mode`
    ("iso", "radial" or "axial").

    Evaluated as the difference of the radial primitive between rho = b and
    rho = a.  `b` must exceed `a`; the thin-ring limit needs the density
    rescaling sigma = lam (b - a), which is left to the caller.
    """
    mode = _mode(mode)
    if not a > 0:
        raise ValueError("inner radius must be positive")
    if not b > a:
        raise ValueError(f"annular disc needs b > a (got a={a!r}, b={b!r}); "
                         "use ring_energy_e1 for the ring")
    if math.isinf(b):
        return plate_energy_closed(mode, a, h, theta, alpha1, lam)
    u = np.asarray(h) / a
    c2 = np.cos(2.0 * np.asarray(theta))
    pref = alpha1 * lam / (_ANNULUS_TABLE[mode][0] * math.pi * a ** 5)
    return pref * (_annulus_primitive(mode, b / a, u, c2) - _annulus_primitive(mode, 1.0, u, c2))


def plate_energy_closed(mode, a, h, theta, alpha1=1.0, lam=1.0):
    """e1 atom above an infinite plate with an aperture of radius `a`."""
    mode = _mode(mode)
    if not a > 0:
        raise ValueError("aperture radius must be positive")
    u2 = (np.asarray(h) / a) ** 2
    c2 = np.cos(2.0 * np.asarray(theta))
    q9 = _half_powers(1.0 + u2, 9)
    if mode == "iso":
        bracket = (33.0 + 106.0 * u2 + 38.0 * u2 * u2) - (33.0 - 74.0 * u2 - 2.0 * u2 * u2) * c2
        return -alpha1 * lam / (320.0 * math.pi * a ** 5) * bracket / q9
    if mode == "radial":
        bracket = (4.0 + 16.0 * u2 + 5.0 * u2 * u2) - (4.0 - 20.0 * u2 - 3.0 * u2 * u2) * c2
        return -alpha1 * lam / (64.0 * math.pi * a ** 5) * bracket / q9
    bracket = (26.0 + 17.0 * u2 + 26.0 * u2 * u2) + (26.0 - 73.0 * u2 + 6.0 * u2 * u2) * c2
    return -alpha1 * lam / (320.0 * math.pi * a ** 5) * bracket / q9


# (power of a/h, constant, cos(2 theta) coefficient) of the far-field forms,
# and (constant, cos(2 theta) coefficient) at h = 0; energies in units of
# E_r (ring) or E_p (plate), with an overall minus sign
_FAR = {
    ("ring", "radial"): (7, 13.0, -13.0),
    ("ring", "axial"): (7, 40.0, 40.0),
    ("plate", "radial"): (5, 5.0, 3.0),
    ("plate", "axial"): (5, 26.0 / 5.0, 6.0 / 5.0),
}
_NEAR = {
    ("ring", "radial"): (20.0, -20.0),
    ("ring", "axial"): (26.0, 26.0),
    ("plate", "radial"): (4.0, -4.0),
    ("plate", "axial"): (26.0 / 5.0, 26.0 / 5.0),
}


def limiting_energy(geometry, mode, h, theta, regime="far"):
    """
    Leading behaviour of the e1 energy for h >> a ("far") or at h = 0
    ("near"), in reduced units (E/E_r for a ring, E/E_p for a plate) with
    h in units of a.
    """
    mode = _mode(mode)
    key = (geometry, mode)
    if key not in _FAR:
        raise ValueError(f"no limiting form for {geometry} {mode}")
    c2 = np.cos(2.0 * np.asarray(theta))
    if regime == "near":
        c0, cc = _NEAR[key]
        return -(c0 + cc * c2) + 0.0 * np.asarray(h)
    if regime != "far":
        raise ValueError("regime must be 'near' or 'far'")
    n, c0, cc = _FAR[key]
    return -(c0 + cc * c2) / np.asarray(h, dtype=float) ** n


def uniaxial_only(atom: AtomPolarizability):
    """Raise unless only alpha1 is non-zero (disc and plate closed forms need that)."""
    if atom.alpha2 != 0 or atom.alpha3 != 0:
        raise ValueError("disc and plate closed forms exist only for a uniaxial (e1) atom; "
                         "use disc_energy_quadrature for the general case")


# ---------------------------------------------------------------------------
# numerical derivatives
# ---------------------------------------------------------------------------

class DerivativeError(ArithmeticError):
    pass


def richardson_derivative(fn, x, step=None, rel_tol=1e-8, con=1.4, levels=16):
    """
    d fn / dx at `x` by central differences with Richardson extrapolation
    (Ridders' tableau).  Returns ``(derivative, error_estimate)``.
    """
    x = float(x)
    hh = float(step) if step is not None else 0.1 * max(1.0, abs(x))
    if x + hh == x:
        raise DerivativeError(f"initial step {hh!r} underflows at x={x!r}")
    con2 = con * con
    table = [[(fn(x + hh) - fn(x - hh)) / (2.0 * hh)]]
    best, err = table[0][0], math.inf
    for i in range(1, levels):
        hh /= con
        if x + hh == x:
            raise DerivativeError("step underflow before convergence")
        row = [(fn(x + hh) - fn(x - hh)) / (2.0 * hh)]
        fac = con2
        for j in range(1, i + 1):
            row.append((row[j - 1] * fac - table[i - 1][j - 1]) / (fac - 1.0))
            fac *= con2
            errt = max(abs(row[j] - row[j - 1]), abs(row[j] - table[i - 1][j - 1]))
            if errt <= err:
                err, best = errt, row[j]
        table.append(row)
        if err <= rel_tol * abs(best) * 1e-3:
            break
        # the diagonal has turned around: rounding is winning, unless the
        # first steps were just too coarse to be in the asymptotic regime
        if i >= 4 and abs(row[i] - table[i - 1][i - 1]) >= 2.0 * err:
            break
    return best, err


def force_numeric(energy_fn, h, step=None):
    """-dE/dh of a scalar energy function of height."""
    return -richardson_derivative(energy_fn, h, step)[0]


def torque_numeric(energy_fn, theta, step=None):
    """-dE/dtheta of a scalar energy function of orientation."""
    return -richardson_derivative(energy_fn, theta, step if step is not None else 0.1)[0]
