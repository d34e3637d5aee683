"""
Torsion-free heights, repulsion intervals, critical angles and geometry
thresholds for an e1 atom on the axis of a ring, annular disc or plate.

Everything here is generic numerics on energy/force callables of the scaled
height u = h/a and the orientation theta (radians); the closed-form quartic
roots in `torsion_free_analytic` are kept separate so the two can be checked
against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from . import closed_forms as cf

U_MAX = 20.0
N_SCAN = 2000

# complex-step size used to differentiate closed forms that have no printed force
_CSTEP = 1e-30


@dataclass(frozen=True)
class EnergyFamily:
    """Energy and axial force of one configuration as functions of (u, theta), a = 1."""

    name: str
    energy: Callable
    force: Callable
    analytic_force: bool = False


def _cstep_force(energy):
    def force(u, theta):
        u = np.asarray(u, dtype=float)
        return -np.imag(energy(u + 1j * _CSTEP, theta)) / _CSTEP
    return force


def family(geometry, mode, b=None):
    """
    Build an `EnergyFamily` for an e1 atom.

    `geometry` is "ring", "disc" or "plate"; `mode` is "radial", "axial",
    "iso" (in-plane isotropic) or, for the ring only, "tangential".  Discs
    need the outer radius `b` in units of a.
    """
    if geometry == "ring":
        if mode not in ("tangential", "radial", "axial", "iso"):
            raise ValueError(f"unknown ring mode {mode!r}")

        def energy(u, theta):
            return cf.ring_energy_e1(mode, 1.0, u, theta)

        if mode in ("radial", "axial"):
            def force(u, theta):
                return cf.ring_force_closed(mode, 1.0, u, theta)
            return EnergyFamily(f"ring-{mode}", energy, force, True)
        return EnergyFamily(f"ring-{mode}", energy, _cstep_force(energy))
    if geometry == "plate":
        cf._mode(mode)

        def energy(u, theta):
            return cf.plate_energy_closed(mode, 1.0, u, theta)
        return EnergyFamily(f"plate-{mode}", energy, _cstep_force(energy))
    if geometry == "disc":
        if b is None:
            raise ValueError("disc family needs the outer radius b")
        cf._mode(mode)

        def energy(u, theta):
            return cf.disc_energy_closed(mode, 1.0, b, u, theta)
        return EnergyFamily(f"disc-{mode}-b{b:g}", energy, _cstep_force(energy))
    raise ValueError(f"unknown geometry {geometry!r}")


# ---------------------------------------------------------------------------
# torsion-free heights
# ---------------------------------------------------------------------------

class NotCos2FormError(ValueError):
    """The energy is not of the form A(h) + B(h) cos(2 theta)."""


@dataclass(frozen=True)
class Cos2Split:
    """E(h, theta) = A(h) + B(h) cos(2 theta)."""

    energy: Callable

    def parts(self, u):
        e0 = np.asarray(self.energy(u, 0.0))
        e90 = np.asarray(self.energy(u, 0.5 * math.pi))
        return 0.5 * (e0 + e90), 0.5 * (e0 - e90)

    def A(self, u):
        return self.parts(u)[0]

    def B(self, u):
        return self.parts(u)[1]

    def residual(self, u):
        """Worst relative miss of A + B cos(2 theta) at 45 and 30 degrees."""
        A, B = self.parts(u)
        scale = np.abs(A) + np.abs(B)
        worst = 0.0
        for theta in (0.25 * math.pi, math.pi / 6):
            miss = np.abs(np.asarray(self.energy(u, theta)) - (A + B * math.cos(2 * theta)))
            with np.errstate(invalid="ignore", divide="ignore"):
                rel = np.where(scale > 0, miss / scale, miss)
            worst = max(worst, float(np.max(rel)))
        return worst

    def check(self, u, tol=1e-12):
        res = self.residual(u)
        if res > tol:
            raise NotCos2FormError(f"energy deviates from the cos(2 theta) form by {res:.2e}")
        return res


def scan_grid(u_max=U_MAX, n=N_SCAN):
    """Uniform samples on (0, u_max] plus a logarithmic run towards u = 0."""
    uniform = np.linspace(u_max / n, u_max, n)
    near_zero = np.geomspace(1e-6, uniform[0], 40, endpoint=False)
    return np.concatenate([near_zero, uniform])


def _sign_change_roots(fn, grid, values, xtol):
    roots = []
    for i in np.flatnonzero(values == 0):
        roots.append(float(grid[i]))
    s = np.sign(values)
    for i in np.flatnonzero(s[:-1] * s[1:] < 0):
        roots.append(brentq(fn, grid[i], grid[i + 1], xtol=xtol, rtol=4 * np.finfo(float).eps))
    return sorted(roots)


def torsion_free_heights(energy, u_max=U_MAX, n=N_SCAN, xtol=1e-13, form_tol=1e-9):
    """
    Heights u = h/a > 0 where the energy does not depend on orientation.

    These are the zeros of the cos(2 theta) coefficient B(u), found by sign
    changes on a uniform scan of (0, u_max] and refined with Brent's method.
    The cos(2 theta) form is checked to `form_tol` first; thin discs seen
    from far away lose digits to cancellation and need a looser value.
    """
    split = Cos2Split(energy)
    grid = np.linspace(u_max / n, u_max, n)
    split.check(grid, form_tol)

    def B(u):
        return float(split.B(u))
    return _sign_change_roots(B, grid, split.B(grid), xtol)


# coefficients (c4, c2, c0) of the cos(2 theta) polynomial c4 u^4 + c2 u^2 + c0
QUARTICS = {
    "ring-radial": (13.0, -156.0, 20.0),
    "ring-axial": (40.0, -123.0, 26.0),
    "ring-iso": (26.0, -130.0, 33.0),
    "plate-iso": (-2.0, -74.0, 33.0),
    "plate-radial": (-3.0, -20.0, 4.0),
    "plate-axial": (6.0, -73.0, 26.0),
}


def torsion_free_analytic(case):
    """Positive roots u of the biquadratic cos(2 theta) coefficient, ascending.

    For "ring-radial" these are sqrt((78 -+ 8 sqrt 91) / 13).
    """
    try:
        c4, c2, c0 = QUARTICS[case]
    except KeyError:
        raise ValueError(f"no analytic torsion-free polynomial for {case!r}") from None
    disc = c2 * c2 - 4.0 * c4 * c0
    if disc < 0:
        return []
    sq = math.sqrt(disc)
    # numerically stable pair of roots in x = u^2
    q = -0.5 * (c2 + math.copysign(sq, c2))
    xs = [q / c4, c0 / q]
    return sorted(math.sqrt(x) for x in xs if x > 0)


# ---------------------------------------------------------------------------
# repulsion
# ---------------------------------------------------------------------------

def repulsion_intervals(force, theta, u_max=U_MAX, n=N_SCAN, xtol=1e-13):
    """
    Height intervals (lo, hi), in units of a, where the axial force is
    repulsive (F > 0) at orientation `theta`.

    Sign changes on `scan_grid` are refined with Brent's method.  Local maxima
    of the sampled force that stay negative are refined by bounded
    maximisation, so an interval thinner than the grid spacing is still
    found.  An interval reaching the plane starts at 0.0.
    """
    grid = scan_grid(u_max, n)

    def f(u):
        return float(force(u, theta))

    vals = np.asarray(force(grid, theta), dtype=float)
    edges = _sign_change_roots(f, grid, vals, xtol)

    # negative local maxima may hide thin positive bumps
    inner = np.flatnonzero((vals[1:-1] >= vals[:-2]) & (vals[1:-1] >= vals[2:]) & (vals[1:-1] <= 0)) + 1
    for i in inner:
        lo, hi = grid[i - 1], grid[i + 1]
        res = minimize_scalar(lambda u: -f(u), bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-14 * max(1.0, hi)})
        if -res.fun > 0:
            peak = float(res.x)
            edges.append(brentq(f, lo, peak, xtol=xtol))
            edges.append(brentq(f, peak, hi, xtol=xtol))

    points = [0.0] + sorted(set(edges)) + [float(grid[-1])]
    intervals = []
    for lo, hi in zip(points[:-1], points[1:]):
        if hi <= lo:
            continue
        probe = grid[0] if lo == 0.0 and hi > grid[0] else 0.5 * (lo + hi)
        if f(probe) > 0:
            if intervals and intervals[-1][1] == lo:
                intervals[-1] = (intervals[-1][0], hi)
            else:
                intervals.append((lo, hi))
    return intervals


def critical_angles(force, step_deg=0.25, tol_deg=1e-3, u_max=U_MAX, n=N_SCAN):
    """
    Orientations, in degrees on [0, 180], at which repulsion appears or
    disappears.

    The predicate "some repulsive interval exists" is sampled every
    `step_deg` and each change is bisected to `tol_deg`.
    """
    def repulsive(theta_deg):
        return bool(repulsion_intervals(force, math.radians(theta_deg), u_max, n))

    thetas = np.arange(0.0, 180.0 + 0.5 * step_deg, step_deg)
    flags = [repulsive(t) for t in thetas]
    out = []
    for i in range(len(thetas) - 1):
        if flags[i] == flags[i + 1]:
            continue
        lo, hi = thetas[i], thetas[i + 1]
        flag_lo = flags[i]
        while hi - lo > tol_deg:
            mid = 0.5 * (lo + hi)
            if repulsive(mid) == flag_lo:
                lo = mid
            else:
                hi = mid
        out.append(0.5 * (lo + hi))
    return out


class ThresholdError(ValueError):
    pass


def has_detached_region(force, theta, **scan):
    """True when a repulsive interval exists that does not reach the plane h = 0."""
    return any(lo > 0.0 for lo, _ in repulsion_intervals(force, theta, **scan))


def second_region_threshold(theta, mode="radial", b_min=1.0 + 1e-4, b_max=2.0, tol=1e-4):
    """
    Outer radius b*/a below which an annular disc shows the intermediate
    (detached) region of repulsion at orientation `theta` (radians).
    """
    def predicate(b):
        return has_detached_region(family("disc", mode, b).force, theta)

    at_lo, at_hi = predicate(b_min), predicate(b_max)
    if at_lo == at_hi:
        raise ThresholdError(f"no threshold in window b/a in ({b_min}, {b_max}] at "
                             f"theta = {math.degrees(theta):.3f} deg")
    lo, hi = b_min, b_max
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if predicate(mid) == at_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def ring_repulsion_edges(mode, theta):
    """
    Closed-form boundaries u of the repulsive region of a ring at `theta`:
    positive roots of the force bracket, a quadratic in u^2.
    """
    c = math.cos(2.0 * theta)
    if mode == "radial":
        c4, c2, c0 = 91.0 * (1.0 - c), 812.0 + 1456.0 * c, 28.0 - 532.0 * c
    elif mode == "axial":
        c4, c2, c0 = 40.0 * (1.0 + c), -(19.0 + 181.0 * c), 40.0 + 76.0 * c
    else:
        raise ValueError("closed-form edges exist for the radial and axial ring only")
    if c4 == 0:
        xs = [-c0 / c2] if c2 else []
    else:
        disc = c2 * c2 - 4.0 * c4 * c0
        if disc < 0:
            return []
        sq = math.sqrt(disc)
        xs = [(-c2 - sq) / (2 * c4), (-c2 + sq) / (2 * c4)]
    return sorted(math.sqrt(x) for x in xs if x > 0)


@dataclass
class RepulsionMap:
    """Boolean repulsion mask on a (theta, h) grid, rows indexed by theta."""

    h: np.ndarray
    theta: np.ndarray
    mask: np.ndarray
    boundary: np.ndarray = field(default_factory=lambda: np.empty((0, 2)))

    @property
    def empty(self):
        return not self.mask.any()


def repulsion_map(force, h_grid, theta_grid):
    """
    Evaluate the sign of the force on a grid and extract the boundary.

    The boundary is returned as (h, theta) points where the sign flips along
    either axis, located by linear interpolation of the force.
    """
    h = np.asarray(h_grid, dtype=float)
    th = np.asarray(theta_grid, dtype=float)
    if np.any(np.diff(h) <= 0) or np.any(np.diff(th) <= 0):
        raise ValueError("grids must be strictly increasing")
    F = np.asarray(force(h[None, :], th[:, None]), dtype=float)
    mask = F > 0
    pts = []
    i, j = np.nonzero(mask[:, :-1] != mask[:, 1:])
    for a, b in zip(i, j):
        t = F[a, b] / (F[a, b] - F[a, b + 1])
        pts.append((h[b] + t * (h[b + 1] - h[b]), th[a]))
    i, j = np.nonzero(mask[:-1, :] != mask[1:, :])
    for a, b in zip(i, j):
        t = F[a, b] / (F[a, b] - F[a + 1, b])
        pts.append((h[b], th[a] + t * (th[a + 1] - th[a])))
    boundary = np.array(sorted(pts)) if pts else np.empty((0, 2))
    return RepulsionMap(h, th, mask, boundary)
