"""
Closed forms against the quadrature oracle over a fixed grid.

Errors are measured relative to the cancellation-free size S of the energy
(`kernels.norm_scale`): S itself for energies, p S / r for height
derivatives and 2 S for orientation derivatives, with r the distance from
the atom to the ring or inner edge.  S never vanishes, so configurations
whose energy is identically zero are still checked.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import closed_forms as cf
from . import electrostatics as es
from . import kernels as kq
from . import machine as mc
from .tensors import AnnularPolarizability, AtomPolarizability

H_GRID = tuple(round(0.1 * i, 10) for i in range(51))
THETA_GRID_DEG = tuple(range(0, 91, 15))
BETA_GRID_DEG = (0, 45, 90)
DISC_B = 2.0

_RING_POL = {"phi": AnnularPolarizability.tangential, "rho": AnnularPolarizability.radial,
             "z": AnnularPolarizability.axial}
_MODE_POL = {"iso": AnnularPolarizability.in_plane, "radial": AnnularPolarizability.radial,
             "axial": AnnularPolarizability.axial}


@dataclass
class FamilyResult:
    name: str
    points: int
    max_error: float
    worst_at: tuple
    tol: float

    @property
    def passed(self):
        return self.max_error <= self.tol


@dataclass
class VerificationReport:
    tol: float
    families: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self):
        return all(f.passed for f in self.families)

    @property
    def max_error(self):
        return max(f.max_error for f in self.families)

    def to_dict(self):
        return {
            "tol": self.tol,
            "passed": self.passed,
            "seconds": self.seconds,
            "families": [{"name": f.name, "points": f.points, "max_error": f.max_error,
                          "worst_at": list(f.worst_at), "passed": f.passed}
                         for f in self.families],
        }


def _unit_atom(axis, theta, beta):
    alphas = [0.0, 0.0, 0.0]
    alphas[axis - 1] = 1.0
    return AtomPolarizability(*alphas, theta=theta, beta=beta)


def _record(name, rows, tol):
    """rows: (point, closed, oracle, scale)."""
    worst, where = -1.0, ()
    for point, closed, oracle, scale in rows:
        err = abs(closed - oracle) / scale
        if err > worst:
            worst, where = err, point
    return FamilyResult(name, len(rows), worst, where, tol)


def _scales(atom, pol, h, b=None):
    """(energy, height-derivative, angle-derivative) scales for one point."""
    s = kq.norm_scale(atom, pol, 1.0, h, b)
    r = math.hypot(1.0, h)
    return s, kq.CASIMIR_POLDER.power * s / r, 2.0 * s


def ring_families(tol, h_grid=H_GRID, thetas=THETA_GRID_DEG, betas=BETA_GRID_DEG):
    out = []
    for axis in (1, 2, 3):
        for comp in ("phi", "rho", "z"):
            pol = _RING_POL[comp](1.0)
            rows = []
            for beta_deg in (betas if axis != 1 else (0,)):
                for theta_deg in thetas:
                    th, be = math.radians(theta_deg), math.radians(beta_deg)
                    atom = _unit_atom(axis, th, be)
                    for h in h_grid:
                        closed = float(cf.ring_energy_component(axis, comp, 1.0, h, th, be))
                        oracle = kq.ring_energy_quadrature(atom, pol, 1.0, h)
                        rows.append(((h, theta_deg, beta_deg), closed, oracle,
                                     _scales(atom, pol, h)[0]))
            out.append(_record(f"ring energy e{axis}/{comp}", rows, tol))
    for comp in ("rho", "z"):
        pol = _RING_POL[comp](1.0)
        rows = []
        for theta_deg in thetas:
            th = math.radians(theta_deg)
            atom = _unit_atom(1, th, 0.0)
            for h in h_grid:
                closed = float(cf.ring_force_closed(comp, 1.0, h, th))
                oracle = kq.ring_force_quadrature(atom, pol, 1.0, h)
                rows.append(((h, theta_deg), closed, oracle, _scales(atom, pol, h)[1]))
        out.append(_record(f"ring force e1/{comp}", rows, tol))
    return out


def annulus_families(tol, h_grid=H_GRID, thetas=THETA_GRID_DEG, b=DISC_B):
    out = []
    for geometry in ("disc", "plate"):
        outer = b if geometry == "disc" else math.inf
        for mode in cf.DISC_MODES:
            pol = _MODE_POL[mode](1.0)
            rows = []
            for theta_deg in thetas:
                th = math.radians(theta_deg)
                atom = _unit_atom(1, th, 0.0)
                for h in h_grid:
                    closed = float(cf.disc_energy_closed(mode, 1.0, outer, h, th))
                    oracle = kq.disc_energy_quadrature(atom, pol, 1.0, outer, h)
                    rows.append(((h, theta_deg), closed, oracle, _scales(atom, pol, h, outer)[0]))
            label = f"disc(b={b:g}a)" if geometry == "disc" else "plate"
            out.append(_record(f"{label} energy {mode}", rows, tol))
    return out


def machine_families(tol, h_grid=H_GRID, thetas=THETA_GRID_DEG):
    e0 = mc.energy_scale()
    pol = AnnularPolarizability.axial(1.0)
    energy, force, torque = [], [], []
    for theta_deg in thetas:
        th = math.radians(theta_deg)
        atom = _unit_atom(1, th, 0.0)
        for h in h_grid:
            p = (h, theta_deg)
            s_e, s_f, s_t = _scales(atom, pol, h)
            energy.append((p, float(mc.machine_energy(h, th)) * e0,
                           kq.ring_energy_quadrature(atom, pol, 1.0, h), s_e))
            force.append((p, float(mc.machine_force(h, th)) * e0,
                          kq.ring_force_quadrature(atom, pol, 1.0, h), s_f))
            torque.append((p, float(mc.machine_torque(h, th)) * e0,
                           kq.ring_torque_quadrature(atom, pol, 1.0, h), s_t))
    return [_record("machine energy", energy, tol),
            _record("machine force", force, tol),
            _record("machine torque", torque, tol)]


def electrostatic_families(tol, h_grid=H_GRID, thetas=THETA_GRID_DEG):
    ring = es.PolarizedRing(1.0, "axial")
    energy, force = [], []
    for theta_deg in thetas:
        th = math.radians(theta_deg)
        dip = es.PointDipole(1.0, th)
        for h in h_grid:
            p = (h, theta_deg)
            s = es.norm_scale(dip, ring, h)
            energy.append((p, float(es.es_energy_axial(1.0, 1.0, 1.0, h, th)),
                           es.es_energy_quadrature(dip, ring, h), s))
            force.append((p, float(es.es_force_axial(1.0, 1.0, 1.0, h, th)),
                          es.es_force_quadrature(dip, ring, h), 3.0 * s / math.hypot(1.0, h)))
    return [_record("electrostatic energy", energy, tol),
            _record("electrostatic force", force, tol)]


def run_verification(tol=1e-9):
    """Every closed form against its oracle on the standard grid."""
    start = time.perf_counter()
    report = VerificationReport(tol)
    report.families += ring_families(tol)
    report.families += annulus_families(tol)
    report.families += machine_families(tol)
    report.families += electrostatic_families(tol)
    report.seconds = time.perf_counter() - start
    return report
