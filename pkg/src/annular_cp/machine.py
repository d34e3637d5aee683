"""
Four-stroke cycle of an atom on the axis of an axially polarizable ring.

Energies are in units of E0 = 13 alpha sigma / (16 pi a^6) (hbar = c = 1),
forces in F0 = E0 / a, heights in units of a.  The states are

    A = (h=0,   theta=0)      B = (h=0,   theta=90 deg)
    C = (h=h_e, theta=90 deg) D = (h=h_e, theta=0)

and each leg's work is the energy change along it, computed once from the
energy function and once as a line integral of torque or force.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .quadrature import QuadratureSettings, adaptive_gauss_kronrod

HALF_PI = 0.5 * math.pi

_LINE_SETTINGS = QuadratureSettings(rel_tol=1e-13)


def energy_scale(alpha=1.0, sigma=1.0, a=1.0):
    """E0 = 13 alpha sigma / (16 pi a^6)."""
    return 13.0 * alpha * sigma / (16.0 * math.pi * a ** 6)


def _brackets(u2):
    even = 26.0 + 3.0 * u2 + 40.0 * u2 * u2
    odd = 26.0 - 123.0 * u2 + 40.0 * u2 * u2
    return even, odd


def machine_energy(h, theta):
    """E(h, theta) / E0 with h in units of a."""
    h = np.asarray(h)
    u2 = h * h
    even, odd = _brackets(u2)
    q = 1.0 + u2
    return -(even + odd * np.cos(2.0 * np.asarray(theta))) / (52.0 * q ** 5 * np.sqrt(q))


def machine_force(h, theta):
    """F(h, theta) / F0 = -dE/dh; positive pushes the atom away from the ring."""
    h = np.asarray(h)
    u2 = h * h
    q = 1.0 + u2
    bracket = ((40.0 - 19.0 * u2 + 40.0 * u2 * u2)
               + (76.0 - 181.0 * u2 + 40.0 * u2 * u2) * np.cos(2.0 * np.asarray(theta)))
    return -7.0 * h * bracket / (52.0 * q ** 6 * np.sqrt(q))


def machine_torque(h, theta):
    """tau(h, theta) / E0 = -dE/dtheta."""
    h = np.asarray(h)
    u2 = h * h
    q = 1.0 + u2
    _, odd = _brackets(u2)
    return -odd * np.sin(2.0 * np.asarray(theta)) / (26.0 * q ** 5 * np.sqrt(q))


def torsion_free_height():
    """Smaller root of 40 u^4 - 123 u^2 + 26 = 0, where C -> D costs nothing."""
    return math.sqrt((123.0 - math.sqrt(10969.0)) / 80.0)


def force_equilibrium_height():
    """Zero of the theta = 90 deg force, sqrt(2/9)."""
    return math.sqrt(2.0 / 9.0)


@dataclass(frozen=True)
class MachineState:
    label: str
    h: float
    theta: float


@dataclass(frozen=True)
class CycleReport:
    h_e: float
    h_e_choice: str
    h_torsion_free: float
    h_force_equilibrium: float
    states: tuple
    # energy-difference works (units of E0)
    W_ab: float
    W_bc: float
    W_cd: float
    W_da: float
    # line-integral works
    W_ab_line: float
    W_bc_line: float
    W_cd_line: float
    W_da_line: float
    closure_residual: float
    W_cd_at_force_equilibrium: float

    @property
    def works(self):
        return (self.W_ab, self.W_bc, self.W_cd, self.W_da)

    @property
    def line_works(self):
        return (self.W_ab_line, self.W_bc_line, self.W_cd_line, self.W_da_line)

    def to_dict(self):
        d = asdict(self)
        d["states"] = [asdict(s) for s in self.states]
        return d


def _line(f, lo, hi):
    # integral from lo to hi in either direction
    if hi < lo:
        return -adaptive_gauss_kronrod(f, hi, lo, _LINE_SETTINGS)
    return adaptive_gauss_kronrod(f, lo, hi, _LINE_SETTINGS)


def cycle_report(h_e_choice="torsion_free"):
    """
    Works of the A -> B -> C -> D -> A cycle.

    `h_e_choice` picks the height of states C and D: "torsion_free" (the
    default; the C -> D reorientation is then free) or "force_equilibrium"
    (where the theta = 90 deg force vanishes).
    """
    h_tf = torsion_free_height()
    h_eq = force_equilibrium_height()
    if h_e_choice == "torsion_free":
        h_e = h_tf
    elif h_e_choice == "force_equilibrium":
        h_e = h_eq
    else:
        raise ValueError(f"unknown h_e choice {h_e_choice!r}")

    states = (MachineState("A", 0.0, 0.0), MachineState("B", 0.0, HALF_PI),
              MachineState("C", h_e, HALF_PI), MachineState("D", h_e, 0.0))
    E = {s.label: float(machine_energy(s.h, s.theta)) for s in states}
    w_ab = E["B"] - E["A"]
    w_bc = E["C"] - E["B"]
    w_cd = E["D"] - E["C"]
    w_da = E["A"] - E["D"]

    l_ab = -_line(lambda t: machine_torque(0.0, t), 0.0, HALF_PI)
    l_bc = -_line(lambda h: machine_force(h, HALF_PI), 0.0, h_e)
    l_cd = -_line(lambda t: machine_torque(h_e, t), HALF_PI, 0.0)
    l_da = -_line(lambda h: machine_force(h, 0.0), h_e, 0.0)
    closure = abs(math.fsum((l_ab, l_bc, l_cd, l_da)))

    w_cd_eq = float(machine_energy(h_eq, 0.0) - machine_energy(h_eq, HALF_PI))
    return CycleReport(h_e, h_e_choice, h_tf, h_eq, states,
                       w_ab, w_bc, w_cd, w_da,
                       float(l_ab), float(l_bc), float(l_cd), float(l_da),
                       closure, w_cd_eq)


def energy_table(h_grid, thetas=(0.0, HALF_PI)):
    """Rows (h, theta, E/E0) for plotting the two branches of the machine."""
    rows = []
    for theta in thetas:
        for h in h_grid:
            rows.append((float(h), float(theta), float(machine_energy(h, theta))))
    return rows
