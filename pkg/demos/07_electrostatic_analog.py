"""
Electrostatic analog
====================

A permanent dipole above a permanently polarized ring.  The axial case
changes sign at h = a / sqrt(2), so the preferred orientation flips.
"""

import math

import numpy as np

import annular_cp as acp

h = np.array([0.0, 0.5, 1 / math.sqrt(2), 1.0, 2.0])
print("E(h, 0) =", acp.es_energy_axial(1, 1, 1, h, 0.0))

thetas = np.linspace(0, math.pi, 7)
for hh in (0.5, 1.0):
    e = acp.es_energy_axial(1, 1, 1, hh, thetas)
    print(f"h={hh}: preferred theta = {math.degrees(thetas[np.argmin(e)]):.0f} deg")

# a tangentially polarized ring has no field on its axis
ring = acp.PolarizedRing(1.0, "tangential")
print("tangential ring:", acp.es_energy_quadrature(acp.PointDipole(1.0, 0.4, 0.2), ring, 0.6))
