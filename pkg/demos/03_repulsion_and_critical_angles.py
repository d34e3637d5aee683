"""
Repulsion regions and critical angles
=====================================

The axial force can push the atom away from the plane for some
orientations.  Scanning the orientation and bisecting on "is any height
repulsive" gives the critical angles.
"""

import math

import numpy as np

import annular_cp as acp

force = acp.family("ring", "radial").force
for theta_deg in (0, 30, 60, 88, 90):
    iv = acp.repulsion_intervals(force, math.radians(theta_deg))
    print(f"ring radial theta={theta_deg:3d}: repulsive for h/a in {[(round(a, 4), round(b, 4)) for a, b in iv]}")

# In[1]: critical angles

for geometry, mode in (("ring", "radial"), ("ring", "axial"), ("plate", "iso")):
    angles = acp.critical_angles(acp.family(geometry, mode).force, tol_deg=1e-4)
    print(f"{geometry} {mode}: {[round(float(a), 3) for a in angles]}")
print("0.5 acos(1/19)  =", round(0.5 * math.degrees(math.acos(1 / 19)), 4))
print("0.5 acos(17/89) =", round(0.5 * math.degrees(math.acos(17 / 89)), 4))

# In[2]: a coarse map, one row per orientation

h = np.linspace(0.02, 4.0, 60)
th = np.radians(np.arange(0, 181, 15))
rmap = acp.repulsion_map(force, h, th)
for t, row in zip(th, rmap.mask):
    print(f"{math.degrees(t):5.0f} " + "".join("#" if m else "." for m in row))
