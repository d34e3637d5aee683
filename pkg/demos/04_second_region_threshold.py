"""
A second region of repulsion
============================

A narrow radially polarizable annulus seen at nearly perpendicular
orientation shows a repulsive band detached from the plane.  It disappears
once the disc is wide enough.
"""

import math

import annular_cp as acp

for theta_deg in (90.0, 88.2, 87.3):
    b_star = acp.second_region_threshold(math.radians(theta_deg), tol=1e-6)
    print(f"theta={theta_deg:5.1f} deg  b*/a = {b_star:.5f}")

# In[1]: intervals on either side of the threshold at 90 degrees

for b in (1.2, 1.3):
    force = acp.family("disc", "radial", b).force
    iv = acp.repulsion_intervals(force, math.pi / 2)
    print(f"b/a={b}: {[(round(lo, 4), round(hi, 4)) for lo, hi in iv]}")
