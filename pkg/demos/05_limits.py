"""
Limits: thin disc, wide disc, near and far
==========================================
"""

import math

import annular_cp as acp
from annular_cp.closed_forms import limiting_energy

theta, h = math.radians(40), 0.8

# a disc of width eps a with lambda = sigma / (b - a) approaches the ring
ring = acp.ring_energy_e1("radial", 1.0, h, theta)
for eps in (1e-2, 1e-3, 1e-4):
    disc = acp.disc_energy_closed("radial", 1.0, 1.0 + eps, h, theta, lam=1.0 / eps)
    print(f"eps={eps:.0e}  (disc - ring)/ring = {(disc - ring) / ring: .3e}")

# and a very wide one approaches the apertured plate
plate = acp.plate_energy_closed("radial", 1.0, h, theta)
print("b=1e4a:", (acp.disc_energy_closed("radial", 1.0, 1e4, h, theta) - plate) / plate)

# In[1]: far field in reduced units

for geometry, scale, fn in (("ring", acp.ring_scale(), acp.ring_energy_e1),
                            ("plate", acp.plate_scale(), acp.plate_energy_closed)):
    for mode in ("radial", "axial"):
        full = fn(mode, 1.0, 100.0, theta) / scale
        far = limiting_energy(geometry, mode, 100.0, theta)
        print(f"{geometry} {mode} at h=100a: full={full:.6e} far={far:.6e}")
