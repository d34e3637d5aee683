"""
Frames, tensors and the quadrature oracle
=========================================

An atom sits on the axis of a ring of radius a at height h.  Its
polarizability is diagonal in a body frame (e1, e2, e3) tilted by theta from
the axis.  The oracle integrates the retarded dipole kernel around the ring
and should agree with the closed forms to rounding.
"""

import math

import numpy as np

import annular_cp as acp

# the body frame is orthonormal and right-handed for any angles
e1, e2, e3 = acp.eigenbasis(theta=0.7, beta=0.3, phi_s=1.1)
print("Gram matrix:\n", np.round(np.array([e1, e2, e3]) @ np.array([e1, e2, e3]).T, 15))
print("e1 x e2 . e3 =", np.dot(np.cross(e1, e2), e3))

# a uniaxial atom along e1, tilted 30 degrees
atom = acp.AtomPolarizability(1.0, 0.0, 0.0, theta=math.radians(30))
print("atom tensor:\n", np.round(acp.atom_tensor(atom), 12))

# ring polarizable only along the radius
ring = acp.AnnularPolarizability.radial(1.0)

# In[1]: closed form against oracle along a few heights

for h in (0.0, 0.5, 1.0, 2.0, 5.0):
    closed = acp.ring_energy_closed(atom, ring, 1.0, h)
    oracle = acp.ring_energy_quadrature(atom, ring, 1.0, h)
    scale = acp.norm_scale(atom, ring, 1.0, h)
    print(f"h={h:4.1f}  closed={closed: .12e}  oracle={oracle: .12e}  err/S={abs(closed - oracle) / scale:.1e}")

# The same integral with the non-retarded London kernel, for comparison of
# shapes only (no closed form is claimed for it).
print("London/CP ratio at h=1:",
      acp.ring_energy_quadrature(atom, ring, 1.0, 1.0, kernel=acp.LONDON)
      / acp.ring_energy_quadrature(atom, ring, 1.0, 1.0))
