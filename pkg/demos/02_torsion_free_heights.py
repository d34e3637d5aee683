"""
Torsion-free heights
====================

For an e1 atom every energy here has the form A(h) + B(h) cos 2 theta.
Where B vanishes the atom feels no torque.
"""

import annular_cp as acp

cases = [("ring", "radial"), ("ring", "axial"), ("ring", "iso"),
         ("plate", "iso"), ("plate", "radial"), ("plate", "axial")]

for geometry, mode in cases:
    fam = acp.family(geometry, mode)
    numeric = acp.torsion_free_heights(fam.energy)
    exact = acp.torsion_free_analytic(f"{geometry}-{mode}")
    print(f"{geometry:5s} {mode:6s}  roots h/a = {[round(x, 6) for x in numeric]}"
          f"  quartic = {[round(x, 6) for x in exact]}")

# In[1]: annular discs interpolate between ring and plate

# the outer root runs off to a few times b, so the scan has to follow it

for b in (1.01, 1.5, 2.0, 5.0, 20.0, 100.0):
    roots = acp.torsion_free_heights(acp.family("disc", "radial", b).energy, u_max=5 * b, n=4000)
    print(f"radial disc b/a={b:6.2f}: {[round(x, 4) for x in roots]}")
