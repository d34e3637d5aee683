"""
The Casimir machine
===================

An axially polarizable ring attracted to an atom on its axis.  Rotating
the atom changes the force, so a cycle of moves and rotations can push the
ring up and let it come back.  Works are in units of E0.
"""

import annular_cp as acp
from annular_cp import machine

rep = acp.cycle_report()
print("h_e (torsion free)   =", rep.h_e)
print("h (force equilibrium) =", rep.h_force_equilibrium)
for (label, w), line in zip(zip(("A->B", "B->C", "C->D", "D->A"), rep.works), rep.line_works):
    print(f"{label}: W = {w: .8f}   line integral = {line: .8f}")
print("closure residual:", rep.closure_residual)

# stopping at the force equilibrium instead costs something on C -> D
print("W_cd at the force equilibrium:", rep.W_cd_at_force_equilibrium)

# In[1]: the two branches

for h, t, e in machine.energy_table([0.0, 0.25, 0.5, 1.0, 2.0]):
    print(f"h={h:4.2f} theta={t:5.3f}  E/E0={e: .6f}")
