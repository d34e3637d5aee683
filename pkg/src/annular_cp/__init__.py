"""Casimir-Polder interaction of an anisotropic atom with rings, annular discs and apertured plates."""

__version__ = "0.1.0"

from .analysis import (Cos2Split, EnergyFamily, RepulsionMap, critical_angles, family,
                       repulsion_intervals, repulsion_map, second_region_threshold,
                       torsion_free_analytic, torsion_free_heights)
from .closed_forms import (disc_energy_closed, force_numeric, limiting_energy, plate_energy_closed,
                           plate_scale, ring_energy_closed, ring_energy_component, ring_energy_e1,
                           ring_force_closed, ring_scale, torque_numeric)
from .electrostatics import (PointDipole, PolarizedRing, es_energy_axial, es_energy_quadrature,
                             es_force_axial, es_torque_axial)
from .geometry import AnnularDisc, AperturedPlate, Ring
from .kernels import (CASIMIR_POLDER, LONDON, DyadicKernel, atom_atom_cp, disc_energy_quadrature,
                      norm_scale, plate_energy_quadrature, ring_energy_quadrature)
from .machine import CycleReport, cycle_report, machine_energy, machine_force, machine_torque
from .quadrature import QuadratureError, QuadratureSettings
from .tensors import AnnularPolarizability, AtomPolarizability, atom_tensor, eigenbasis
