"""Annular geometries; the atom always sits on the symmetry axis at height h."""

from __future__ import annotations

import math
from dataclasses import dataclass


def _check_radius(a):
    if not (math.isfinite(a) and a > 0):
        raise ValueError(f"inner radius must be positive and finite, got a={a!r}")


@dataclass(frozen=True)
class Ring:
    a: float
    h: float = 0.0

    def __post_init__(self):
        _check_radius(self.a)

    @property
    def u(self):
        return self.h / self.a


@dataclass(frozen=True)
class AnnularDisc:
    a: float
    b: float
    h: float = 0.0

    def __post_init__(self):
        _check_radius(self.a)
        if not self.b > self.a:
            raise ValueError(f"annular disc needs b > a, got a={self.a!r}, b={self.b!r}")

    @property
    def u(self):
        return self.h / self.a


@dataclass(frozen=True)
class AperturedPlate:
    a: float
    h: float = 0.0

    def __post_init__(self):
        _check_radius(self.a)

    @property
    def u(self):
        return self.h / self.a

    @property
    def b(self):
        return math.inf


Geometry = Ring | AnnularDisc | AperturedPlate
