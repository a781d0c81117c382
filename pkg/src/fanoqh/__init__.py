"""Exact quantum cohomology of selected Fano varieties: rings, semisimplicity, deformation obstructions."""

from .qring import QRing, RingValidationError, SpecializedAlgebra
from .rings import (
    bundled_ring,
    complete_intersection,
    coadjoint_ring,
    grassmannian2,
    projective_space,
)
from .tableio import dumps, load_ring, loads, save_ring

__version__ = "0.1.0"

__all__ = [
    "QRing",
    "RingValidationError",
    "SpecializedAlgebra",
    "bundled_ring",
    "complete_intersection",
    "coadjoint_ring",
    "grassmannian2",
    "projective_space",
    "dumps",
    "loads",
    "load_ring",
    "save_ring",
]
