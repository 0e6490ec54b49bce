"""LDPC parity-check matrices from Singer orbits of lines in PG(n-1, q)."""

from .galois import FieldElement, FieldSpec, FieldTower, field_create, tower_create, tower_for
from .projgeom import ProjectiveSpace, count_lines, count_points, projective_space
from .orbits import Orbit, Spread, StarterSet, decompose_lines, desarguesian_spread, starter_set
from .pcm import assemble, ldpc_check, pg1_matrix, pg2_matrix
from .sparse import SparseBinaryMatrix

__all__ = [
    "FieldElement", "FieldSpec", "FieldTower", "field_create", "tower_create", "tower_for",
    "ProjectiveSpace", "count_lines", "count_points", "projective_space",
    "Orbit", "Spread", "StarterSet", "decompose_lines", "desarguesian_spread", "starter_set",
    "assemble", "ldpc_check", "pg1_matrix", "pg2_matrix", "SparseBinaryMatrix",
]
