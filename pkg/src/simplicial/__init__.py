"""Oriented simplicial complexes and Pachner moves."""

from .complexes import boundary_of_simplex, cone_over, join_spheres, torus7
from .faces import (
    Simplex,
    canonical_faces,
    faces_of,
    local_face_index,
    local_faces,
    permutation_parity,
    sort_with_sign,
    sub_face_positions,
)
from .pachner_move import (
    PachnerMove,
    apply_move,
    find_locations,
    interior_counts,
    pachner_split,
)
from .triangulation import Triangulation, orient, parse_triangulation

__all__ = [
    "PachnerMove",
    "Simplex",
    "Triangulation",
    "apply_move",
    "boundary_of_simplex",
    "canonical_faces",
    "cone_over",
    "faces_of",
    "find_locations",
    "interior_counts",
    "join_spheres",
    "local_face_index",
    "local_faces",
    "orient",
    "pachner_split",
    "parse_triangulation",
    "permutation_parity",
    "sort_with_sign",
    "sub_face_positions",
    "torus7",
]
