"""Canonical face enumeration and permutation parity."""

from functools import lru_cache
from itertools import combinations
from typing import Sequence

Simplex = tuple[int, ...]


def permutation_parity(sequence: Sequence[int]) -> int:
    """Return +1 if sorting the sequence takes an even number of swaps, else -1."""
    items = list(sequence)
    parity = 1
    seen = [False] * len(items)
    order = sorted(range(len(items)), key=items.__getitem__)
    for start in range(len(items)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            parity = -parity
    return parity


def sort_with_sign(vertices: Sequence[int]) -> tuple[Simplex, int]:
    """Sorted vertex tuple and the parity of the sorting permutation."""
    return tuple(sorted(vertices)), permutation_parity(vertices)


@lru_cache(maxsize=None)
def local_faces(n_vertices: int, max_dim: int) -> tuple[Simplex, ...]:
    """
    Faces of the simplex on 0..n_vertices-1 up to max_dim.

    Order is by size, then lexicographic: the column order of facet keys.
    """
    faces: list[Simplex] = []
    for size in range(1, min(max_dim, n_vertices - 1) + 2):
        faces.extend(combinations(range(n_vertices), size))
    return tuple(faces)


@lru_cache(maxsize=None)
def local_face_index(n_vertices: int, max_dim: int) -> dict[Simplex, int]:
    return {face: i for i, face in enumerate(local_faces(n_vertices, max_dim))}


def canonical_faces(simplex: Simplex, max_dim: int) -> list[Simplex]:
    """Faces of a sorted simplex in canonical order, as global vertex tuples."""
    return [
        tuple(simplex[i] for i in face)
        for face in local_faces(len(simplex), max_dim)
    ]


def faces_of(simplex: Simplex, k: int) -> list[Simplex]:
    """All k-dimensional faces of a sorted simplex."""
    return list(combinations(simplex, k + 1))


@lru_cache(maxsize=None)
def sub_face_positions(n_vertices: int, max_dim: int, face: Simplex) -> tuple[int, ...]:
    """
    Positions, in the canonical key of the big simplex, of every face of `face`.

    The result lists the faces of `face` in its own canonical order, so a key
    restricted through these positions is the key of the sub-simplex.
    """
    index = local_face_index(n_vertices, max_dim)
    sub_dim = min(max_dim, len(face) - 1)
    return tuple(
        index[tuple(face[i] for i in sub)] for sub in local_faces(len(face), sub_dim)
    )
