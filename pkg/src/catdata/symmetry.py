"""Vertex-permutation action on labeled top simplices and the symmetry closure."""

from enum import Enum
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from ..simplicial.faces import local_face_index, local_faces, permutation_parity


class SymmetryAction(str, Enum):
    """Candidate actions; they differ in which labels an odd permutation mirrors."""

    IDENTITY = "identity"
    SWAP_BG = "swap_bg"
    SWAP_C = "swap_c"
    SWAP_BG_C = "swap_bg_c"

    @property
    def mirror(self) -> dict[str, str]:
        return _MIRRORS[self]


_BG = {"b_g0": "b_g1", "b_g1": "b_g0"}
_C = {"c_0": "c_1", "c_1": "c_0"}

_MIRRORS: dict[SymmetryAction, dict[str, str]] = {
    SymmetryAction.IDENTITY: {},
    SymmetryAction.SWAP_BG: _BG,
    SymmetryAction.SWAP_C: _C,
    SymmetryAction.SWAP_BG_C: {**_BG, **_C},
}

# the mirrored labels live on (n-1)-simplices
MIRRORED_CODIMENSION = 1


@lru_cache(maxsize=None)
def _permutation_table(n: int, perm: tuple[int, ...]) -> tuple[tuple[int, int, bool], ...]:
    """
    For each canonical face of the permuted top simplex: (source position, face dim, odd).

    Keys cover the faces up to dimension n of an (n+1)-simplex.
    """
    n_vertices = n + 2
    inverse = [0] * n_vertices
    for i, p in enumerate(perm):
        inverse[p] = i
    index = local_face_index(n_vertices, n)
    table = []
    for face in local_faces(n_vertices, n):
        source = tuple(sorted(inverse[v] for v in face))
        odd = permutation_parity([perm[v] for v in source]) < 0
        table.append((index[source], len(face) - 1, odd))
    return tuple(table)


def permuted_key(
    key: tuple[str, ...], n: int, perm: tuple[int, ...], action: SymmetryAction
) -> tuple[str, ...]:
    """The F-symbol key obtained by relabeling vertex i as perm[i]."""
    mirror = action.mirror
    mirrored_dim = n - MIRRORED_CODIMENSION
    result = []
    for source, dim, odd in _permutation_table(n, perm):
        label = key[source]
        if odd and dim == mirrored_dim and mirror:
            label = mirror.get(label, label)
        result.append(label)
    return tuple(result)


def orbit(
    key: tuple[str, ...], n: int, action: SymmetryAction
) -> Iterator[tuple[tuple[int, ...], tuple[str, ...]]]:
    """(permutation, key) for every vertex permutation of the top simplex."""
    for perm in permutations(range(n + 2)):
        yield perm, permuted_key(key, n, perm, action)


def boundary_orbit_representative(boundary: tuple[str, ...], k: int) -> tuple[str, ...]:
    """
    Smallest relabeling of a k-simplex boundary under vertex permutations.

    `boundary` lists the labels of the proper faces in canonical order.
    """
    faces = local_faces(k + 1, k - 1) if k > 0 else ()
    index = {face: i for i, face in enumerate(faces)}
    best = None
    for perm in permutations(range(k + 1)):
        inverse = [0] * (k + 1)
        for i, p in enumerate(perm):
            inverse[p] = i
        image = tuple(
            boundary[index[tuple(sorted(inverse[v] for v in face))]] for face in faces
        )
        if best is None or image < best:
            best = image
    return best if best is not None else ()
