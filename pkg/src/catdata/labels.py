"""Labels and labeled simplices."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from ..simplicial.faces import Simplex, local_face_index, local_faces, permutation_parity
from ..utils.errors import ContractError


class Label(BaseModel):
    """An indecomposable k-morphism attached to k-simplices."""

    model_config = ConfigDict(frozen=True)

    dim: int = Field(..., ge=0, description="Dimension k of the simplices it labels")
    name: str = Field(..., min_length=1)

    def __str__(self) -> str:
        return self.name


class OrderedLabeledSimplex:
    """
    A simplex on vertices 0..dim with a label on every face.

    Labels are stored in canonical face order (by size, then lexicographic),
    top face last. The top label may be None: an (n+1)-simplex carries an
    F-symbol rather than a label, and `admissible` asks for a missing top.
    """

    __slots__ = ("dim", "labels")

    def __init__(self, dim: int, labels: Sequence[Optional[str]]) -> None:
        expected = len(local_faces(dim + 1, dim))
        if len(labels) != expected:
            raise ContractError(
                f"A {dim}-simplex has {expected} faces, got {len(labels)} labels"
            )
        if any(label is None for label in labels[:-1]):
            raise ContractError("Only the top face may be left unlabeled")
        self.dim = dim
        self.labels = tuple(labels)

    @classmethod
    def from_key(cls, dim: int, key: Sequence[str]) -> OrderedLabeledSimplex:
        """Build from the labels of the proper faces; the top stays unset."""
        return cls(dim, tuple(key) + (None,))

    @classmethod
    def from_mapping(
        cls, dim: int, mapping: Mapping[Simplex, str]
    ) -> OrderedLabeledSimplex:
        faces = local_faces(dim + 1, dim)
        missing = [f for f in faces[:-1] if f not in mapping]
        if missing:
            raise ContractError(f"Faces {missing} are not labeled")
        return cls(dim, [mapping.get(f) for f in faces])

    @property
    def top(self) -> Optional[str]:
        return self.labels[-1]

    def key(self) -> tuple[str, ...]:
        """Labels of the proper faces: the F-symbol key for a top-dimensional simplex."""
        return self.labels[:-1]

    def face_label(self, face: Iterable[int]) -> Optional[str]:
        index = local_face_index(self.dim + 1, self.dim)
        try:
            return self.labels[index[tuple(sorted(face))]]
        except KeyError:
            raise ContractError(f"{tuple(face)} is not a face of a {self.dim}-simplex")

    def restrict(self, face: Iterable[int]) -> OrderedLabeledSimplex:
        """The labeled sub-simplex on `face`, renumbered 0..k."""
        face = tuple(sorted(face))
        k = len(face) - 1
        index = local_face_index(self.dim + 1, self.dim)
        return OrderedLabeledSimplex(
            k,
            [self.labels[index[tuple(face[i] for i in sub)]] for sub in local_faces(k + 1, k)],
        )

    def permuted(
        self,
        perm: Sequence[int],
        mirror: Optional[Callable[[int, str], str]] = None,
    ) -> OrderedLabeledSimplex:
        """
        Relabel vertex i as perm[i].

        `mirror(k, name)` is applied to the label of every k-face whose
        vertex order is reversed by an odd permutation.
        """
        n_vertices = self.dim + 1
        if sorted(perm) != list(range(n_vertices)):
            raise ContractError(f"{tuple(perm)} is not a permutation of 0..{self.dim}")
        inverse = [0] * n_vertices
        for i, p in enumerate(perm):
            inverse[p] = i
        index = local_face_index(n_vertices, self.dim)
        result = []
        for face in local_faces(n_vertices, self.dim):
            source = tuple(sorted(inverse[v] for v in face))
            label = self.labels[index[source]]
            if mirror is not None and label is not None and len(face) > 1:
                if permutation_parity([perm[v] for v in source]) < 0:
                    label = mirror(len(face) - 1, label)
            result.append(label)
        return OrderedLabeledSimplex(self.dim, result)

    def consistency_errors(self, known: Mapping[int, Iterable[str]]) -> list[str]:
        """Faces whose label is not a known label of the face's dimension."""
        names = {k: set(v) for k, v in known.items()}
        errors = []
        for face, label in zip(local_faces(self.dim + 1, self.dim), self.labels):
            if label is None:
                continue
            k = len(face) - 1
            if label not in names.get(k, set()):
                errors.append(f"face {face} carries {label!r}, not a {k}-label")
        return errors

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedLabeledSimplex):
            return NotImplemented
        return self.dim == other.dim and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.dim, self.labels))

    def __repr__(self) -> str:
        return f"OrderedLabeledSimplex({self.dim}, {' '.join(str(x) for x in self.labels)})"
