"""Boundary colorings."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from ..catdata import CategoryData
from ..simplicial.faces import Simplex, canonical_faces


class Coloring:
    """A label for each of a set of simplices (sorted vertex tuples)."""

    __slots__ = ("labels",)

    def __init__(self, labels: Mapping[Sequence[int], str] | None = None) -> None:
        self.labels: dict[Simplex, str] = {
            tuple(sorted(s)): name for s, name in (labels or {}).items()
        }

    @classmethod
    def from_key(cls, facet: Sequence[int], key: Sequence[str]) -> Coloring:
        """Color the proper faces of a top simplex from an F-symbol key."""
        facet = tuple(sorted(facet))
        faces = canonical_faces(facet, len(facet) - 2)
        return cls(dict(zip(faces, key)))

    @classmethod
    def from_row(cls, d: CategoryData, row_id: str, facet: Sequence[int] | None = None) -> Coloring:
        """Color the boundary of one top simplex as the given table row does."""
        facet = tuple(range(d.n + 2)) if facet is None else facet
        return cls.from_key(facet, d.row(row_id).labels)

    @property
    def fixed(self) -> frozenset:
        return frozenset(self.labels)

    def get(self, simplex: Iterable[int]) -> str | None:
        return self.labels.get(tuple(sorted(simplex)))

    def restricted(self, simplices: Iterable[Simplex]) -> Coloring:
        keep = set(simplices)
        return Coloring({s: name for s, name in self.labels.items() if s in keep})

    def relabeled(self, mapping: Mapping[int, int]) -> Coloring:
        return Coloring({tuple(mapping[v] for v in s): name for s, name in self.labels.items()})

    def to_lines(self) -> list[str]:
        return [
            "boundary-color " + " ".join(str(v) for v in s) + f" {name}"
            for s, name in sorted(self.labels.items(), key=lambda item: (len(item[0]), item[0]))
        ]

    def render(self) -> str:
        """Compact 'v0v1..=label' listing in simplex order."""
        return " ".join(
            "-".join(str(v) for v in s) + "=" + name
            for s, name in sorted(self.labels.items(), key=lambda item: (len(item[0]), item[0]))
        )

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.labels == other.labels

    def __repr__(self) -> str:
        return f"Coloring({len(self.labels)} simplices)"


def coloring_from_key(facet: Sequence[int], key: Sequence[str]) -> Coloring:
    return Coloring.from_key(facet, key)
