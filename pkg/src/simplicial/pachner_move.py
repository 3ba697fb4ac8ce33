"""Bistellar (Pachner) moves: splits of the boundary of a simplex and their application."""

from __future__ import annotations

from itertools import permutations
from typing import Mapping

from pydantic import BaseModel, ConfigDict, Field

from ..utils.errors import ContractError, PreconditionError
from ..utils.logger import logger
from .complexes import boundary_of_simplex
from .faces import Simplex, sort_with_sign
from .triangulation import Triangulation


class PachnerMove(BaseModel):
    """
    A (k, m+2-k) move on m-dimensional triangulations.

    Both sides are balls over the vertices 0..m+1 of the boundary of an
    (m+1)-simplex. The new side carries the orientation whose boundary
    matches the old side's, so old and new are interchangeable.
    """

    model_config = ConfigDict(frozen=True)

    dim: int = Field(..., ge=1)
    old_facets: tuple[tuple[tuple[int, ...], int], ...]
    new_facets: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def type(self) -> tuple[int, int]:
        return len(self.old_facets), len(self.new_facets)

    def old_side(self) -> Triangulation:
        return Triangulation(dim=self.dim, facets=self.old_facets)

    def new_side(self) -> Triangulation:
        return Triangulation(dim=self.dim, facets=self.new_facets)

    def old_vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f, _ in self.old_facets for v in f}))

    def inverse(self) -> PachnerMove:
        return PachnerMove(dim=self.dim, old_facets=self.new_facets, new_facets=self.old_facets)


def pachner_split(m: int, k: int) -> PachnerMove:
    """
    Split the boundary of the (m+1)-simplex into the first k facets and the rest.

    Facets are indexed by their omitted vertex.

    Raises:
        ContractError: If k is outside 1..m+1
    """
    if not 1 <= k <= m + 1:
        raise ContractError(f"Pachner split needs 1 <= k <= {m + 1}, got k={k}")
    sphere = boundary_of_simplex(m + 1)
    by_omitted = sorted(
        sphere.facets, key=lambda item: next(v for v in range(m + 2) if v not in item[0])
    )
    old = by_omitted[:k]
    new = [(f, -s) for f, s in by_omitted[k:]]
    return PachnerMove(dim=m, old_facets=tuple(old), new_facets=tuple(new))


def _image(facet: Simplex, location: Mapping[int, int]) -> tuple[Simplex, int]:
    return sort_with_sign([location[v] for v in facet])


def apply_move(
    t: Triangulation, location: Mapping[int, int], mv: PachnerMove
) -> Triangulation:
    """
    Replace the image of the old side by the new side.

    `location` maps the old side's vertices to vertices of t. Vertices that
    only occur on the new side get fresh ids max+1, max+2, ...

    Raises:
        PreconditionError: If the old side does not embed at the location
    """
    if t.dim != mv.dim:
        raise PreconditionError(
            f"Move of dimension {mv.dim} cannot act on a {t.dim}-dimensional triangulation"
        )
    missing = [v for v in mv.old_vertices() if v not in location]
    if missing:
        raise PreconditionError(f"Location does not map move vertices {missing}")
    images = [location[v] for v in mv.old_vertices()]
    if len(set(images)) != len(images):
        raise PreconditionError(f"Location {dict(location)} is not injective")

    signs = t.facet_signs
    orientation = None
    removed: set[Simplex] = set()
    for facet, sign in mv.old_facets:
        target, parity = _image(facet, location)
        if target not in signs:
            raise PreconditionError(f"Facet {target} is not in the triangulation")
        relative = signs[target] * parity * sign
        if orientation is None:
            orientation = relative
        elif relative != orientation:
            raise PreconditionError(
                f"Facet {target} is embedded with inconsistent orientation"
            )
        removed.add(target)

    # interior simplices of the old side must not touch the rest of t
    old_side = mv.old_side()
    rest = [f for f, _ in t.facets if f not in removed]
    for simplex in old_side.interior_simplices():
        image = tuple(sorted(location[v] for v in simplex))
        for facet in rest:
            if set(image) <= set(facet):
                raise PreconditionError(
                    f"Interior simplex {image} of the old side is shared with facet {facet}"
                )

    mapping = dict(location)
    fresh = max(t.vertices) + 1 if t.vertices else 0
    for v in sorted({v for f, _ in mv.new_facets for v in f}):
        if v not in mapping:
            mapping[v] = fresh
            fresh += 1

    # new interior simplices must not already exist
    for simplex in mv.new_side().interior_simplices():
        image = tuple(sorted(mapping[v] for v in simplex))
        if t.contains(image):
            raise PreconditionError(
                f"Interior simplex {image} of the new side already exists"
            )

    added = []
    for facet, sign in mv.new_facets:
        target, parity = _image(facet, mapping)
        added.append((target, orientation * parity * sign))
    kept = [(f, s) for f, s in t.facets if f not in removed]
    result = Triangulation(dim=t.dim, facets=kept + added)
    logger.debug(
        "simplicial",
        f"Applied {mv.type} move",
        context={"removed": len(removed), "added": len(added)},
    )
    return result


def find_locations(t: Triangulation, mv: PachnerMove) -> list[dict[int, int]]:
    """Every distinct legal embedding of the move's old side, deterministically ordered."""
    old = mv.old_facets
    first, _ = old[0]
    seen: set[frozenset] = set()
    locations: list[dict[int, int]] = []
    extra = [v for v in mv.old_vertices() if v not in first]

    for target, _ in t.facets:
        for image in permutations(target):
            location = dict(zip(first, image))
            if extra:
                candidates = _extra_vertex_candidates(t, mv, location, extra)
                if candidates is None:
                    continue
                location.update(candidates)
            if len(set(location.values())) != len(location):
                continue
            footprint = frozenset(_image(f, location)[0] for f, _ in old)
            if footprint in seen:
                continue
            try:
                apply_move(t, location, mv)
            except PreconditionError:
                continue
            seen.add(footprint)
            locations.append(location)
    return locations


def _extra_vertex_candidates(
    t: Triangulation, mv: PachnerMove, location: dict[int, int], extra: list[int]
) -> dict[int, int] | None:
    """Fix the images of old-side vertices outside the first facet via ridge neighbours."""
    found: dict[int, int] = {}
    first = mv.old_facets[0][0]
    for facet, _ in mv.old_facets[1:]:
        unknown = [v for v in facet if v not in location and v not in found]
        if not unknown:
            continue
        known = [v for v in facet if v in location or v in found]
        ridge_image = tuple(sorted((location | found)[v] for v in known))
        if len(ridge_image) != len(facet) - 1:
            return None
        neighbours = [
            f for f, _ in t.ridge_incidence.get(ridge_image, []) if f != _image(first, location)[0]
        ]
        if len(neighbours) != 1:
            return None
        (vertex,) = set(neighbours[0]) - set(ridge_image)
        found[unknown[0]] = vertex
    if set(found) != set(extra):
        return None
    return found


def interior_counts(side: Triangulation) -> list[int]:
    """Interior simplex counts per dimension of a move side."""
    interior = side.interior_simplices()
    return [sum(1 for s in interior if len(s) == k + 1) for k in range(side.dim + 1)]

