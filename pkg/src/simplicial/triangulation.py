"""Oriented combinatorial triangulations."""

from __future__ import annotations

from collections import defaultdict, deque
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..config.settings import Settings
from ..utils.errors import ContractError, LabelLookupError, ResourceLimitError
from .faces import Simplex, permutation_parity, sort_with_sign

Facet = tuple[Simplex, int]


def _induced_sign(facet_sign: int, position: int) -> int:
    """Sign of the face omitting the vertex at `position` (boundary formula)."""
    return facet_sign if position % 2 == 0 else -facet_sign


class Triangulation(BaseModel):
    """
    Oriented simplicial complex of a compact PL manifold.

    Facets are sorted vertex tuples with a sign relative to the sorted order.
    """

    model_config = ConfigDict(frozen=True)

    dim: int = Field(..., ge=-1, description="Top dimension m")
    facets: tuple[tuple[tuple[int, ...], int], ...] = Field(default=())

    @field_validator("facets", mode="before")
    @classmethod
    def normalize_facets(cls, v, info):
        """Sort each facet's vertices, folding the permutation into its sign."""
        dim = info.data.get("dim")
        normalized: dict[Simplex, int] = {}
        for item in v:
            vertices, orientation = item
            vertices = tuple(int(x) for x in vertices)
            if dim is not None and len(vertices) != dim + 1:
                raise ValueError(
                    f"Facet {vertices} has {len(vertices)} vertices, expected {dim + 1}"
                )
            if len(set(vertices)) != len(vertices):
                raise ValueError(f"Facet {vertices} repeats a vertex")
            if orientation not in (1, -1):
                raise ValueError(f"Facet {vertices} has sign {orientation}, expected +1/-1")
            ordered, parity = sort_with_sign(vertices)
            if ordered in normalized:
                raise ValueError(f"Facet {ordered} listed twice")
            normalized[ordered] = orientation * parity
        return tuple(sorted(normalized.items()))

    # Derived structure

    @cached_property
    def facet_signs(self) -> dict[Simplex, int]:
        return dict(self.facets)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f, _ in self.facets for v in f}))

    @cached_property
    def skeleton(self) -> dict[int, tuple[Simplex, ...]]:
        """k -> sorted k-simplices, for 0 <= k <= dim."""
        levels: dict[int, set] = {k: set() for k in range(self.dim + 1)}
        for facet, _ in self.facets:
            for k in range(self.dim + 1):
                levels[k].update(combinations(facet, k + 1))
        return {k: tuple(sorted(s)) for k, s in levels.items()}

    @cached_property
    def _simplex_set(self) -> frozenset:
        return frozenset(s for level in self.skeleton.values() for s in level)

    @cached_property
    def ridge_incidence(self) -> dict[Simplex, list[tuple[Simplex, int]]]:
        """(dim-1)-simplex -> [(facet, induced sign)] for each facet containing it."""
        incidence: dict[Simplex, list] = defaultdict(list)
        for facet, orientation in self.facets:
            for position in range(len(facet)):
                ridge = facet[:position] + facet[position + 1 :]
                incidence[ridge].append((facet, _induced_sign(orientation, position)))
        return dict(incidence)

    def faces(self, k: int) -> list[Simplex]:
        """All k-simplices in sorted order."""
        if k < 0 or k > self.dim:
            return []
        return list(self.skeleton[k])

    def simplices(self) -> list[Simplex]:
        """Every simplex, by dimension then lexicographically."""
        return [s for k in range(self.dim + 1) for s in self.skeleton[k]]

    def contains(self, simplex: Iterable[int]) -> bool:
        return tuple(sorted(simplex)) in self._simplex_set

    @property
    def f_vector(self) -> list[int]:
        return [len(self.skeleton[k]) for k in range(self.dim + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector))

    def boundary_facets(self) -> list[Facet]:
        """Ridges contained in exactly one facet, with induced orientation."""
        return sorted(
            (ridge, entries[0][1])
            for ridge, entries in self.ridge_incidence.items()
            if len(entries) == 1
        )

    def boundary(self) -> Triangulation:
        """The boundary as an oriented (dim-1)-complex (empty when closed)."""
        return Triangulation(dim=self.dim - 1, facets=self.boundary_facets())

    @cached_property
    def boundary_simplices(self) -> frozenset:
        """All simplices lying in the boundary."""
        result = set()
        for ridge, _ in self.boundary_facets():
            for k in range(len(ridge)):
                result.update(combinations(ridge, k + 1))
        return frozenset(result)

    def interior_simplices(self) -> list[Simplex]:
        return [s for s in self.simplices() if s not in self.boundary_simplices]

    def is_closed(self) -> bool:
        return not self.boundary_facets()

    def validate(self) -> None:
        """
        Check the manifold and orientation conditions.

        Raises:
            ContractError: If a ridge lies in more than two facets or two facets
                induce the same orientation on a shared ridge
        """
        for ridge, entries in self.ridge_incidence.items():
            if len(entries) > 2:
                raise ContractError(
                    f"Ridge {ridge} lies in {len(entries)} facets; expected at most 2"
                )
            if len(entries) == 2 and entries[0][1] == entries[1][1]:
                raise ContractError(
                    f"Facets {entries[0][0]} and {entries[1][0]} induce the same "
                    f"orientation on their shared ridge {ridge}"
                )

    def is_valid(self) -> bool:
        try:
            self.validate()
        except ContractError:
            return False
        return True

    # Local structure

    def _require(self, simplex: Iterable[int]) -> Simplex:
        key = tuple(sorted(simplex))
        if key not in self._simplex_set:
            raise LabelLookupError(f"Simplex {key} is not in the triangulation")
        return key

    def star(self, simplex: Iterable[int]) -> Triangulation:
        """Closed star: the facets containing the simplex."""
        key = self._require(simplex)
        chosen = [(f, s) for f, s in self.facets if set(key) <= set(f)]
        return Triangulation(dim=self.dim, facets=chosen)

    def link(self, simplex: Iterable[int]) -> Triangulation:
        """Link: facets containing the simplex with the simplex removed."""
        key = self._require(simplex)
        result = []
        for facet, orientation in self.facets:
            if not set(key) <= set(facet):
                continue
            rest = tuple(v for v in facet if v not in key)
            # orientation of [key, rest] relative to the sorted facet
            parity = permutation_parity(key + rest)
            result.append((rest, orientation * parity))
        return Triangulation(dim=self.dim - len(key), facets=result)

    # Constructions

    def flipped(self) -> Triangulation:
        return Triangulation(dim=self.dim, facets=[(f, -s) for f, s in self.facets])

    def relabeled(self, mapping: Mapping[int, int]) -> Triangulation:
        return Triangulation(
            dim=self.dim,
            facets=[(tuple(mapping[v] for v in f), s) for f, s in self.facets],
        )

    def _offset_other(self, other: Triangulation) -> Triangulation:
        offset = (max(self.vertices) + 1 if self.vertices else 0) - (
            min(other.vertices) if other.vertices else 0
        )
        return other.relabeled({v: v + offset for v in other.vertices})

    def disjoint_union(self, other: Triangulation) -> Triangulation:
        if other.dim != self.dim:
            raise ContractError(
                f"Cannot take the disjoint union of dimensions {self.dim} and {other.dim}"
            )
        shifted = self._offset_other(other)
        return Triangulation(dim=self.dim, facets=list(self.facets) + list(shifted.facets))

    def join(self, other: Triangulation) -> Triangulation:
        """Simplicial join; the facet sigma*tau carries sign s(sigma)*s(tau)."""
        shifted = self._offset_other(other)
        facets = [
            (f1 + f2, s1 * s2) for f1, s1 in self.facets for f2, s2 in shifted.facets
        ]
        return Triangulation(dim=self.dim + other.dim + 1, facets=facets)

    def cone(self, apex: int | None = None) -> Triangulation:
        """Cone over the complex with a new apex vertex (default max + 1)."""
        if apex is None:
            apex = max(self.vertices) + 1 if self.vertices else 0
        if apex in self.vertices:
            raise ContractError(f"Apex {apex} is already a vertex")
        return Triangulation(
            dim=self.dim + 1, facets=[(f + (apex,), s) for f, s in self.facets]
        )

    def is_isomorphic(self, other: Triangulation) -> bool:
        """
        Combinatorial isomorphism, orientation preserved up to a global flip.

        Raises:
            ResourceLimitError: If the vertex count exceeds the brute-force cap
        """
        if self.dim != other.dim or self.f_vector != other.f_vector:
            return False
        n = len(self.vertices)
        if n > Settings.MAX_ISOMORPHISM_VERTICES:
            raise ResourceLimitError(
                f"Isomorphism test is brute force and capped at "
                f"{Settings.MAX_ISOMORPHISM_VERTICES} vertices, got {n}"
            )

        def degrees(t: Triangulation) -> dict[int, int]:
            counts: dict[int, int] = defaultdict(int)
            for facet, _ in t.facets:
                for v in facet:
                    counts[v] += 1
            return counts

        mine, theirs = degrees(self), degrees(other)
        if sorted(mine.values()) != sorted(theirs.values()):
            return False
        target = other.facet_signs
        for image in permutations(other.vertices):
            mapping = dict(zip(self.vertices, image))
            if any(mine[v] != theirs[mapping[v]] for v in self.vertices):
                continue
            mapped = self.relabeled(mapping).facet_signs
            if mapped.keys() != target.keys():
                continue
            if mapped == target or all(mapped[f] == -target[f] for f in target):
                return True
        return False

    def to_text(self) -> str:
        lines = [f"dim {self.dim}"]
        for facet, orientation in self.facets:
            sign = "+" if orientation > 0 else "-"
            lines.append("simplex " + " ".join(str(v) for v in facet) + f" {sign}")
        return "\n".join(lines) + "\n"


def orient(dim: int, simplices: Sequence[Sequence[int]]) -> Triangulation:
    """
    Coherently orient an unoriented pseudo-manifold.

    Raises:
        ContractError: If the complex is not orientable
    """
    facets = [tuple(sorted(s)) for s in simplices]
    unsigned = Triangulation(dim=dim, facets=[(f, 1) for f in facets])
    by_ridge = unsigned.ridge_incidence
    signs: dict[Simplex, int] = {}

    for start in unsigned.facet_signs:
        if start in signs:
            continue
        signs[start] = 1
        queue = deque([start])
        while queue:
            facet = queue.popleft()
            for position in range(len(facet)):
                ridge = facet[:position] + facet[position + 1 :]
                mine = _induced_sign(signs[facet], position)
                for neighbour, _ in by_ridge[ridge]:
                    if neighbour == facet:
                        continue
                    their_position = next(
                        i for i, v in enumerate(neighbour) if v not in ridge
                    )
                    # the neighbour must induce the opposite sign
                    wanted = -mine if their_position % 2 == 0 else mine
                    if neighbour in signs:
                        if signs[neighbour] != wanted:
                            raise ContractError(
                                f"Complex is not orientable (conflict at ridge {ridge})"
                            )
                    else:
                        signs[neighbour] = wanted
                        queue.append(neighbour)
    return Triangulation(dim=dim, facets=[(f, signs[f]) for f in facets])


def parse_triangulation(
    text: str, source: str = "<text>"
) -> tuple[Triangulation, dict[Simplex, str]]:
    """
    Parse the triangulation text format.

    `dim m`, then one `simplex v0 .. vm [+|-]` line per facet (sign defaults
    to +), and optional `boundary-color v0 .. vk label` lines.

    Returns:
        The triangulation and the boundary colors keyed by sorted simplex

    Raises:
        ContractError: On malformed lines, naming the source and line number
    """
    dim: int | None = None
    facets: list[tuple[tuple[int, ...], int]] = []
    colors: dict[Simplex, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        directive, *args = line.split()
        where = f"{source}:{line_no}"
        try:
            if directive == "dim":
                dim = int(args[0])
            elif directive == "simplex":
                sign = -1 if args[-1] == "-" else 1
                vertices = args[:-1] if args[-1] in "+-" else args
                facets.append((tuple(int(v) for v in vertices), sign))
            elif directive == "boundary-color":
                if len(args) < 2:
                    raise ValueError("expected vertices and a label")
                colors[tuple(sorted(int(v) for v in args[:-1]))] = args[-1]
            else:
                raise ValueError(f"unknown directive {directive!r}")
        except (IndexError, ValueError) as exc:
            raise ContractError(f"{where}: {exc}") from exc
    if dim is None:
        raise ContractError(f"{source}: missing 'dim' line")
    try:
        t = Triangulation(dim=dim, facets=facets)
    except ValueError as exc:
        raise ContractError(f"{source}: {exc}") from exc
    return t, colors
