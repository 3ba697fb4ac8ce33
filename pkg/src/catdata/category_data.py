"""Spherical category data: labels, traces, global dimensions and closed F-symbol tables."""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from types import MappingProxyType
from typing import Mapping, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from ..exactnum import ZERO, AlgNum, render
from ..simplicial.faces import local_faces, sub_face_positions
from ..utils.errors import ContractError, DatasetError, LabelLookupError
from ..utils.logger import logger
from .labels import Label, OrderedLabeledSimplex
from .symmetry import SymmetryAction, orbit

FKey = tuple[str, ...]


class FRow(BaseModel):
    """One table row: an ordered labeled (n+1)-simplex and its normalized F value."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    row_id: str = Field(..., min_length=1)
    labels: tuple[str, ...]
    value: AlgNum
    ftilde: Optional[AlgNum] = None
    surface: Optional[str] = None


class ClosureConflict(BaseModel):
    """Two rows closing onto one key with different values."""

    model_config = ConfigDict(frozen=True)

    first_row: str
    second_row: str
    key: tuple[str, ...]


class CategoryData:
    """
    Immutable dataset for a spherical n-category.

    The F table is the closure of the rows under every vertex permutation of
    the (n+1)-simplex; keys absent from the closure are inadmissible.
    """

    def __init__(
        self,
        n: int,
        labels: Mapping[int, Sequence[str]],
        traces: Mapping[Label, AlgNum],
        globaldims: Mapping[Label, AlgNum],
        rows: Sequence[FRow],
        unit: Optional[str] = None,
        symmetry: SymmetryAction = SymmetryAction.IDENTITY,
        source: str = "<memory>",
    ) -> None:
        if n < 1:
            raise DatasetError(f"Category dimension must be at least 1, got {n}")
        self.n = n
        self.unit = unit
        self.symmetry = SymmetryAction(symmetry)
        self.source = source
        self._labels: dict[int, tuple[Label, ...]] = {
            k: tuple(Label(dim=k, name=name) for name in labels.get(k, ())) for k in range(n + 1)
        }
        for k, names in self._labels.items():
            seen = [label.name for label in names]
            if len(set(seen)) != len(seen):
                raise DatasetError(f"Duplicate {k}-label names in {seen}")
        self._by_name = {(lab.dim, lab.name): lab for ls in self._labels.values() for lab in ls}

        for label in self._by_name.values():
            if label not in traces:
                raise DatasetError(f"No trace for {label.dim}-label {label.name}")
            if label not in globaldims:
                raise DatasetError(f"No global dimension for {label.dim}-label {label.name}")
        self._traces = dict(traces)
        self._globaldims = dict(globaldims)
        if unit is not None and (1, unit) not in self._by_name:
            raise DatasetError(f"Unit {unit!r} is not a 1-label")

        self._rows = tuple(rows)
        width = len(local_faces(n + 2, n))
        known = {k: [lab.name for lab in ls] for k, ls in self._labels.items()}
        for row in self._rows:
            if len(row.labels) != width:
                raise DatasetError(
                    f"expected {width} face labels, got {len(row.labels)}", row.row_id
                )
            errors = OrderedLabeledSimplex.from_key(n + 1, row.labels).consistency_errors(known)
            if errors:
                raise DatasetError("; ".join(errors), row.row_id)
        ids = [row.row_id for row in self._rows]
        if len(set(ids)) != len(ids):
            raise DatasetError(f"Duplicate row ids in {self.source}")

        self._close()
        logger.debug(
            "catdata",
            "Closed F table",
            context={
                "source": self.source,
                "rows": len(self._rows),
                "keys": len(self._fsymbols),
                "symmetry": self.symmetry.value,
            },
        )

    def _close(self) -> None:
        fsymbols: dict[FKey, AlgNum] = {}
        row_of: dict[FKey, str] = {}
        conflicts: list[ClosureConflict] = []
        clashed: set[FKey] = set()
        # a listed key belongs to its own row
        listed = [(row, [row.labels]) for row in self._rows]
        permuted = [
            (row, (key for _, key in orbit(row.labels, self.n, self.symmetry)))
            for row in self._rows
        ]
        for row, keys in listed + permuted:
            for key in keys:
                if key in fsymbols:
                    if fsymbols[key] != row.value and key not in clashed:
                        clashed.add(key)
                        conflicts.append(
                            ClosureConflict(
                                first_row=row_of[key], second_row=row.row_id, key=key
                            )
                        )
                    continue
                fsymbols[key] = row.value
                row_of[key] = row.row_id
        self._fsymbols = fsymbols
        self._row_of = row_of
        self._conflicts = tuple(conflicts)

        # k -> proper-face labels -> admissible top labels
        tops: dict[int, dict[FKey, set[str]]] = {k: defaultdict(set) for k in range(self.n + 1)}
        for key in fsymbols:
            for k in range(self.n + 1):
                for face in combinations(range(self.n + 2), k + 1):
                    sub = tuple(key[p] for p in sub_face_positions(self.n + 2, self.n, face))
                    tops[k][sub[:-1]].add(sub[-1])
        order = {k: {lab.name: i for i, lab in enumerate(ls)} for k, ls in self._labels.items()}
        self._admissible = {
            k: {b: tuple(sorted(names, key=order[k].__getitem__)) for b, names in table.items()}
            for k, table in tops.items()
        }

    # Lookups

    def labels_of(self, k: int) -> list[Label]:
        return list(self._labels.get(k, ()))

    def label_names(self, k: int) -> list[str]:
        return [lab.name for lab in self._labels.get(k, ())]

    def label(self, name: str, k: Optional[int] = None) -> Label:
        """
        Look up a label by name (and dimension, when names repeat).

        Raises:
            LabelLookupError: If no label matches
        """
        if k is not None:
            try:
                return self._by_name[(k, name)]
            except KeyError:
                raise LabelLookupError(f"Unknown {k}-label {name!r}")
        matches = [lab for (_, nm), lab in self._by_name.items() if nm == name]
        if not matches:
            raise LabelLookupError(f"Unknown label {name!r}")
        if len(matches) > 1:
            raise LabelLookupError(f"Label name {name!r} is ambiguous; give its dimension")
        return matches[0]

    def _resolve(self, label: Label | str) -> Label:
        if isinstance(label, Label):
            if (label.dim, label.name) not in self._by_name:
                raise LabelLookupError(f"Unknown {label.dim}-label {label.name!r}")
            return label
        return self.label(label)

    def trace(self, label: Label | str) -> AlgNum:
        return self._traces[self._resolve(label)]

    def globaldim(self, label: Label | str) -> AlgNum:
        return self._globaldims[self._resolve(label)]

    def weight(self, label: Label | str) -> AlgNum:
        """
        Tr/mu, the state-sum factor of an interior simplex.

        Raises:
            ContractError: If the global dimension is zero
        """
        resolved = self._resolve(label)
        mu = self._globaldims[resolved]
        if not mu:
            raise ContractError(
                f"zero global dimension for {resolved.dim}-label {resolved.name}"
            )
        return self._traces[resolved] / mu

    @property
    def fsymbols(self) -> Mapping[FKey, AlgNum]:
        return MappingProxyType(self._fsymbols)

    def fsymbol(self, s: OrderedLabeledSimplex | Sequence[str]) -> AlgNum:
        """Normalized F value of a fully labeled (n+1)-simplex; ZERO when inadmissible."""
        if isinstance(s, OrderedLabeledSimplex):
            if s.dim != self.n + 1:
                raise ContractError(
                    f"F-symbols live on {self.n + 1}-simplices, got a {s.dim}-simplex"
                )
            key = s.key()
        else:
            key = tuple(s)
        return self._fsymbols.get(key, ZERO)

    def admissible(self, partial: OrderedLabeledSimplex) -> list[Label]:
        """Top labels compatible with the labeled boundary of a k-simplex (k <= n)."""
        if partial.dim > self.n:
            raise ContractError(
                f"Labels exist up to dimension {self.n}, got a {partial.dim}-simplex"
            )
        names = self.admissible_tops(partial.dim, partial.key())
        return [self._by_name[(partial.dim, name)] for name in names]

    def admissible_tops(self, k: int, boundary: Sequence[str]) -> tuple[str, ...]:
        return self._admissible.get(k, {}).get(tuple(boundary), ())

    def boundary_patterns(self, k: int) -> Mapping[FKey, tuple[str, ...]]:
        """Every admissible proper-face pattern of a k-simplex with its top labels."""
        return MappingProxyType(self._admissible.get(k, {}))

    # Rows

    @property
    def rows(self) -> tuple[FRow, ...]:
        return self._rows

    def row(self, row_id: str) -> FRow:
        for row in self._rows:
            if row.row_id == row_id:
                return row
        raise LabelLookupError(f"No table row {row_id!r}")

    def row_of(self, key: OrderedLabeledSimplex | Sequence[str]) -> Optional[str]:
        """Id of the table row whose closure produced the key."""
        if isinstance(key, OrderedLabeledSimplex):
            key = key.key()
        return self._row_of.get(tuple(key))

    @property
    def conflicts(self) -> tuple[ClosureConflict, ...]:
        return self._conflicts

    # Derived datasets

    def _replace(self, **changes) -> CategoryData:
        params = dict(
            n=self.n,
            labels={k: [lab.name for lab in ls] for k, ls in self._labels.items()},
            traces=self._traces,
            globaldims=self._globaldims,
            rows=self._rows,
            unit=self.unit,
            symmetry=self.symmetry,
            source=self.source,
        )
        params.update(changes)
        return CategoryData(**params)

    def with_fvalue(self, row_id: str, value: AlgNum) -> CategoryData:
        """Copy with one row's F value replaced."""
        self.row(row_id)
        rows = [
            r.model_copy(update={"value": AlgNum.from_value(value)}) if r.row_id == row_id else r
            for r in self._rows
        ]
        return self._replace(rows=rows, source=f"{self.source} [{row_id} edited]")

    def with_globaldim(self, name: str, value: AlgNum, k: Optional[int] = None) -> CategoryData:
        label = self.label(name, k)
        dims = dict(self._globaldims)
        dims[label] = AlgNum.from_value(value)
        return self._replace(globaldims=dims, source=f"{self.source} [mu({name}) edited]")

    def with_trace(self, name: str, value: AlgNum, k: Optional[int] = None) -> CategoryData:
        label = self.label(name, k)
        traces = dict(self._traces)
        traces[label] = AlgNum.from_value(value)
        return self._replace(traces=traces, source=f"{self.source} [Tr({name}) edited]")

    def with_symmetry(self, symmetry: SymmetryAction) -> CategoryData:
        return self._replace(symmetry=SymmetryAction(symmetry))

    def to_text(self) -> str:
        """Serialize in the dataset text format."""
        lines = [f"n {self.n}"]
        if self.unit is not None:
            lines.append(f"unit {self.unit}")
        lines.append(f"symmetry {self.symmetry.value}")
        for k in range(self.n + 1):
            lines.append(" ".join([f"labels {k}"] + self.label_names(k)))
        for k in range(self.n + 1):
            for label in self._labels[k]:
                lines.append(f"trace {label.name} {render(self._traces[label])}")
                lines.append(f"gdim {label.name} {render(self._globaldims[label])}")
        for row in self._rows:
            lines.append(f"frow {row.row_id} {' '.join(row.labels)} {render(row.value)}")
        for row in self._rows:
            if row.ftilde is not None:
                lines.append(f"ftilde {row.row_id} {render(row.ftilde)}")
            if row.surface is not None:
                lines.append(f"surface {row.row_id} {row.surface}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return (
            f"CategoryData(n={self.n}, source={self.source!r}, rows={len(self._rows)}, "
            f"keys={len(self._fsymbols)})"
        )


def trace(d: CategoryData, label: Label | str) -> AlgNum:
    return d.trace(label)


def globaldim(d: CategoryData, label: Label | str) -> AlgNum:
    return d.globaldim(label)


def fsymbol(d: CategoryData, s: OrderedLabeledSimplex | Sequence[str]) -> AlgNum:
    return d.fsymbol(s)


def admissible(d: CategoryData, partial: OrderedLabeledSimplex) -> list[Label]:
    return d.admissible(partial)

