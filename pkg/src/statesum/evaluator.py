"""Exact state-sum evaluation by facet-driven backtracking."""

from __future__ import annotations

from collections import defaultdict
from itertools import product
from typing import Mapping, Optional, Sequence

from ..catdata import CategoryData
from ..exactnum import ONE, ZERO, Accumulator, AlgNum, algnum_terms, multiply_terms
from ..models.reports import Evaluation
from ..simplicial.faces import Simplex, canonical_faces
from ..simplicial.triangulation import Triangulation
from ..utils.errors import ContractError, ResourceLimitError
from ..utils.logger import logger
from ..utils.parallel import run_sharded
from .coloring import Coloring


class _Step:
    """One facet of the search: which of its faces are already labeled."""

    __slots__ = ("facet", "bound_ids", "free_ids", "index")

    def __init__(self, facet, bound_ids, free_ids, index) -> None:
        self.facet = facet
        self.bound_ids = bound_ids
        self.free_ids = free_ids
        self.index = index


class _Plan:
    """
    Static search plan over the facets of a triangulation.

    Simplices of dimension <= n get integer ids; `fixed` ids are labeled up
    front, the rest are labeled by the first facet (in plan order) that
    contains them. Only `weighted` ids contribute Tr/mu.
    """

    def __init__(
        self,
        t: Triangulation,
        d: CategoryData,
        fixed: Mapping[Simplex, str],
        weighted: set[Simplex],
        trace_rows: bool = False,
    ) -> None:
        self.d = d
        n = d.n
        self.simplices: list[Simplex] = [s for k in range(n + 1) for s in t.faces(k)]
        self.ids = {s: i for i, s in enumerate(self.simplices)}
        self.initial: list[Optional[str]] = [None] * len(self.simplices)
        for s, name in fixed.items():
            self.initial[self.ids[s]] = name

        facet_faces = {f: [self.ids[x] for x in canonical_faces(f, n)] for f, _ in t.facets}
        bound = {self.ids[s] for s in fixed}
        remaining = [f for f, _ in t.facets]
        order = []
        # most-constrained facet first
        while remaining:
            best = max(remaining, key=lambda f: sum(1 for i in facet_faces[f] if i in bound))
            remaining.remove(best)
            order.append(best)
            bound.update(facet_faces[best])

        weights = {}
        for k in range(n + 1):
            for label in d.labels_of(k):
                weights[(k, label.name)] = algnum_terms(d.weight(label))
        self.weight_terms = weights
        self.weighted_ids = {self.ids[s] for s in weighted}

        cache: dict[tuple, dict] = {}
        self.steps: list[_Step] = []
        bound = {self.ids[s] for s in fixed}
        for f in order:
            positions = facet_faces[f]
            bound_pos = tuple(p for p, i in enumerate(positions) if i in bound)
            free_pos = tuple(p for p, i in enumerate(positions) if i not in bound)
            mask = tuple(positions[p] in self.weighted_ids for p in free_pos)
            signature = (bound_pos, free_pos, mask)
            if signature not in cache:
                cache[signature] = self._index(bound_pos, free_pos, mask, trace_rows)
            self.steps.append(
                _Step(
                    f,
                    tuple(positions[p] for p in bound_pos),
                    tuple(positions[p] for p in free_pos),
                    cache[signature],
                )
            )
            bound.update(positions)

    def _index(self, bound_pos, free_pos, mask, trace_rows) -> dict:
        """bound labels -> [(free labels, weight terms, row id)] over the closed F table."""
        d = self.d
        dims = [len(face) - 1 for face in canonical_faces(tuple(range(d.n + 2)), d.n)]
        index: dict[tuple, list] = defaultdict(list)
        for key, value in d.fsymbols.items():
            terms = algnum_terms(value)
            for p, weighted in zip(free_pos, mask):
                if weighted and terms:
                    terms = multiply_terms(terms, self.weight_terms[(dims[p], key[p])])
            row = d.row_of(key) if trace_rows else None
            index[tuple(key[p] for p in bound_pos)].append(
                (tuple(key[p] for p in free_pos), terms, row)
            )
        return dict(index)


class _Search:
    """Backtracking over a plan; leaves are grouped by the labels of `group_ids`."""

    def __init__(self, plan: _Plan, group_ids: Sequence[int] = (), trace_rows: bool = False):
        self.plan = plan
        self.group_ids = tuple(group_ids)
        self.trace_rows = trace_rows
        self.groups: dict[tuple, Accumulator] = {}
        self.visited = 0
        self.pruned = 0
        self.rows: set[str] = set()
        self._path_rows: list = []

    def first_candidates(self) -> list:
        step = self.plan.steps[0]
        assignment = self.plan.initial
        return step.index.get(tuple(assignment[i] for i in step.bound_ids), [])

    def run(self, first: Optional[list] = None) -> None:
        assignment = list(self.plan.initial)
        if not self.plan.steps:
            self._leaf(assignment, ((1, 0),))
            return
        candidates = self.first_candidates() if first is None else first
        self._expand(0, candidates, assignment, ((1, 0),))

    def _expand(self, depth, candidates, assignment, terms) -> None:
        step = self.plan.steps[depth]
        last = depth + 1 == len(self.plan.steps)
        for free_labels, weight, row in candidates:
            for i, name in zip(step.free_ids, free_labels):
                assignment[i] = name
            product_terms = multiply_terms(terms, weight) if weight else ()
            if self.trace_rows:
                self._path_rows.append(row)
            if last:
                self._leaf(assignment, product_terms)
            else:
                nxt = self.plan.steps[depth + 1]
                following = nxt.index.get(tuple(assignment[i] for i in nxt.bound_ids))
                if following:
                    self._expand(depth + 1, following, assignment, product_terms)
                else:
                    self.pruned += 1
            if self.trace_rows:
                self._path_rows.pop()

    def _leaf(self, assignment, terms) -> None:
        self.visited += 1
        group = tuple(assignment[i] for i in self.group_ids)
        acc = self.groups.get(group)
        if acc is None:
            acc = self.groups[group] = Accumulator()
        acc.add_terms(terms)
        if self.trace_rows:
            self.rows.update(r for r in self._path_rows if r is not None)

    def total(self) -> AlgNum:
        total = Accumulator()
        for acc in self.groups.values():
            total.merge(acc)
        return total.value()


def _check_inputs(
    t: Triangulation, d: CategoryData, boundary: Optional[Coloring | Mapping]
) -> dict[Simplex, str]:
    """
    Validate the triangulation and boundary coloring; returns the full boundary labels.

    Raises:
        ContractError: On dimension mismatch, an invalid triangulation or an
            invalid boundary coloring
    """
    if t.dim != d.n + 1:
        raise ContractError(
            f"Dataset of dimension {d.n} needs a {d.n + 1}-dimensional triangulation, "
            f"got dimension {t.dim}"
        )
    t.validate()
    coloring = boundary if isinstance(boundary, Coloring) else Coloring(boundary or {})
    on_boundary = t.boundary_simplices
    labels = dict(coloring.labels)
    for s, name in labels.items():
        if s not in on_boundary:
            raise ContractError(f"Simplex {s} is colored but is not on the boundary")
        if name not in d.label_names(len(s) - 1):
            raise ContractError(f"{name!r} is not a {len(s) - 1}-label (simplex {s})")
    vertex_labels = d.label_names(0)
    for s in sorted(on_boundary):
        if s in labels:
            continue
        if len(s) == 1 and len(vertex_labels) == 1:
            labels[s] = vertex_labels[0]
            continue
        raise ContractError(f"Boundary simplex {s} is not colored")
    return labels


def _interior(t: Triangulation, n: int) -> set[Simplex]:
    return {s for s in t.interior_simplices() if len(s) <= n + 1}


def evaluate(
    t: Triangulation,
    d: CategoryData,
    boundary: Optional[Coloring | Mapping] = None,
    trace_rows: bool = False,
) -> Evaluation:
    """
    Exact partition function of a triangulation with a fixed boundary coloring.

    Every interior k-simplex (k <= n) contributes Tr/mu of its label and every
    top simplex its F-symbol. Inadmissible boundaries give the value 0.

    Args:
        t: Oriented triangulation of dimension n+1
        d: Category data of dimension n
        boundary: Labels of all boundary simplices (vertices may be omitted
            when the dataset has a single 0-label)
        trace_rows: Record the table rows used by contributing colorings

    Returns:
        Evaluation with the exact value and search statistics
    """
    labels = _check_inputs(t, d, boundary)
    plan = _Plan(t, d, labels, _interior(t, d.n), trace_rows)
    search = _Search(plan, trace_rows=trace_rows)
    search.run()
    result = Evaluation(
        value=search.total(),
        colorings_visited=search.visited,
        pruned=search.pruned,
        rows_used=sorted(search.rows),
    )
    logger.debug(
        "statesum",
        "Evaluated state sum",
        context={"facets": len(t.facets), "visited": result.colorings_visited},
    )
    return result


def _shard_worker(payload) -> tuple[dict, int, int, list]:
    t, d, labels, shard, shards, trace_rows = payload
    plan = _Plan(t, d, labels, _interior(t, d.n), trace_rows)
    search = _Search(plan, trace_rows=trace_rows)
    if plan.steps:
        search.run(search.first_candidates()[shard::shards])
    elif shard == 0:
        search.run()
    return (
        {g: acc for g, acc in search.groups.items()},
        search.visited,
        search.pruned,
        sorted(search.rows),
    )


def evaluate_sharded(
    t: Triangulation,
    d: CategoryData,
    boundary: Optional[Coloring | Mapping] = None,
    shards: int = 1,
    jobs: Optional[int] = None,
    trace_rows: bool = False,
) -> Evaluation:
    """
    Same value as evaluate, with the first facet's candidates split round-robin into shards.

    Raises:
        ContractError: As evaluate, or if shards < 1
    """
    if shards < 1:
        raise ContractError(f"shards must be at least 1, got {shards}")
    labels = _check_inputs(t, d, boundary)
    payloads = [(t, d, labels, s, shards, trace_rows) for s in range(shards)]
    results = run_sharded(_shard_worker, payloads, jobs)
    total = Accumulator()
    visited = pruned = 0
    rows: set[str] = set()
    for groups, v, p, r in results:
        for acc in groups.values():
            total.merge(acc)
        visited += v
        pruned += p
        rows.update(r)
    return Evaluation(
        value=total.value(), colorings_visited=visited, pruned=pruned, rows_used=sorted(rows)
    )


class GroupedSums:
    """Interior sums keyed by the labels of a chosen list of simplices."""

    def __init__(self, simplices: list[Simplex], sums: dict[tuple, AlgNum], visited: int):
        self.simplices = simplices
        self.sums = sums
        self.visited = visited

    def coloring(self, key: tuple) -> Coloring:
        return Coloring(dict(zip(self.simplices, key)))

    def __len__(self) -> int:
        return len(self.sums)


def _grouped_worker(payload) -> tuple[dict, int]:
    t, d, fixed, group, shard, shards = payload
    plan = _Plan(t, d, fixed, _interior(t, d.n))
    search = _Search(plan, group_ids=[plan.ids[s] for s in group])
    if plan.steps:
        search.run(search.first_candidates()[shard::shards])
    elif shard == 0:
        search.run()
    return search.groups, search.visited


def evaluate_grouped(
    t: Triangulation,
    d: CategoryData,
    group: Sequence[Simplex],
    boundary: Optional[Coloring | Mapping] = None,
    jobs: Optional[int] = None,
) -> GroupedSums:
    """
    Interior-weighted sums grouped by the labels of `group`.

    Boundary simplices left uncolored are summed over without weight, which
    makes this the engine behind boundary-sum enumeration.
    """
    if t.dim != d.n + 1:
        raise ContractError(
            f"Dataset of dimension {d.n} needs a {d.n + 1}-dimensional triangulation"
        )
    t.validate()
    fixed = boundary.labels if isinstance(boundary, Coloring) else Coloring(boundary or {}).labels
    group = [tuple(sorted(s)) for s in group]
    shards = max(1, jobs or 1)
    payloads = [(t, d, fixed, group, s, shards) for s in range(shards)]
    merged: dict[tuple, Accumulator] = {}
    visited = 0
    for groups, v in run_sharded(_grouped_worker, payloads, jobs):
        visited += v
        for key, acc in groups.items():
            if key in merged:
                merged[key].merge(acc)
            else:
                merged[key] = acc
    sums = {key: merged[key].value() for key in sorted(merged)}
    return GroupedSums(group, sums, visited)


def enumerate_boundary_sums(
    t: Triangulation, d: CategoryData, jobs: Optional[int] = None
) -> GroupedSums:
    """Interior sum for every boundary coloring that has an admissible extension."""
    boundary = sorted(
        (s for s in t.boundary_simplices if len(s) <= d.n + 1),
        key=lambda s: (len(s), s),
    )
    return evaluate_grouped(t, d, boundary, jobs=jobs)


def evaluate_naive(
    t: Triangulation,
    d: CategoryData,
    boundary: Optional[Coloring | Mapping] = None,
    max_colorings: int = 10**6,
) -> AlgNum:
    """
    Brute-force oracle: every labeling of the interior simplices, AlgNum arithmetic throughout.

    Raises:
        ResourceLimitError: If the product space exceeds max_colorings
    """
    labels = _check_inputs(t, d, boundary)
    interior = sorted(_interior(t, d.n), key=lambda s: (len(s), s))
    choices = [d.label_names(len(s) - 1) for s in interior]
    space = 1
    for c in choices:
        space *= len(c)
    if space > max_colorings:
        raise ResourceLimitError(
            f"Naive enumeration would visit {space} colorings (cap {max_colorings})"
        )
    facets = [f for f, _ in t.facets]
    total = ZERO
    for assignment in product(*choices):
        full = dict(labels)
        full.update(zip(interior, assignment))
        value = ONE
        for s, name in zip(interior, assignment):
            value = value * d.weight(d.label(name, len(s) - 1))
        for f in facets:
            key = tuple(full[x] for x in canonical_faces(f, d.n))
            value = value * d.fsymbol(key)
            if not value:
                break
        total = total + value
    return total
