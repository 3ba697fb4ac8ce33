"""Pachner-move consistency equations: generation, exact verification, spot checks."""

from __future__ import annotations

import random
from collections import Counter
from typing import Iterator, Optional

from pydantic import BaseModel, ConfigDict

from ..catdata import CategoryData, SymmetryAction
from ..config.settings import Settings
from ..exactnum import ZERO, AlgNum, render
from ..models.reports import (
    CalibrationReport,
    CalibrationRow,
    PachnerFailure,
    PachnerReport,
    format_move,
)
from ..simplicial import PachnerMove, Triangulation, boundary_of_simplex, pachner_split
from ..statesum import Coloring, enumerate_boundary_sums, evaluate, evaluate_grouped
from ..utils.errors import ContractError
from ..utils.logger import logger


class PachnerEquation(BaseModel):
    """Both sides of one move for one shared boundary coloring."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    move: tuple[int, int]
    simplices: tuple[tuple[int, ...], ...]
    boundary: tuple[str, ...]
    lhs: AlgNum
    rhs: AlgNum

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def coloring(self) -> Coloring:
        return Coloring(dict(zip(self.simplices, self.boundary)))


def split_for(d: CategoryData, k: int) -> PachnerMove:
    """
    The (k, m+2-k) split of the boundary of an (m+1)-simplex, m = n+1.

    Raises:
        ContractError: If k is outside 1..m+1
    """
    m = d.n + 1
    if not 1 <= k <= m + 1:
        raise ContractError(f"Move index k must be in 1..{m + 1} for n = {d.n}, got {k}")
    return pachner_split(m, k)


def side_triangulations(m: int, k: int) -> tuple[Triangulation, Triangulation, Triangulation]:
    """Old side, new side and their common boundary for the (k, m+2-k) split."""
    mv = pachner_split(m, k)
    old, new = mv.old_side(), mv.new_side()
    return old, new, old.boundary()


def generate(
    d: CategoryData, k: int, jobs: Optional[int] = None
) -> Iterator[PachnerEquation]:
    """
    One equation per boundary coloring admissible on at least one side.

    Equations come out ordered by boundary coloring.
    """
    mv = split_for(d, k)
    old = enumerate_boundary_sums(mv.old_side(), d, jobs)
    new = enumerate_boundary_sums(mv.new_side(), d, jobs)
    if old.simplices != new.simplices:
        raise ContractError("The two sides of the split do not share a boundary")
    simplices = tuple(old.simplices)
    for key in sorted(set(old.sums) | set(new.sums)):
        yield PachnerEquation(
            move=mv.type,
            simplices=simplices,
            boundary=key,
            lhs=old.sums.get(key, ZERO),
            rhs=new.sums.get(key, ZERO),
        )


def _failure(d: CategoryData, mv: PachnerMove, eq: PachnerEquation) -> PachnerFailure:
    coloring = eq.coloring()
    rows: set[str] = set()
    for side in (mv.old_side(), mv.new_side()):
        rows.update(evaluate(side, d, coloring, trace_rows=True).rows_used)
    return PachnerFailure(
        move=format_move(mv.type),
        boundary=coloring.render(),
        lhs=eq.lhs,
        rhs=eq.rhs,
        rows=sorted(rows),
    )


def verify(
    d: CategoryData,
    k: int,
    max_failures: Optional[int] = None,
    jobs: Optional[int] = None,
) -> PachnerReport:
    """Check every equation of one move type by exact equality."""
    limit = Settings.MAX_FAILURES_REPORTED if max_failures is None else max_failures
    mv = split_for(d, k)
    total = passed = failed = 0
    failures: list[PachnerFailure] = []
    for eq in generate(d, k, jobs):
        total += 1
        if eq.holds:
            passed += 1
            continue
        failed += 1
        if len(failures) < limit:
            failures.append(_failure(d, mv, eq))
    report = PachnerReport(
        move=format_move(mv.type),
        dataset=d.source,
        total=total,
        passed=passed,
        failed=failed,
        first_failures=failures,
    )
    log = logger.info if report.ok else logger.warn
    log(
        "pachner",
        f"Verified move {report.move}",
        context={"dataset": d.source, "total": total, "failed": failed},
    )
    return report


def spot_check(
    d: CategoryData,
    k: int,
    sample_size: Optional[int] = None,
    seed: Optional[int] = None,
    jobs: Optional[int] = None,
) -> PachnerReport:
    """
    Verify a seeded sample of equations.

    Boundary colorings are drawn from those admissible on the side with fewer
    facets; the other side is evaluated with that boundary fixed.
    """
    size = Settings.SPOT_CHECK_SAMPLE if sample_size is None else sample_size
    seed = Settings.DEFAULT_SEED if seed is None else seed
    if size < 0:
        raise ContractError(f"sample_size must be non-negative, got {size}")
    mv = split_for(d, k)
    old_side, new_side = mv.old_side(), mv.new_side()
    small_is_old = len(old_side.facets) <= len(new_side.facets)
    small, large = (old_side, new_side) if small_is_old else (new_side, old_side)

    report = PachnerReport(
        move=format_move(mv.type), dataset=d.source, sample_size=size, seed=seed
    )
    if size == 0:
        return report
    sums = enumerate_boundary_sums(small, d, jobs)
    keys = sorted(sums.sums)
    rng = random.Random(seed)
    picked = sorted(rng.sample(range(len(keys)), min(size, len(keys))))
    failures: list[PachnerFailure] = []
    for i in picked:
        key = keys[i]
        coloring = sums.coloring(key)
        here = sums.sums[key]
        there = evaluate(large, d, coloring).value
        lhs, rhs = (here, there) if small_is_old else (there, here)
        report.total += 1
        if lhs == rhs:
            report.passed += 1
            continue
        report.failed += 1
        if len(failures) < Settings.MAX_FAILURES_REPORTED:
            eq = PachnerEquation(
                move=mv.type, simplices=tuple(sums.simplices), boundary=key, lhs=lhs, rhs=rhs
            )
            failures.append(_failure(d, mv, eq))
    report.first_failures = failures
    logger.info(
        "pachner",
        f"Spot-checked move {report.move}",
        context={
            "dataset": d.source,
            "sample": report.total,
            "failed": report.failed,
            "seed": seed,
        },
    )
    return report


def sampled_boundaries(
    d: CategoryData, k: int, sample_size: int, seed: int
) -> list[tuple[str, ...]]:
    """The boundary colorings spot_check would visit."""
    mv = split_for(d, k)
    old_side, new_side = mv.old_side(), mv.new_side()
    small = old_side if len(old_side.facets) <= len(new_side.facets) else new_side
    keys = sorted(enumerate_boundary_sums(small, d).sums)
    rng = random.Random(seed)
    return [keys[i] for i in sorted(rng.sample(range(len(keys)), min(sample_size, len(keys))))]


class EquationCount(BaseModel):
    move: str
    raw: int
    nonzero: int


def count_equations(d: CategoryData, k: int, jobs: Optional[int] = None) -> EquationCount:
    """Boundary colorings with an admissible extension, and those with a nonzero side."""
    raw = nonzero = 0
    for eq in generate(d, k, jobs):
        raw += 1
        if eq.lhs or eq.rhs:
            nonzero += 1
    return EquationCount(move=format_move((k, d.n + 3 - k)), raw=raw, nonzero=nonzero)


def compare_complementary(d: CategoryData, k: int, jobs: Optional[int] = None) -> bool:
    """
    True when the k split and the complementary split give the same equations, sides swapped.

    The two splits are related by reversing the vertex order, so the
    comparison is on the multisets of (lhs, rhs) values.
    """
    m = d.n + 1
    ours = Counter((render(e.lhs), render(e.rhs)) for e in generate(d, k, jobs))
    theirs = Counter((render(e.rhs), render(e.lhs)) for e in generate(d, m + 2 - k, jobs))
    return ours == theirs


class ConeGroup(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    apex: str
    edges: str
    value: AlgNum


class ConeBreakdown(BaseModel):
    """Cone-side sums grouped by apex label and cone-edge labels."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    row_id: str
    groups: list[ConeGroup]
    total: AlgNum
    expected: AlgNum

    @property
    def holds(self) -> bool:
        return self.total == self.expected

    def render(self) -> str:
        lines = [f"cone over row {self.row_id}"]
        for g in self.groups:
            lines.append(f"  apex {g.apex}, edges {g.edges}: {render(g.value)}")
        lines.append(f"  total {render(self.total)}, F {render(self.expected)}")
        return "\n".join(lines)


def _edge_multiset(labels: tuple[str, ...]) -> str:
    counts = Counter(labels)
    return "+".join(f"{counts[name]}x{name}" for name in sorted(counts))


def cone_breakdown(d: CategoryData, row_id: str) -> ConeBreakdown:
    """
    Split the cone side of the (1, m+1) move into groups.

    Each group is shown with the apex weight divided out. The weighted total
    equals F(row) when the move holds.
    """
    facet = tuple(range(d.n + 2))
    cone = boundary_of_simplex(d.n + 1).cone()
    apex = max(cone.vertices)
    group = [(apex,)] + [(v, apex) for v in facet]
    coloring = Coloring.from_row(d, row_id, facet)
    grouped = evaluate_grouped(cone, d, group, boundary=coloring)

    buckets: dict[tuple[str, str], AlgNum] = {}
    total = ZERO
    for key, value in grouped.sums.items():
        apex_label, edges = key[0], key[1:]
        bucket = (apex_label, _edge_multiset(edges))
        scaled = value / d.weight(d.label(apex_label, 0))
        buckets[bucket] = buckets.get(bucket, ZERO) + scaled
        total = total + value
    groups = [ConeGroup(apex=a, edges=e, value=v) for (a, e), v in sorted(buckets.items())]
    expected = d.row(row_id).value
    return ConeBreakdown(row_id=row_id, groups=groups, total=total, expected=expected)


def calibrate_symmetry(
    d: CategoryData, moves: Optional[list[int]] = None, jobs: Optional[int] = None
) -> CalibrationReport:
    """Equation totals and failures under every candidate symmetry action."""
    moves = moves or list(range(1, (d.n + 3) // 2 + 1))
    rows = []
    for action in SymmetryAction:
        candidate = d.with_symmetry(action)
        totals: dict[str, int] = {}
        failures: dict[str, int] = {}
        for k in moves:
            report = verify(candidate, k, max_failures=0, jobs=jobs)
            totals[report.move] = report.total
            failures[report.move] = report.failed
        checksum = {format_move(mv): c for mv, c in Settings.PACHNER_CHECKSUM.items()}
        matches = d.n == 3 and all(totals.get(m) == c for m, c in checksum.items())
        rows.append(
            CalibrationRow(
                symmetry=action.value, totals=totals, failures=failures, matches_checksum=matches
            )
        )
        logger.info("pachner", f"Calibrated symmetry {action.value}", context={"totals": totals})
    return CalibrationReport(dataset=d.source, rows=rows)
