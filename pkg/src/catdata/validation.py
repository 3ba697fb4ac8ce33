"""Dataset invariant checks."""

from collections import Counter, defaultdict
from itertools import combinations

from ..exactnum import ONE, ZERO
from ..models.reports import ValidationReport
from ..simplicial.faces import local_faces, sub_face_positions
from ..utils.logger import logger
from .category_data import CategoryData
from .symmetry import boundary_orbit_representative


def _nonzero_checks(d: CategoryData, violations: list[str]) -> None:
    for k in range(d.n + 1):
        for label in d.labels_of(k):
            if not d.trace(label):
                violations.append(f"zero trace: {k}-label {label.name}")
            if not d.globaldim(label):
                violations.append(f"zero global dimension: {k}-label {label.name}")


def _structure_checks(d: CategoryData, violations: list[str]) -> None:
    if d.n == 3 and len(d.labels_of(0)) != 1:
        violations.append(f"expected exactly one 0-label, found {len(d.labels_of(0))}")
    for label in d.labels_of(d.n - 1):
        mu = d.globaldim(label)
        if mu != ONE:
            violations.append(
                f"global dimension of {d.n - 1}-label {label.name} is {mu}, expected 1"
            )


def _squared_norm_sum(d: CategoryData, labels) -> object:
    total = ZERO
    for label in labels:
        mu = d.globaldim(label)
        if mu:
            total = total + d.trace(label) * d.trace(label) / mu
    return total


def _bimodules(d: CategoryData, alpha: str) -> list:
    """Triangle labels admissible on an edge pattern {unit, alpha, alpha}."""
    edge_slots = [i for i, f in enumerate(local_faces(3, 1)) if len(f) == 2]
    wanted = Counter([d.unit, alpha, alpha])
    names = set()
    for boundary, tops in d.boundary_patterns(2).items():
        if Counter(boundary[i] for i in edge_slots) == wanted:
            names.update(tops)
    return [d.label(name, 2) for name in d.label_names(2) if name in names]


def _globaldim_identity(d: CategoryData, violations: list[str]) -> None:
    if d.unit is None or d.n < 2:
        return
    expected = _squared_norm_sum(d, d.labels_of(1))
    for vertex in d.labels_of(0):
        if d.globaldim(vertex) != expected:
            violations.append(
                f"global-dimension identity fails for 0-label {vertex.name}: "
                f"mu = {d.globaldim(vertex)}, sum over 1-labels = {expected}"
            )
    for alpha in d.labels_of(1):
        total = _squared_norm_sum(d, _bimodules(d, alpha.name))
        if d.globaldim(alpha) != total:
            violations.append(
                f"global-dimension identity fails for 1-label {alpha.name}: "
                f"mu = {d.globaldim(alpha)}, sum over bimodules = {total}"
            )


def _orbit_checks(d: CategoryData, violations: list[str]) -> None:
    """A k-label (0 < k < n) must sit on one boundary pattern up to vertex permutation."""
    n_vertices = d.n + 2
    first_row: dict[tuple, str] = {}
    patterns: dict[tuple[int, str], list[tuple]] = defaultdict(list)
    for row in d.rows:
        for k in range(1, d.n):
            for face in combinations(range(n_vertices), k + 1):
                sub = tuple(row.labels[p] for p in sub_face_positions(n_vertices, d.n, face))
                rep = boundary_orbit_representative(sub[:-1], k)
                marker = (k, sub[-1], rep)
                if marker not in first_row:
                    first_row[marker] = row.row_id
                    patterns[(k, sub[-1])].append(rep)
    for (k, name), reps in patterns.items():
        if len(reps) > 1:
            rows = [first_row[(k, name, rep)] for rep in reps]
            violations.append(
                f"{k}-label {name} sits on boundary patterns from rows "
                f"{' and '.join(rows)} that are not related by a vertex permutation"
            )


def _usage_checks(d: CategoryData, violations: list[str]) -> None:
    used = defaultdict(set)
    faces = local_faces(d.n + 2, d.n)
    for row in d.rows:
        for face, name in zip(faces, row.labels):
            used[len(face) - 1].add(name)
    for k in range(d.n + 1):
        for name in d.label_names(k):
            if name not in used[k]:
                violations.append(f"{k}-label {name} is never used by any row")


def validate(d: CategoryData) -> ValidationReport:
    """Check every dataset invariant and collect the violations."""
    violations: list[str] = []
    notes: list[str] = []
    _nonzero_checks(d, violations)
    _structure_checks(d, violations)
    _globaldim_identity(d, violations)
    _orbit_checks(d, violations)
    _usage_checks(d, violations)
    for conflict in d.conflicts:
        violations.append(
            f"rows {conflict.first_row} and {conflict.second_row} assign different "
            f"values to the same labeled simplex"
        )

    shared = sum(1 for tops in d.boundary_patterns(d.n).values() if len(tops) > 1)
    if shared:
        notes.append(
            f"{shared} ordered {d.n}-simplex boundaries carry more than one {d.n}-label"
        )
    report = ValidationReport(dataset=d.source, violations=violations, notes=notes)
    logger.info(
        "catdata",
        "Validated dataset",
        context={"dataset": d.source, "violations": len(violations), "notes": len(notes)},
    )
    return report
