"""
Completion of a representative F table from fusion and parity rules.

A dataset lists one row per family of labeled 4-simplices; the rules below
recover every admissible labeling. Triangle labels follow the fusion of the
edge labels, tetrahedron labels are fixed by their edges and faces, and the
F value only depends on the edge labels (the sector), so it is read off the
listed rows.
"""

from collections import Counter
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterator, Optional, Sequence

from ..exactnum import AlgNum
from ..simplicial.faces import local_faces
from ..utils.errors import DatasetError
from ..utils.logger import logger
from .category_data import FKey, FRow
from .symmetry import SymmetryAction, orbit

POINT = "pt"
UNIT, TAU, G = "1", "tau", "g"
EDGE_LABELS = (UNIT, TAU, G)

# sorted edge labels of a triangle -> its labels
TRIANGLE_LABELS: dict[tuple[str, ...], tuple[str, ...]] = {
    (UNIT, UNIT, UNIT): ("a+", "a-"),
    (UNIT, TAU, TAU): ("b_tau",),
    (UNIT, G, G): ("b_g0", "b_g1"),
    (G, TAU, TAU): ("c_0", "c_1"),
}

_BIT = {"a+": 0, "a-": 1, "b_g0": 0, "b_g1": 1, "c_0": 0, "c_1": 1}

# (tau edges, g edges) of a 4-simplex -> family
SECTORS: dict[tuple[int, int], str] = {
    (0, 0): "0",
    (0, 4): "1_g",
    (0, 6): "2_g",
    (4, 0): "1_tau",
    (4, 3): "2pm_gtau",
    (4, 4): "3_gtau",
    (6, 0): "2pm_tau",
    (6, 1): "1pm_gtau",
    (6, 2): "2_gtau",
    (6, 3): "4_gtau",
}

_TET_EDGES = tuple(combinations(range(4), 2))
_TET_FACES = tuple(combinations(range(4), 3))


def triangle_labels(edges: Sequence[str]) -> tuple[str, ...]:
    """Labels admissible on a triangle with the given edge labels; empty when none."""
    return TRIANGLE_LABELS.get(tuple(sorted(edges)), ())


def _corner(edges: list[tuple[int, int]]) -> Optional[int]:
    shared = set(range(4))
    for e in edges:
        shared &= set(e)
    return shared.pop() if len(shared) == 1 else None


@lru_cache(maxsize=None)
def tetrahedron_label(edges: tuple[str, ...], faces: tuple[str, ...]) -> Optional[str]:
    """
    The tetrahedron label fixed by its edges and faces, or None when inadmissible.

    Args:
        edges: Labels of edges 01 02 03 12 13 23
        faces: Labels of faces 012 013 023 123
    """
    edge = dict(zip(_TET_EDGES, edges))
    face = dict(zip(_TET_FACES, faces))
    for f, name in face.items():
        if name not in triangle_labels([edge[e] for e in combinations(f, 2)]):
            return None
    tau = [e for e in _TET_EDGES if edge[e] == TAU]
    g = [e for e in _TET_EDGES if edge[e] == G]

    if not tau and not g:
        odd = sum(_BIT[name] for name in faces)
        return f"A_{odd}" if odd % 2 == 0 else None

    if not tau and len(g) == 3:
        v = _corner(g)
        if v is None:
            return None
        crossings = sum(_BIT[face[f]] for f in _TET_FACES if v in f)
        if crossings % 2:
            return None
        opposite = next(f for f in _TET_FACES if v not in f)
        sign = "-" if _BIT[face[opposite]] else "+"
        return f"B_g{crossings // 2}{sign}"

    if not tau and len(g) == 4:
        ones = [e for e in _TET_EDGES if edge[e] == UNIT]
        crossed = [f for f in _TET_FACES if _BIT[face[f]]]
        if len(crossed) % 2:
            return None
        if not crossed:
            return "C_g0"
        if len(crossed) == 4:
            return "C_g3"
        through = {e for f in crossed for e in ones if set(e) <= set(f)}
        return "C_g2" if len(through) == 1 else "C_g1"

    if len(tau) == 3:
        v = _corner(tau)
        if v is None:
            return None
        inner = next(f for f in _TET_FACES if v not in f)
        if face[inner] in ("a+", "a-"):
            return "B_tau" + ("-" if _BIT[face[inner]] else "+")
        c_bits = [_BIT[face[f]] for f in _TET_FACES if v in f and face[f] in ("c_0", "c_1")]
        x = _BIT[face[inner]]
        if (x + sum(c_bits)) % 2:
            return None
        return "C_g1tau" if x else f"C_g{2 * c_bits[0]}tau"

    if len(tau) == 4:
        if not g:
            return "C_tau"
        # the two faces through each inner g edge
        sides = [[_BIT[face[f]] for f in _TET_FACES if set(e) <= set(f)] for e in g]
        if len(g) == 1:
            bits = sides[0]
            return f"B_g{bits[0]}tau" if bits[0] == bits[1] else None
        return "D_gtau" if all(sum(bits) % 2 for bits in sides) else None

    return None


def sector(edges: Sequence[str]) -> Optional[str]:
    """Family of a 4-simplex from its ten edge labels; None off the admissible sectors."""
    counts = Counter(edges)
    return SECTORS.get((counts[TAU], counts[G]))


def ising_keys() -> Iterator[tuple[FKey, str]]:
    """Every admissible labeled 4-simplex with its family, in canonical key order."""
    faces = local_faces(5, 3)
    edges = [f for f in faces if len(f) == 2]
    triangles = [f for f in faces if len(f) == 3]
    tets = [f for f in faces if len(f) == 4]
    edge_pos = {e: i for i, e in enumerate(edges)}
    tri_pos = {t: i for i, t in enumerate(triangles)}
    tet_edges = [[edge_pos[e] for e in combinations(t, 2)] for t in tets]
    tet_faces = [[tri_pos[f] for f in combinations(t, 3)] for t in tets]

    for edge_labels in product(EDGE_LABELS, repeat=len(edges)):
        options = [
            triangle_labels([edge_labels[edge_pos[e]] for e in combinations(t, 2)])
            for t in triangles
        ]
        if not all(options):
            continue
        family = sector(edge_labels)
        if family is None:
            continue
        for tri_labels in product(*options):
            tet_labels = []
            for es, fs in zip(tet_edges, tet_faces):
                label = tetrahedron_label(
                    tuple(edge_labels[i] for i in es), tuple(tri_labels[i] for i in fs)
                )
                if label is None:
                    break
                tet_labels.append(label)
            else:
                yield (POINT,) * 5 + edge_labels + tri_labels + tuple(tet_labels), family


def complete_ising(rows: Sequence[FRow], n: int) -> list[FRow]:
    """
    Listed rows plus one generated row per uncovered vertex-permutation orbit.

    Generated rows are named '<family>/<i>' and take the value shared by the
    listed rows of their family.

    Raises:
        DatasetError: If n is not 3, a listed row breaks the rules, two rows of
            one family disagree, or a family has no listed row
    """
    if n != 3:
        raise DatasetError(f"the ising completion needs n = 3, got {n}")
    generated = dict(ising_keys())
    values: dict[str, AlgNum] = {}
    for row in rows:
        family = generated.get(row.labels)
        if family is None:
            raise DatasetError(
                "row is not an admissible labeling under the fusion rules", row.row_id
            )
        if values.setdefault(family, row.value) != row.value:
            raise DatasetError(f"rows of family {family} have different values", row.row_id)
    missing = sorted(set(generated.values()) - set(values))
    if missing:
        raise DatasetError(f"no listed row for families {', '.join(missing)}")

    covered: set[FKey] = set()
    for row in rows:
        covered.update(key for _, key in orbit(row.labels, n, SymmetryAction.IDENTITY))
    completed = list(rows)
    counters: Counter = Counter()
    for key in sorted(generated):
        if key in covered:
            continue
        family = generated[key]
        counters[family] += 1
        completed.append(
            FRow(row_id=f"{family}/{counters[family]}", labels=key, value=values[family])
        )
        covered.update(k for _, k in orbit(key, n, SymmetryAction.IDENTITY))
    logger.debug(
        "catdata",
        "Completed F table",
        context={
            "listed": len(rows),
            "generated": len(completed) - len(rows),
            "keys": len(generated),
        },
    )
    return completed


COMPLETIONS: dict[str, Callable[[Sequence[FRow], int], list[FRow]]] = {
    "ising": complete_ising,
}


def complete_rows(rule: str, rows: Sequence[FRow], n: int) -> list[FRow]:
    """
    Apply a named completion.

    Raises:
        DatasetError: For an unknown rule or a failing completion
    """
    try:
        completion = COMPLETIONS[rule]
    except KeyError:
        raise DatasetError(
            f"unknown completion {rule!r} (choose from {', '.join(sorted(COMPLETIONS))})"
        )
    return completion(rows, n)
