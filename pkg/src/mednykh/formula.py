"""Mednykh's formula: homomorphism counts against the Euler-number state sum."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from ..catdata import load_semisimple1
from ..config.settings import Settings
from ..exactnum import AlgNum
from ..models.reports import MednykhReport
from ..simplicial import Triangulation
from ..statesum import evaluate
from ..utils.errors import ContractError, ResourceLimitError
from ..utils.logger import logger
from .groups import GroupTable, IrrepDims


def _check_genus(genus: int) -> None:
    if genus < 0:
        raise ContractError(f"genus must be non-negative, got {genus}")


def _check_cap(g: GroupTable, genus: int) -> None:
    tuples = g.order ** (2 * genus)
    if tuples > Settings.MAX_HOM_TUPLES:
        raise ResourceLimitError(
            f"{g.order}^{2 * genus} = {tuples} tuples exceeds "
            f"MAX_HOM_TUPLES={Settings.MAX_HOM_TUPLES}"
        )


def count_homs(g: GroupTable, genus: int) -> int:
    """
    Number of tuples (a1, b1, ..., ag, bg) whose commutator product is the identity.

    Pairs are folded in one at a time: after each pair we hold, for every
    element x, how many prefixes multiply to x. This counts exactly the
    tuples a direct enumeration would visit.

    Raises:
        ResourceLimitError: If |G|^(2 genus) exceeds MAX_HOM_TUPLES
    """
    _check_genus(genus)
    _check_cap(g, genus)
    n = g.order
    pair_counts = [0] * n
    for row in g.commutator_table:
        for c in row:
            pair_counts[c] += 1

    prefix = [0] * n
    prefix[g.identity] = 1
    for _ in range(genus):
        nxt = [0] * n
        for x, count in enumerate(prefix):
            if not count:
                continue
            row = g.mul[x]
            for c, ways in enumerate(pair_counts):
                if ways:
                    nxt[row[c]] += count * ways
        prefix = nxt
    return prefix[g.identity]


def count_homs_brute(g: GroupTable, genus: int) -> int:
    """Direct enumeration of all 2*genus tuples."""
    _check_genus(genus)
    _check_cap(g, genus)
    comm = g.commutator_table
    total = 0
    for values in product(range(g.order), repeat=2 * genus):
        x = g.identity
        for i in range(genus):
            x = g.mul[x][comm[values[2 * i]][values[2 * i + 1]]]
        if x == g.identity:
            total += 1
    return total


def conjugacy_classes(g: GroupTable) -> list[frozenset[int]]:
    inv = g.inverse
    seen: set[int] = set()
    classes = []
    for x in range(g.order):
        if x in seen:
            continue
        cls = frozenset(g.mul[g.mul[h][x]][inv[h]] for h in range(g.order))
        seen |= cls
        classes.append(cls)
    return classes


def euler_of_genus(genus: int) -> int:
    return 2 - 2 * genus


def state_sum_side(dims: IrrepDims, genus: int) -> Fraction:
    """Sum of d^(2 - 2 genus) over the irreps, exactly."""
    _check_genus(genus)
    e = euler_of_genus(genus)
    return sum((Fraction(d) ** e for d in dims.dims), Fraction(0))


def hom_side(g: GroupTable, genus: int, homs: int | None = None) -> Fraction:
    """#hom * |G|^(E - 1)."""
    homs = count_homs(g, genus) if homs is None else homs
    return homs * Fraction(g.order) ** (euler_of_genus(genus) - 1)


def mednykh_check(g: GroupTable, dims: IrrepDims, genus: int) -> bool:
    return hom_side(g, genus) == state_sum_side(dims, genus)


def mednykh_report(g: GroupTable, dims: IrrepDims, genus: int, name: str = "") -> MednykhReport:
    """Both sides of the formula for one group and genus."""
    homs = count_homs(g, genus)
    report = MednykhReport(
        group=name or g.name or f"order-{g.order}",
        order=g.order,
        genus=genus,
        homs=homs,
        lhs=hom_side(g, genus, homs),
        rhs=state_sum_side(dims, genus),
    )
    logger.info(
        "mednykh",
        f"Checked group {report.group} at genus {genus}",
        context={"homs": homs, "holds": report.holds},
    )
    return report


def triangulated_check(dims: IrrepDims | list[int], t: Triangulation) -> bool:
    """
    Whether the semisimple 1+1 state sum on a closed surface equals sum d^chi.

    Raises:
        ContractError: If t is not a closed surface
    """
    values = dims.dims if isinstance(dims, IrrepDims) else tuple(dims)
    if t.dim != 2 or not t.is_closed():
        raise ContractError("triangulated_check needs a closed triangulated surface")
    chi = t.euler_characteristic()
    expected = AlgNum(sum((Fraction(d) ** chi for d in values), Fraction(0)))
    return evaluate(t, load_semisimple1(values)).value == expected
