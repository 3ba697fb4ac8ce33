"""Closed-surface values, pairings and Gram matrices of connected types."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from ..config.settings import Settings
from ..exactnum import ONE, AlgMatrix, AlgNum, is_psd, kernel_basis, pow2_quarter, rank
from ..models.reports import GramReport
from ..utils.errors import ContractError, ResourceLimitError
from ..utils.logger import logger
from .connected_type import ConnectedType, planar_basis


def closed_z(euler_numbers: Iterable[int]) -> AlgNum:
    """Product of 2^(1 - e/4) over the components of a closed surface."""
    value = ONE
    for e in euler_numbers:
        value = value * pow2_quarter(4 - e)
    return value


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def glued_components(a: ConnectedType, b: ConnectedType) -> list[int]:
    """Euler numbers of the closed surface obtained by gluing a and b along the circles."""
    if a.m != b.m:
        raise ContractError(f"Cannot glue types on {a.m} and {b.m} circles")
    pieces = a.euler_numbers() + b.euler_numbers()
    offset = len(a.blocks)
    uf = _UnionFind(len(pieces))
    owner_a = {c: i for i, block in enumerate(a.blocks) for c in block}
    owner_b = {c: offset + i for i, block in enumerate(b.blocks) for c in block}
    for circle in range(1, a.m + 1):
        uf.union(owner_a[circle], owner_b[circle])

    totals: dict[int, int] = {}
    for i, e in enumerate(pieces):
        root = uf.find(i)
        totals[root] = totals.get(root, 0) + e
    components = [totals[r] for r in sorted(totals)]
    # circles have Euler number zero
    assert sum(components) == sum(pieces)
    return components


def pair(a: ConnectedType, b: ConnectedType) -> AlgNum:
    """
    Value of the closed surface a glued to b.

    Raises:
        ContractError: If the circle counts differ
    """
    return closed_z(glued_components(a, b))


class GramProblem(BaseModel):
    """A basis of connected types on m circles."""

    model_config = ConfigDict(frozen=True)

    m: int
    basis: tuple[ConnectedType, ...]

    @model_validator(mode="after")
    def check_basis(self) -> GramProblem:
        if any(t.m != self.m for t in self.basis):
            raise ValueError(f"Every basis type must live on {self.m} circles")
        return self

    @classmethod
    def standard(cls, m: int) -> GramProblem:
        """Planar representatives of every set partition of 1..m."""
        _check_circles(m)
        return cls(m=m, basis=tuple(planar_basis(m)))

    @classmethod
    def custom(cls, basis: Sequence[ConnectedType]) -> GramProblem:
        if not basis:
            raise ContractError("A custom basis needs at least one type")
        _check_circles(basis[0].m)
        return cls(m=basis[0].m, basis=tuple(basis))

    def labels(self) -> list[str]:
        return [t.render() for t in self.basis]


def _check_circles(m: int) -> None:
    if m < 1:
        raise ContractError(f"Need at least one circle, got {m}")
    if m > Settings.GRAM_MAX_CIRCLES:
        raise ResourceLimitError(
            f"{m} circles exceeds GRAM_MAX_CIRCLES={Settings.GRAM_MAX_CIRCLES}"
        )


def gram_matrix(p: GramProblem) -> AlgMatrix:
    """Symmetric matrix of pair values over the basis."""
    size = len(p.basis)
    grid: list[list[Optional[AlgNum]]] = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            grid[i][j] = grid[j][i] = pair(p.basis[i], p.basis[j])
    return AlgMatrix.from_rows(grid)


def quotient_dim(m: int) -> int:
    """Rank of the standard Gram matrix; equals 2^(m-1)."""
    return rank(gram_matrix(GramProblem.standard(m)))


def kernel_relations(
    m: int, basis: Optional[Sequence[ConnectedType]] = None
) -> list[list[AlgNum]]:
    """Exact kernel vectors of the Gram matrix, coordinates in basis order."""
    problem = GramProblem.standard(m) if basis is None else GramProblem.custom(basis)
    if problem.m != m:
        raise ContractError(f"Basis lives on {problem.m} circles, expected {m}")
    return kernel_basis(gram_matrix(problem))


def rp_check(m: int, matrix: Optional[AlgMatrix] = None) -> bool:
    """Whether the Gram matrix (standard unless given) is positive semidefinite."""
    if matrix is None:
        matrix = gram_matrix(GramProblem.standard(m))
    return is_psd(matrix)


def gram_report(
    m: int,
    with_kernel: bool = False,
    with_psd: bool = False,
    basis: Optional[Sequence[ConnectedType]] = None,
) -> GramReport:
    """Matrix, rank and optional kernel and positivity for m circles."""
    problem = GramProblem.standard(m) if basis is None else GramProblem.custom(basis)
    matrix = gram_matrix(problem)
    report = GramReport(
        circles=m,
        basis=problem.labels(),
        matrix=matrix.to_rows(),
        rank=rank(matrix),
        expected_rank=2 ** (m - 1),
        kernel=kernel_basis(matrix) if with_kernel else None,
        psd=is_psd(matrix) if with_psd else None,
    )
    logger.info(
        "surfacecalc",
        f"Gram matrix for {m} circles",
        context={"basis": len(problem.basis), "rank": report.rank, "psd": report.psd},
    )
    return report
