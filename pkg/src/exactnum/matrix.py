"""Dense exact matrices over Q[2^(1/4)]: rank, kernel, positive semidefiniteness."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from ..utils.errors import ContractError
from .algnum import AlgNum, ONE, ZERO, Sign, sign


class AlgMatrix:
    """Immutable dense row-major matrix of AlgNum entries."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[AlgNum]) -> None:
        if rows < 0 or cols < 0:
            raise ContractError("Matrix dimensions must be non-negative")
        if len(entries) != rows * cols:
            raise ContractError(
                f"Expected {rows * cols} entries for a {rows}x{cols} matrix, "
                f"got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self._entries = tuple(AlgNum.from_value(e) for e in entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> AlgMatrix:
        grid = [list(r) for r in rows]
        n_rows = len(grid)
        n_cols = len(grid[0]) if grid else 0
        if any(len(r) != n_cols for r in grid):
            raise ContractError("Rows have different lengths")
        return cls(n_rows, n_cols, [e for r in grid for e in r])

    @classmethod
    def identity(cls, n: int) -> AlgMatrix:
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> AlgMatrix:
        return cls(rows, cols, [ZERO] * (rows * cols))

    def __getitem__(self, index: tuple[int, int]) -> AlgNum:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"Index {index} out of range for {self.rows}x{self.cols}")
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> list[AlgNum]:
        return list(self._entries[i * self.cols : (i + 1) * self.cols])

    def to_rows(self) -> list[list[AlgNum]]:
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (
            other.rows,
            other.cols,
            other._entries,
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        return f"AlgMatrix({self.rows}x{self.cols})"

    def transpose(self) -> AlgMatrix:
        return AlgMatrix(
            self.cols,
            self.rows,
            [self[i, j] for j in range(self.cols) for i in range(self.rows)],
        )

    def with_entry(self, i: int, j: int, value: AlgNum) -> AlgMatrix:
        entries = list(self._entries)
        entries[i * self.cols + j] = value
        return AlgMatrix(self.rows, self.cols, entries)

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self[i, j] == self[j, i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def mat_vec(self, vector: Sequence[AlgNum]) -> list[AlgNum]:
        if len(vector) != self.cols:
            raise ContractError(
                f"Vector of length {len(vector)} does not match {self.cols} columns"
            )
        result = []
        for i in range(self.rows):
            total = ZERO
            for j in range(self.cols):
                total = total + self[i, j] * vector[j]
            result.append(total)
        return result

    def matmul(self, other: AlgMatrix) -> AlgMatrix:
        if self.cols != other.rows:
            raise ContractError("Inner dimensions do not match")
        entries = []
        for i in range(self.rows):
            for j in range(other.cols):
                total = ZERO
                for k in range(self.cols):
                    total = total + self[i, k] * other[k, j]
                entries.append(total)
        return AlgMatrix(self.rows, other.cols, entries)

    def quadratic_form(self, vector: Sequence[AlgNum]) -> AlgNum:
        """x^T M x."""
        image = self.mat_vec(vector)
        total = ZERO
        for x, y in zip(vector, image):
            total = total + AlgNum.from_value(x) * y
        return total

    def render(self) -> list[str]:
        return ["[" + ", ".join(str(e) for e in self.row(i)) + "]" for i in range(self.rows)]


def _bareiss_echelon(m: AlgMatrix) -> tuple[list[list[AlgNum]], list[int]]:
    """
    Fraction-free row echelon form.

    Returns:
        The echelon rows (zero rows dropped) and the pivot column of each row
    """
    grid = m.to_rows()
    n_rows, n_cols = m.rows, m.cols
    pivots: list[int] = []
    prev_inv = ONE
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if grid[i][c]), None)
        if pivot_row is None:
            continue
        grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
        pivot = grid[r][c]
        for i in range(r + 1, n_rows):
            lead = grid[i][c]
            row_i = grid[i]
            row_r = grid[r]
            for j in range(c + 1, n_cols):
                # exact division by the previous pivot
                row_i[j] = (pivot * row_i[j] - lead * row_r[j]) * prev_inv
            row_i[c] = ZERO
            # columns left of c are already zero in rows below r
        prev_inv = pivot.inv()
        pivots.append(c)
        r += 1
    return grid[:r], pivots


def rank(m: AlgMatrix) -> int:
    """Exact rank."""
    _, pivots = _bareiss_echelon(m)
    return len(pivots)


def kernel_basis(m: AlgMatrix) -> list[list[AlgNum]]:
    """
    Exact basis of the right kernel.

    Each vector has 1 at its free column and 0 at the other free columns.
    """
    echelon, pivots = _bareiss_echelon(m)
    free_cols = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for free in free_cols:
        x = [ZERO] * m.cols
        x[free] = ONE
        for row, pc in zip(reversed(echelon), reversed(pivots)):
            total = ZERO
            for j in range(pc + 1, m.cols):
                if x[j] and row[j]:
                    total = total + row[j] * x[j]
            x[pc] = -total / row[pc]
        basis.append(x)
    return basis


def is_psd(m: AlgMatrix) -> bool:
    """
    Exact positive-semidefiniteness by symmetric elimination.

    Raises:
        ContractError: If the matrix is not symmetric
    """
    if not m.is_symmetric():
        raise ContractError("is_psd requires a symmetric matrix")

    grid = m.to_rows()
    active = list(range(m.rows))
    while active:
        diagonal_signs = {i: sign(grid[i][i]) for i in active}
        if any(s is Sign.NEGATIVE for s in diagonal_signs.values()):
            return False
        pivot = next((i for i in active if diagonal_signs[i] is Sign.POSITIVE), None)
        if pivot is None:
            # all diagonal entries zero: PSD only if the block vanishes
            return all(not grid[i][j] for i in active for j in active)
        pivot_inv = grid[pivot][pivot].inv()
        rest = [i for i in active if i != pivot]
        for i in rest:
            factor = grid[i][pivot] * pivot_inv
            if not factor:
                continue
            for j in rest:
                if grid[pivot][j]:
                    grid[i][j] = grid[i][j] - factor * grid[pivot][j]
        active = rest
    return True


def brute_force_psd_witness(m: AlgMatrix, bound: int = 2) -> list[int] | None:
    """Search small integer vectors x with x^T M x < 0; None if no witness exists."""
    for vector in product(range(-bound, bound + 1), repeat=m.cols):
        if not any(vector):
            continue
        if sign(m.quadratic_form([AlgNum(v) for v in vector])) is Sign.NEGATIVE:
            return list(vector)
    return None
