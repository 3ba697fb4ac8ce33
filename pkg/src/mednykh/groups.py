"""Finite groups as multiplication tables, with their irrep dimensions."""

from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..utils.errors import ContractError, DatasetError


class GroupTable(BaseModel):
    """
    A finite group given by its Cayley table on elements 0..order-1.

    The group axioms are checked on construction.
    """

    model_config = ConfigDict(frozen=True)

    order: int = Field(..., ge=1)
    mul: tuple[tuple[int, ...], ...]
    identity: int = 0
    name: str = ""

    @field_validator("mul", mode="before")
    @classmethod
    def freeze_rows(cls, v):
        return tuple(tuple(int(x) for x in row) for row in v)

    @model_validator(mode="after")
    def check_axioms(self) -> GroupTable:
        n = self.order
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise ValueError(f"Multiplication table must be {n}x{n}")
        if any(not 0 <= x < n for row in self.mul for x in row):
            raise ValueError("Table entries must be element indices")
        if not 0 <= self.identity < n:
            raise ValueError(f"Identity {self.identity} is not an element")
        e = self.identity
        for a in range(n):
            if self.mul[e][a] != a or self.mul[a][e] != a:
                raise ValueError(f"Element {e} is not a two-sided identity (fails at {a})")
            if e not in self.mul[a]:
                raise ValueError(f"Element {a} has no inverse")
        for a, b, c in product(range(n), repeat=3):
            if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                raise ValueError(f"Associativity fails at ({a}, {b}, {c})")
        return self

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        return tuple(row.index(self.identity) for row in self.mul)

    def multiply(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def commutator(self, a: int, b: int) -> int:
        """a b a^-1 b^-1."""
        inv = self.inverse
        return self.mul[self.mul[self.mul[a][b]][inv[a]]][inv[b]]

    @cached_property
    def commutator_table(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(self.commutator(a, b) for b in range(self.order)) for a in range(self.order)
        )

    @property
    def is_abelian(self) -> bool:
        n = self.order
        return all(self.mul[a][b] == self.mul[b][a] for a in range(n) for b in range(a + 1, n))

    def to_text(self, dims: Optional[Sequence[int]] = None) -> str:
        lines = [f"order {self.order}"]
        lines.extend(" ".join(str(x) for x in row) for row in self.mul)
        lines.append(f"identity {self.identity}")
        if dims is not None:
            lines.append("irreps " + " ".join(str(d) for d in dims))
        return "\n".join(lines) + "\n"

    # Constructors

    @classmethod
    def cyclic(cls, n: int) -> GroupTable:
        return cls(
            order=n,
            mul=[[(a + b) % n for b in range(n)] for a in range(n)],
            name=f"Z{n}",
        )

    @classmethod
    def direct_product(cls, a: GroupTable, b: GroupTable) -> GroupTable:
        nb = b.order

        def index(x: int, y: int) -> int:
            return x * nb + y

        mul = [
            [
                index(a.mul[x1][x2], b.mul[y1][y2])
                for x2 in range(a.order)
                for y2 in range(nb)
            ]
            for x1 in range(a.order)
            for y1 in range(nb)
        ]
        return cls(
            order=a.order * nb,
            mul=mul,
            identity=index(a.identity, b.identity),
            name=f"{a.name}x{b.name}" if a.name and b.name else "",
        )

    @classmethod
    def from_permutations(cls, generators: Sequence[Sequence[int]], name: str = "") -> GroupTable:
        """
        The permutation group generated by `generators`.

        Element 0 is the identity; the rest follow in order of discovery.
        """
        if not generators:
            raise ContractError("Need at least one generator")
        degree = len(generators[0])
        gens = [tuple(g) for g in generators]
        if any(sorted(g) != list(range(degree)) for g in gens):
            raise ContractError("Generators must be permutations of one common degree")

        def compose(p: tuple, q: tuple) -> tuple:
            # apply q then p
            return tuple(p[q[i]] for i in range(degree))

        elements = [tuple(range(degree))]
        position = {elements[0]: 0}
        frontier = [elements[0]]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = compose(g, x)
                    if y not in position:
                        position[y] = len(elements)
                        elements.append(y)
                        nxt.append(y)
            frontier = nxt
        mul = [[position[compose(x, y)] for y in elements] for x in elements]
        return cls(order=len(elements), mul=mul, name=name)

    @classmethod
    def dihedral(cls, n: int) -> GroupTable:
        """Symmetries of the n-gon (order 2n); element a + n*b is r^a s^b."""

        def index(a: int, b: int) -> int:
            return a % n + n * (b % 2)

        mul = []
        for x in range(2 * n):
            a, b = x % n, x // n
            row = []
            for y in range(2 * n):
                c, d = y % n, y // n
                row.append(index(a + (-c if b else c), b + d))
            mul.append(row)
        return cls(order=2 * n, mul=mul, name=f"D{n}")

    @classmethod
    def quaternion(cls) -> GroupTable:
        """Q8 with element 4*s + u meaning (-1)^s times the unit u in 1, i, j, k."""
        # unit products as (sign, unit)
        units = {
            (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
            (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
            (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
            (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
        }  # fmt: skip
        mul = []
        for x in range(8):
            row = []
            for y in range(8):
                s, u = units[(x % 4, y % 4)]
                row.append(4 * ((s + x // 4 + y // 4) % 2) + u)
            mul.append(row)
        return cls(order=8, mul=mul, name="Q8")


class IrrepDims(BaseModel):
    """Dimensions of the irreducible representations of a group."""

    model_config = ConfigDict(frozen=True)

    dims: tuple[int, ...] = Field(..., min_length=1)

    @field_validator("dims")
    @classmethod
    def positive(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(d < 1 for d in v):
            raise ValueError(f"Irrep dimensions must be positive, got {v}")
        return v

    def check_order(self, order: int) -> None:
        """
        Raises:
            DatasetError: If the squares of the dimensions do not add up to order
        """
        total = sum(d * d for d in self.dims)
        if total != order:
            raise DatasetError(
                f"Irrep dimensions {list(self.dims)} square-sum to {total}, group order is {order}"
            )


def bundled_groups() -> dict[str, tuple[GroupTable, IrrepDims]]:
    """Small groups with their irrep dimensions."""
    z2 = GroupTable.cyclic(2)
    s3 = GroupTable.from_permutations([(1, 0, 2), (1, 2, 0)], name="S3")
    return {
        "Z2": (z2, IrrepDims(dims=(1, 1))),
        "Z3": (GroupTable.cyclic(3), IrrepDims(dims=(1, 1, 1))),
        "Z4": (GroupTable.cyclic(4), IrrepDims(dims=(1, 1, 1, 1))),
        "Z2xZ2": (GroupTable.direct_product(z2, z2), IrrepDims(dims=(1, 1, 1, 1))),
        "S3": (s3, IrrepDims(dims=(1, 1, 2))),
        "Q8": (GroupTable.quaternion(), IrrepDims(dims=(1, 1, 1, 1, 2))),
        "D4": (GroupTable.dihedral(4), IrrepDims(dims=(1, 1, 1, 1, 2))),
    }


def parse_group(text: str, source: str = "<text>") -> tuple[GroupTable, IrrepDims]:
    """
    Parse the group file format.

    `order n`, then n rows of n element indices, then `identity i`, then
    `irreps d1 d2 ...`. Blank lines and '#' comments are ignored.

    Raises:
        DatasetError: On malformed input or a table violating the group axioms
    """
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    if not lines or not lines[0][1].startswith("order"):
        raise DatasetError(f"{source}: expected 'order n' on the first line")

    try:
        order = int(lines[0][1].split()[1])
        rows = [[int(x) for x in line.split()] for _, line in lines[1 : order + 1]]
        tail = dict(line.split(None, 1) for _, line in lines[order + 1 :])
        identity = int(tail["identity"])
        dims = IrrepDims(dims=tuple(int(x) for x in tail["irreps"].split()))
        table = GroupTable(order=order, mul=rows, identity=identity, name=source)
    except KeyError as exc:
        raise DatasetError(f"{source}: missing '{exc.args[0]}' line") from exc
    except (IndexError, ValueError) as exc:
        raise DatasetError(f"{source}: {exc}") from exc
    dims.check_order(table.order)
    return table, dims
