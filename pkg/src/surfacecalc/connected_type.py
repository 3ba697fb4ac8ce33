"""Connected types of surfaces bounded by m circles."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from pydantic import BaseModel, ConfigDict, Field, model_validator

Block = tuple[int, ...]


class ConnectedType(BaseModel):
    """
    A surface in the ball up to connected type.

    `blocks` partitions the circles 1..m by which circles bound the same
    component. Per-block handles and red tubes lower that block's Euler
    number by two each.
    """

    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1, description="Number of boundary circles")
    blocks: tuple[Block, ...]
    extra_genus: tuple[int, ...] = Field(default=())
    red_tubes: tuple[int, ...] = Field(default=())

    @model_validator(mode="before")
    @classmethod
    def normalize(cls, data):
        if not isinstance(data, dict):
            return data
        blocks = [tuple(sorted(int(c) for c in b)) for b in data.get("blocks", ())]
        genus = list(data.get("extra_genus") or [0] * len(blocks))
        tubes = list(data.get("red_tubes") or [0] * len(blocks))
        if len(genus) != len(blocks) or len(tubes) != len(blocks):
            raise ValueError("extra_genus and red_tubes need one entry per block")
        order = sorted(range(len(blocks)), key=lambda i: (-len(blocks[i]), blocks[i]))
        return {
            **data,
            "blocks": tuple(blocks[i] for i in order),
            "extra_genus": tuple(genus[i] for i in order),
            "red_tubes": tuple(tubes[i] for i in order),
        }

    @model_validator(mode="after")
    def check_partition(self) -> ConnectedType:
        circles = [c for b in self.blocks for c in b]
        if any(not b for b in self.blocks):
            raise ValueError("Blocks must be non-empty")
        if sorted(circles) != list(range(1, self.m + 1)):
            raise ValueError(f"Blocks {self.blocks} do not partition 1..{self.m}")
        if any(g < 0 for g in self.extra_genus) or any(t < 0 for t in self.red_tubes):
            raise ValueError("Handle and tube counts must be non-negative")
        return self

    @classmethod
    def planar(cls, m: int, blocks) -> ConnectedType:
        return cls(m=m, blocks=blocks)

    def euler_numbers(self) -> list[int]:
        """Euler number of each block: 2 - |circles| - 2*handles - 2*tubes."""
        return [
            2 - len(b) - 2 * g - 2 * t
            for b, g, t in zip(self.blocks, self.extra_genus, self.red_tubes)
        ]

    def with_handle(self, block: int = 0, count: int = 1) -> ConnectedType:
        genus = list(self.extra_genus)
        genus[block] += count
        return ConnectedType(
            m=self.m, blocks=self.blocks, extra_genus=genus, red_tubes=self.red_tubes
        )

    def with_red_tube(self, block: int = 0, count: int = 1) -> ConnectedType:
        tubes = list(self.red_tubes)
        tubes[block] += count
        return ConnectedType(
            m=self.m, blocks=self.blocks, extra_genus=self.extra_genus, red_tubes=tubes
        )

    @property
    def is_planar(self) -> bool:
        return not any(self.extra_genus) and not any(self.red_tubes)

    def render(self) -> str:
        parts = []
        for b, g, t in zip(self.blocks, self.extra_genus, self.red_tubes):
            text = "".join(str(c) for c in b)
            if g:
                text += "+" + "h" * g
            if t:
                text += "+" + "r" * t
            parts.append(text)
        return "(" + ",".join(parts) + ")"

    def __str__(self) -> str:
        return self.render()


def _partitions(elements: list[int]) -> Iterator[list[list[int]]]:
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for smaller in _partitions(rest):
        yield [[first]] + smaller
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]


def _order_key(blocks: tuple[Block, ...]) -> tuple:
    return (len(blocks), blocks)


@lru_cache(maxsize=None)
def set_partitions(m: int) -> tuple[tuple[Block, ...], ...]:
    """
    All set partitions of 1..m in canonical order.

    Fewer blocks first; ties broken lexicographically on the blocks listed
    largest first.
    """
    found = []
    for p in _partitions(list(range(1, m + 1))):
        blocks = sorted((tuple(sorted(b)) for b in p), key=lambda b: (-len(b), b))
        found.append(tuple(blocks))
    return tuple(sorted(found, key=_order_key))


def bell_number(m: int) -> int:
    """B(m) by the Bell triangle."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def planar_basis(m: int) -> list[ConnectedType]:
    return [ConnectedType(m=m, blocks=p) for p in set_partitions(m)]


def handle_basis(m: int) -> list[ConnectedType]:
    """Planar basis with one handle on the first disk of the all-disks type."""
    basis = planar_basis(m)
    basis[-1] = basis[-1].with_handle(0)
    return basis
