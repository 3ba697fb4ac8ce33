"""
Idempotents of the tube algebra on m parallel disks.

A planar connected type T on m disks is read as the surface in a cylinder
over the disks whose blocks are joined by tubes. Stacking two types joins
their partitions; every independent cycle of tubes closes a handle, which
scales by sqrt2. Closing the cylinder caps each block into a sphere.

P(T) = T / sqrt2^(m - |T|) is idempotent and P(T) P(U) = P(T v U). The
minimal idempotents are the Moebius sums over coarser partitions.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Union

from ..exactnum import ONE, ZERO, AlgNum, algsum, pow2_quarter
from ..utils.errors import ContractError
from ..utils.logger import logger
from .connected_type import ConnectedType, planar_basis
from .gram import _check_circles, _UnionFind, closed_z

Scalar = Union[int, AlgNum]


def _planar(t: ConnectedType) -> ConnectedType:
    return ConnectedType(m=t.m, blocks=t.blocks)


def join(a: ConnectedType, b: ConnectedType) -> ConnectedType:
    """Finest planar type coarser than both a and b."""
    if a.m != b.m:
        raise ContractError(f"Cannot stack types on {a.m} and {b.m} disks")
    uf = _UnionFind(a.m + 1)
    for block in a.blocks + b.blocks:
        for c in block[1:]:
            uf.union(block[0], c)
    groups: dict[int, list[int]] = {}
    for c in range(1, a.m + 1):
        groups.setdefault(uf.find(c), []).append(c)
    return ConnectedType(m=a.m, blocks=list(groups.values()))


def refines(fine: ConnectedType, coarse: ConnectedType) -> bool:
    """Whether every block of fine lies in a block of coarse."""
    owner = {c: i for i, block in enumerate(coarse.blocks) for c in block}
    return all(len({owner[c] for c in block}) == 1 for block in fine.blocks)


def _moebius(fine: ConnectedType, coarse: ConnectedType) -> int:
    value = 1
    for block in coarse.blocks:
        k = sum(1 for b in fine.blocks if set(b) <= set(block))
        value *= (-1) ** (k - 1) * factorial(k - 1)
    return value


class TubeElement:
    """Exact linear combination of planar types on m disks."""

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Iterable[tuple[ConnectedType, Scalar]] = ()) -> None:
        self.m = m
        collected: dict[ConnectedType, AlgNum] = {}
        for t, coeff in terms:
            if t.m != m:
                raise ContractError(f"Type {t} lives on {t.m} disks, expected {m}")
            collected[t] = collected.get(t, ZERO) + coeff
        self._terms = {t: c for t, c in collected.items() if c}

    @classmethod
    def from_type(cls, t: ConnectedType) -> TubeElement:
        """A type with handles and red tubes as a multiple of its planar type."""
        extra = sum(t.extra_genus) + sum(t.red_tubes)
        return cls(t.m, [(_planar(t), pow2_quarter(2 * extra))])

    @property
    def terms(self) -> dict[ConnectedType, AlgNum]:
        return dict(self._terms)

    def __add__(self, other: TubeElement) -> TubeElement:
        self._check(other)
        return TubeElement(self.m, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> TubeElement:
        return TubeElement(self.m, [(t, -c) for t, c in self._terms.items()])

    def __sub__(self, other: TubeElement) -> TubeElement:
        return self + (-other)

    def __mul__(self, other: Union[Scalar, TubeElement]) -> TubeElement:
        if not isinstance(other, TubeElement):
            return TubeElement(self.m, [(t, c * other) for t, c in self._terms.items()])
        self._check(other)
        products = []
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                j = join(a, b)
                cycles = (self.m - len(a.blocks)) + (self.m - len(b.blocks)) - (
                    self.m - len(j.blocks)
                )
                products.append((j, x * y * pow2_quarter(2 * cycles)))
        return TubeElement(self.m, products)

    def __rmul__(self, other: Scalar) -> TubeElement:
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TubeElement):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.m, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"TubeElement({self.render()})"

    def render(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), key=lambda kv: (len(kv[0].blocks), kv[0].blocks))
        return " + ".join(f"({c})*{t.render()}" for t, c in ordered)

    def _check(self, other: TubeElement) -> None:
        if other.m != self.m:
            raise ContractError(f"Cannot combine elements on {self.m} and {other.m} disks")

    def is_idempotent(self) -> bool:
        return self * self == self

    def trace(self) -> AlgNum:
        """Value of the closure: every block capped into a sphere."""
        return algsum(c * closed_z([2] * len(t.blocks)) for t, c in self._terms.items())


def idempotent(t: ConnectedType) -> TubeElement:
    """P(t), the normalized planar type; handles on t are ignored."""
    return TubeElement(t.m, [(_planar(t), pow2_quarter(-2 * (t.m - len(t.blocks))))])


def quantum_dimension(x: Union[ConnectedType, TubeElement]) -> AlgNum:
    """Trace of an element; a bare type is read as its idempotent P(t)."""
    if isinstance(x, ConnectedType):
        x = idempotent(x)
    return x.trace()


def minimal_idempotents(m: int) -> dict[str, TubeElement]:
    """
    The orthogonal minimal idempotents, keyed by the rendered finest type.

    E(T) = sum over U coarser than T of mu(T, U) P(U); they sum to the
    identity P(1,...,m).

    Raises:
        ContractError: If m is below 1
        ResourceLimitError: If m exceeds GRAM_MAX_CIRCLES
    """
    _check_circles(m)
    basis = planar_basis(m)
    result = {}
    for fine in basis:
        e = TubeElement(m)
        for coarse in basis:
            if refines(fine, coarse):
                e = e + _moebius(fine, coarse) * idempotent(coarse)
        result[fine.render()] = e
    nonzero = sum(1 for e in result.values() if e.trace() != ZERO)
    logger.debug(
        "surfacecalc",
        f"Minimal idempotents on {m} disks",
        context={"count": len(result), "nonzero_dimension": nonzero},
    )
    return result


def identity(m: int) -> TubeElement:
    return TubeElement(m, [(ConnectedType(m=m, blocks=[(c,) for c in range(1, m + 1)]), ONE)])
