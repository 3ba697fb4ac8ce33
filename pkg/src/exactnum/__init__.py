"""Exact arithmetic in Q[2^(1/4)] and exact linear algebra over it."""

from .algnum import (
    AlgNum,
    ONE,
    SQRT2,
    THETA,
    ZERO,
    Sign,
    add,
    algsum,
    inv,
    mul,
    neg,
    pow2_quarter,
    sign,
)
from .grammar import parse, render
from .matrix import AlgMatrix, brute_force_psd_witness, is_psd, kernel_basis, rank
from .monomial import (
    Accumulator,
    Monomial,
    algnum_terms,
    multiply_terms,
    pair_to_algnum,
)

__all__ = [
    "AlgNum",
    "AlgMatrix",
    "Accumulator",
    "Monomial",
    "ONE",
    "SQRT2",
    "THETA",
    "ZERO",
    "Sign",
    "add",
    "algnum_terms",
    "algsum",
    "multiply_terms",
    "brute_force_psd_witness",
    "inv",
    "is_psd",
    "kernel_basis",
    "mul",
    "neg",
    "pair_to_algnum",
    "parse",
    "pow2_quarter",
    "rank",
    "render",
    "sign",
]
