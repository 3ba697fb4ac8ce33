"""Surface functional on the 3-sphere at the level of connected types."""

from .connected_type import (
    ConnectedType,
    bell_number,
    handle_basis,
    planar_basis,
    set_partitions,
)
from .gram import (
    GramProblem,
    closed_z,
    glued_components,
    gram_matrix,
    gram_report,
    kernel_relations,
    pair,
    quotient_dim,
    rp_check,
)
from .idempotents import (
    TubeElement,
    idempotent,
    identity,
    join,
    minimal_idempotents,
    quantum_dimension,
    refines,
)

__all__ = [
    "ConnectedType",
    "GramProblem",
    "TubeElement",
    "bell_number",
    "closed_z",
    "glued_components",
    "gram_matrix",
    "gram_report",
    "handle_basis",
    "idempotent",
    "identity",
    "join",
    "kernel_relations",
    "minimal_idempotents",
    "pair",
    "planar_basis",
    "quantum_dimension",
    "quotient_dim",
    "refines",
    "rp_check",
    "set_partitions",
]
