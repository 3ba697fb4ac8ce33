"""Bundled datasets."""

from functools import lru_cache
from pathlib import Path
from typing import Optional, Sequence

from ..config.settings import Settings
from ..exactnum import AlgNum
from ..utils.errors import ContractError
from ..utils.logger import logger
from .category_data import CategoryData, FRow
from .dataset_text import parse_dataset
from .labels import Label
from .symmetry import SymmetryAction

ISING3_FILE = "ising3.cat"


@lru_cache(maxsize=None)
def load_ising3(symmetry: Optional[SymmetryAction] = None) -> CategoryData:
    """
    The Ising-type 3-category with its normalized 20j-symbols.

    Args:
        symmetry: Symmetry action override; the file declares the frozen one

    Returns:
        The closed dataset
    """
    path = Path(Settings.DATA_DIR) / ISING3_FILE
    text = path.read_text(encoding="utf-8")
    data = parse_dataset(text, source="ising3", symmetry=symmetry)
    logger.info(
        "catdata",
        "Loaded bundled dataset",
        context={"dataset": "ising3", "rows": len(data.rows), "keys": len(data.fsymbols)},
    )
    return data


def load_semisimple1(dims: Sequence[int]) -> CategoryData:
    """
    1+1-dimensional data of a semisimple algebra with simple blocks of sizes dims.

    Block i gives a 0-label j<i> (Tr = d_i, mu = 1), a 1-label p<i> (Tr = 1,
    mu = d_i) and one triangle with value d_i. On a closed surface S the
    state sum is the sum of d_i^chi(S).

    Raises:
        ContractError: If dims is empty or has a non-positive entry
    """
    dims = list(dims)
    if not dims or any(int(d) != d or d < 1 for d in dims):
        raise ContractError(f"Block dimensions must be positive integers, got {dims}")
    vertex_names = [f"j{i}" for i in range(len(dims))]
    edge_names = [f"p{i}" for i in range(len(dims))]
    traces: dict[Label, AlgNum] = {}
    gdims: dict[Label, AlgNum] = {}
    rows = []
    for vertex, edge, d in zip(vertex_names, edge_names, dims):
        v, e = Label(dim=0, name=vertex), Label(dim=1, name=edge)
        traces[v], gdims[v] = AlgNum(d), AlgNum(1)
        traces[e], gdims[e] = AlgNum(1), AlgNum(d)
        rows.append(FRow(row_id=vertex, labels=(vertex,) * 3 + (edge,) * 3, value=AlgNum(d)))
    return CategoryData(
        n=1,
        labels={0: vertex_names, 1: edge_names},
        traces=traces,
        globaldims=gdims,
        rows=rows,
        source="semisimple:" + ",".join(str(d) for d in dims),
    )
