"""Loaders for dataset, triangulation and group files."""

from ..catdata import CategoryData, parse_dataset
from ..mednykh import GroupTable, IrrepDims, parse_group
from ..simplicial import Triangulation, parse_triangulation
from ..statesum import Coloring
from .base_loader import BaseTextLoader


class DatasetLoader(BaseTextLoader):
    """Category datasets (.cat)."""

    SUPPORTED_EXTENSIONS = {".cat"}

    def parse(self, text: str, source: str) -> CategoryData:
        return parse_dataset(text, source=source)


class TriangulationLoader(BaseTextLoader):
    """Triangulations with optional boundary colors (.tri)."""

    SUPPORTED_EXTENSIONS = {".tri"}

    def parse(self, text: str, source: str) -> tuple[Triangulation, Coloring]:
        t, colors = parse_triangulation(text, source=source)
        return t, Coloring(colors)


class GroupLoader(BaseTextLoader):
    """Group tables with irrep dimensions (.grp)."""

    SUPPORTED_EXTENSIONS = {".grp"}

    def parse(self, text: str, source: str) -> tuple[GroupTable, IrrepDims]:
        return parse_group(text, source=source)
