"""Factory picking a loader by file extension."""

from pathlib import Path
from typing import Any, List

from .base_loader import BaseTextLoader
from .text_loaders import DatasetLoader, GroupLoader, TriangulationLoader


class FileLoaderFactory:
    """Factory for creating and managing file loaders."""

    def __init__(self) -> None:
        self._loaders: List[BaseTextLoader] = [
            DatasetLoader(),
            TriangulationLoader(),
            GroupLoader(),
        ]

    def loader_for(self, filepath: str | Path) -> BaseTextLoader:
        """
        Raises:
            ValueError: If file type is not supported
        """
        extension = Path(filepath).suffix
        for loader in self._loaders:
            if loader.supports_extension(extension):
                return loader
        supported = sorted(e for loader in self._loaders for e in loader.SUPPORTED_EXTENSIONS)
        raise ValueError(
            f"Unsupported file type: {extension or '(none)'}. "
            f"Supported types: {', '.join(supported)}"
        )

    def load_file(self, filepath: str | Path) -> Any:
        """
        Load a file using the loader for its extension.

        Args:
            filepath: Path to the file to load

        Returns:
            CategoryData, (Triangulation, Coloring) or (GroupTable, IrrepDims)

        Raises:
            ValueError: If file type is not supported
            FileNotFoundError: If file doesn't exist
        """
        filepath = Path(filepath)
        return self.loader_for(filepath).load(filepath)

    def supports_file(self, filepath: str | Path) -> bool:
        """
        Check if a file type is supported.

        Args:
            filepath: Path to check

        Returns:
            True if file type is supported
        """
        extension = Path(filepath).suffix
        return any(loader.supports_extension(extension) for loader in self._loaders)
