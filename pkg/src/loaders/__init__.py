"""File loaders module."""

from .base_loader import BaseTextLoader
from .file_loader_factory import FileLoaderFactory
from .text_loaders import DatasetLoader, GroupLoader, TriangulationLoader

__all__ = [
    "BaseTextLoader",
    "DatasetLoader",
    "FileLoaderFactory",
    "GroupLoader",
    "TriangulationLoader",
]
