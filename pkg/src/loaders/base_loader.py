"""Base text loader interface."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

import chardet

from ..utils.logger import logger


class BaseTextLoader(ABC):
    """Abstract base class for the line-oriented input formats."""

    SUPPORTED_EXTENSIONS: set[str] = set()

    def supports_extension(self, extension: str) -> bool:
        """
        Check if this loader supports the given file extension.

        Args:
            extension: File extension (e.g., '.cat', '.tri')

        Returns:
            True if supported, False otherwise
        """
        return extension.lower() in self.SUPPORTED_EXTENSIONS

    @abstractmethod
    def parse(self, text: str, source: str) -> Any:
        """
        Parse file contents.

        Args:
            text: Decoded file contents
            source: Name used in diagnostics (usually the path)

        Returns:
            The parsed object
        """

    def load(self, filepath: Path) -> Any:
        """
        Read, decode and parse a file.

        Args:
            filepath: Path to the file to load

        Returns:
            Whatever parse returns
        """
        self.validate_file(filepath)
        text = self.read_text(filepath)
        result = self.parse(text, str(filepath))
        logger.info(
            "loader",
            f"Loaded {filepath.name}",
            context={"loader": type(self).__name__, "bytes": len(text)},
        )
        return result

    def read_text(self, filepath: Path) -> str:
        raw = filepath.read_bytes()
        return raw.decode(self._detect_encoding(raw))

    @staticmethod
    def _detect_encoding(raw: bytes) -> str:
        """Detect the encoding using chardet, falling back to utf-8."""
        encoding = chardet.detect(raw[:10000])["encoding"]
        if encoding is None:
            return "utf-8"
        encoding = encoding.lower()
        if encoding in ("ascii", "us-ascii"):
            return "utf-8"
        return encoding

    def validate_file(self, filepath: Path) -> None:
        """
        Validate that the file exists and is readable.

        Args:
            filepath: Path to the file

        Raises:
            FileNotFoundError: If file doesn't exist
            ValueError: If file is not readable
        """
        if not filepath.exists():
            raise FileNotFoundError(f"File not found: {filepath}")

        if not filepath.is_file():
            raise ValueError(f"Path is not a file: {filepath}")
