"""Exception hierarchy."""


class AlterfoldError(Exception):
    """Base class for all errors raised by this package."""


class ContractError(AlterfoldError, ValueError):
    """An operation was called outside its contract."""


class PreconditionError(ContractError):
    """A Pachner move cannot be embedded at the requested location."""


class DatasetError(ContractError):
    """A dataset file or table row is internally inconsistent."""

    def __init__(self, message: str, row_id: str | None = None):
        super().__init__(message if row_id is None else f"row {row_id}: {message}")
        self.row_id = row_id


class LabelLookupError(AlterfoldError, KeyError):
    """Unknown label or simplex."""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the message readable
        return str(self.args[0]) if self.args else ""


class ResourceLimitError(AlterfoldError):
    """An enumeration would exceed a configured cap."""
