"""Run logger writing JSON lines next to a console mirror."""

from datetime import datetime, timezone
import json
import logging
import os
import uuid
from typing import Any, Dict, Mapping, Optional

from ..config.settings import Settings

# Console mirror goes to stderr so reports on stdout stay clean
logging.basicConfig(level=logging.WARNING)
python_logger = logging.getLogger("alterfold")

_PY_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARN": logging.WARNING,
    "ERROR": logging.ERROR,
}

# errors.log only receives these
_ALERT_LEVELS = frozenset({"WARN", "ERROR"})


def _jsonable(value: Any) -> Any:
    """Turn context values into something json.dumps accepts."""
    if isinstance(value, Mapping):
        return {str(k) if not isinstance(k, str) else k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value, key=str) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(v) for v in items]
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


class RunLogger:
    """Structured logger shared by the library and the CLI.

    Every entry goes to run.log and combined.log; warnings and errors are
    also appended to errors.log. File output can be switched off, in which
    case only the Python logger sees the messages.
    """

    def __init__(self, logs_dir: Optional[str] = None, to_file: Optional[bool] = None):
        self.logs_dir = logs_dir or Settings.LOGS_DIR
        self.to_file = Settings.LOG_TO_FILE if to_file is None else to_file
        self.environment = Settings.ENVIRONMENT
        self.run_id = uuid.uuid4().hex[:12]
        if self.to_file:
            os.makedirs(self.logs_dir, exist_ok=True)

    def _entry(
        self,
        level: str,
        category: str,
        message: str,
        context: Optional[Dict[str, Any]],
        error: Optional[BaseException],
    ) -> Dict[str, Any]:
        return {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": level,
            "source": "alterfold",
            "run_id": self.run_id,
            "pid": os.getpid(),
            "category": category,
            "message": message,
            "context": _jsonable(context or {}),
            "environment": self.environment,
            "error_stack": str(error) if error else None,
        }

    def _log(
        self,
        level: str,
        category: str,
        message: str,
        context: Optional[Dict[str, Any]] = None,
        error: Optional[BaseException] = None,
    ) -> None:
        if self.to_file:
            entry = self._entry(level, category, message, context, error)
            targets = ["run.log", "combined.log"]
            if level in _ALERT_LEVELS:
                targets.append("errors.log")
            for filename in targets:
                self._append(filename, entry)

        text = f"[{category}] {message}"
        if error:
            text = f"{text} - Error: {error}"
        python_logger.log(_PY_LEVELS[level], text)

    def _append(self, filename: str, entry: Dict[str, Any]) -> None:
        # Logging failures never abort a computation
        try:
            os.makedirs(self.logs_dir, exist_ok=True)
            path = os.path.join(self.logs_dir, filename)
            with open(path, "a", encoding="utf-8") as f:
                f.write(json.dumps(entry, ensure_ascii=False) + "\n")
        except (OSError, TypeError, ValueError) as e:
            python_logger.error(f"Error writing to log file {filename}: {e}")

    def debug(self, category: str, message: str, context: Optional[Dict[str, Any]] = None) -> None:
        self._log("DEBUG", category, message, context)

    def info(self, category: str, message: str, context: Optional[Dict[str, Any]] = None) -> None:
        self._log("INFO", category, message, context)

    def warn(self, category: str, message: str, context: Optional[Dict[str, Any]] = None) -> None:
        self._log("WARN", category, message, context)

    def error(
        self,
        category: str,
        message: str,
        context: Optional[Dict[str, Any]] = None,
        error: Optional[BaseException] = None,
    ) -> None:
        self._log("ERROR", category, message, context, error)


# Shared instance
logger = RunLogger()
