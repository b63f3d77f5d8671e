"""Root logger setup shared by the command line tool and the tests.

Records go to ``monocorr.log`` under :data:`core.app_paths.LOG_DIR`.  The
file handler is attached once per process; asking again only lowers the
root level or adds the stderr mirror.
"""
from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Optional

from core import app_paths

_LOG_FILENAME = "monocorr.log"
_LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
_LOG_PATH: Optional[Path] = None


def _formatter() -> logging.Formatter:
    return logging.Formatter(_LOG_FORMAT)


def _has_file_handler(root: logging.Logger, path: Path) -> bool:
    return any(
        isinstance(handler, logging.FileHandler) and getattr(handler, "baseFilename", None) == str(path)
        for handler in root.handlers
    )


def _has_console_handler(root: logging.Logger) -> bool:
    return any(type(handler) is logging.StreamHandler for handler in root.handlers)


def configure_logging(level: int = logging.INFO, *, console: bool = False) -> Path:
    """Send log records to the sweep log and return its path.

    ``level`` applies to the root logger: INFO keeps sweep summaries and
    witness seeds, DEBUG adds each basis refinement.  ``console`` mirrors
    records to standard error (``--verbose``).
    """

    global _LOG_PATH

    root = logging.getLogger()
    root.setLevel(min(root.level, level) if root.handlers else level)

    if console and not _has_console_handler(root):
        mirror = logging.StreamHandler(sys.stderr)
        mirror.setFormatter(_formatter())
        root.addHandler(mirror)

    if _LOG_PATH is not None:
        return _LOG_PATH

    path = app_paths.logs_path(_LOG_FILENAME)
    try:
        path.touch(exist_ok=True)
    except OSError:
        pass
    if not _has_file_handler(root, path):
        sink = logging.FileHandler(path, encoding="utf-8")
        sink.setFormatter(_formatter())
        root.addHandler(sink)

    _LOG_PATH = path
    root.debug("Sweep log at %s", path)
    return path


def get_log_path() -> Path:
    """Path of the sweep log; sets logging up on first use."""

    return configure_logging() if _LOG_PATH is None else _LOG_PATH


__all__ = ["configure_logging", "get_log_path"]
