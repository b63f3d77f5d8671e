"""Locations of the Monocorr settings and log files."""
from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Iterable

logger = logging.getLogger(__name__)

_APP_ENV_VARS: Iterable[str] = ("LOCALAPPDATA", "APPDATA")


def _detect_base_directory() -> Path:
    override = os.environ.get("MONOCORR_HOME")
    if override:
        return Path(override).expanduser().resolve()
    for env_var in _APP_ENV_VARS:
        value = os.environ.get(env_var)
        if value:
            return Path(value).expanduser().resolve() / "Monocorr"
    return Path.home().resolve() / ".monocorr"


APP_DIR: Path = _detect_base_directory()
CONFIG_DIR: Path = APP_DIR / "config"
LOG_DIR: Path = APP_DIR / "logs"


def ensure_directory(path: Path) -> Path:
    """Ensure that ``path`` exists, returning the :class:`~pathlib.Path`."""

    path.mkdir(parents=True, exist_ok=True)
    return path


def _inside(directory: Path, parts: Iterable[str]) -> Path:
    target = ensure_directory(directory).joinpath(*parts)
    if not target.parent.exists():
        target.parent.mkdir(parents=True, exist_ok=True)
    return target


def config_path(*parts: str) -> Path:
    """Return a path inside the configuration directory."""

    return _inside(CONFIG_DIR, parts)


def logs_path(*parts: str) -> Path:
    """Return a path inside the application log directory."""

    return _inside(LOG_DIR, parts)


__all__ = [
    "APP_DIR",
    "CONFIG_DIR",
    "LOG_DIR",
    "config_path",
    "ensure_directory",
    "logs_path",
]
