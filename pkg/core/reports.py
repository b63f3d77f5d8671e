"""Report writers producing byte-stable JSON and CSV files.

Numbers are written with 17 significant digits so every double round-trips.
Files are written once through a temporary sibling and ``os.replace``.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import os
import tempfile
from enum import Enum
from pathlib import Path
from typing import Iterable, List, Mapping, Sequence

import numpy as np

from core.version import __version__

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("p", "a", "f", "g_re", "g_im", "gamma", "q_abc", "q_ab", "q_ac", "deficit", "seed")


class ReportError(RuntimeError):
    """Base error for report generation."""


class IoError(ReportError):
    """Raised when a report file cannot be written."""


def format_float(value: float) -> str:
    if not math.isfinite(value):
        raise ReportError(f"Cannot write non-finite value {value!r}")
    return format(float(value), ".17g")


def _cell(value: object) -> str:
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    return format_float(float(value))  # type: ignore[arg-type]


def _emit(value: object, indent: int, level: int, out: List[str]) -> None:
    pad = " " * (indent * (level + 1))
    closing = " " * (indent * level)
    if value is None:
        out.append("null")
    elif isinstance(value, (bool, np.bool_)):
        out.append("true" if value else "false")
    elif isinstance(value, Enum):
        _emit(value.value, indent, level, out)
    elif isinstance(value, (int, np.integer)):
        out.append(str(int(value)))
    elif isinstance(value, (float, np.floating)):
        out.append(format_float(float(value)))
    elif isinstance(value, (str, Path)):
        out.append(json.dumps(str(value)))
    elif isinstance(value, Mapping):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        items = list(value.items())
        for index, (key, item) in enumerate(items):
            out.append(f"{pad}{json.dumps(str(key))}: ")
            _emit(item, indent, level + 1, out)
            out.append(",\n" if index < len(items) - 1 else "\n")
        out.append(f"{closing}}}")
    elif isinstance(value, (list, tuple, np.ndarray)):
        items = list(value)
        if not items:
            out.append("[]")
            return
        out.append("[\n")
        for index, item in enumerate(items):
            out.append(pad)
            _emit(item, indent, level + 1, out)
            out.append(",\n" if index < len(items) - 1 else "\n")
        out.append(f"{closing}]")
    else:
        raise ReportError(f"Cannot serialise value of type {type(value).__name__}")


def to_json_text(value: object, indent: int = 2) -> str:
    """Deterministic JSON text with 17-significant-digit floats."""

    out: List[str] = []
    _emit(value, indent, 0, out)
    out.append("\n")
    return "".join(out)


def build_report(command: str, header: Mapping[str, object], payload: object) -> dict:
    """Top-level report object: version, command, replay header and payload."""

    return {
        "tool_version": __version__,
        "command": command,
        "seed": header.get("seed"),
        "tolerances": header.get("tolerances", {}),
        "optimizer": header.get("optimizer", {}),
        "payload": payload,
    }


def atomic_write_text(path: str | Path, text: str) -> Path:
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    try:
        directory.mkdir(parents=True, exist_ok=True)
        handle, temp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=directory)
        try:
            with os.fdopen(handle, "w", encoding="utf-8", newline="") as stream:
                stream.write(text)
            os.replace(temp_name, target)
        except BaseException:
            if os.path.exists(temp_name):
                os.unlink(temp_name)
            raise
    except OSError as exc:
        raise IoError(f"Could not write {target}: {exc}") from exc
    logger.info("Wrote %s", target)
    return target


def write_json_report(path: str | Path, report: object) -> Path:
    return atomic_write_text(path, to_json_text(report))


def csv_text(rows: Iterable[Mapping[str, float]], columns: Sequence[str] = CSV_COLUMNS) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row[column]) for column in columns])
    return buffer.getvalue()


def write_csv_report(path: str | Path, rows: Iterable[Mapping[str, float]]) -> Path:
    return atomic_write_text(path, csv_text(rows))


__all__ = [
    "CSV_COLUMNS",
    "IoError",
    "ReportError",
    "atomic_write_text",
    "build_report",
    "csv_text",
    "format_float",
    "to_json_text",
    "write_csv_report",
    "write_json_report",
]
