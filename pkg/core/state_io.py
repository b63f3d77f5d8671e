"""Reading and writing state files.

Schema::

    {"kind": "density" | "pure" | "decomposition",
     "dims": [...], "labels": ["A", ...], "data": ...}

Complex entries are ``[re, im]`` pairs.  Density data is a list of rows,
pure data a flat amplitude list and decomposition data a list of
``{"weight", "psi", "phi"}`` objects on the two parties named by ``labels``.
"""

from __future__ import annotations

import json
import logging
import math
from pathlib import Path
from typing import List, Mapping, Sequence, Union

import numpy as np

from core.families import DecompositionTerm, FamilyError, SeparableDecomposition
from core.qstate import DensityMatrix, PureState, QStateError, make_pure_state, validate_density
from core.reports import atomic_write_text

logger = logging.getLogger(__name__)

StateObject = Union[DensityMatrix, PureState, SeparableDecomposition]
KINDS = ("density", "pure", "decomposition")


class StateFileError(RuntimeError):
    """Base error for state file handling."""


class ParseError(StateFileError):
    """Raised when a state file is not well-formed."""


class ValidationError(StateFileError):
    """Raised when a well-formed file describes an invalid state."""


def _complex(value: object, where: str) -> complex:
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected a number or [re, im] pair")
    if isinstance(value, (int, float)):
        number = complex(float(value), 0.0)
    elif isinstance(value, (list, tuple)) and len(value) == 2 and all(
        isinstance(part, (int, float)) and not isinstance(part, bool) for part in value
    ):
        number = complex(float(value[0]), float(value[1]))
    else:
        raise ParseError(f"{where}: expected a number or [re, im] pair")
    if not (math.isfinite(number.real) and math.isfinite(number.imag)):
        raise ParseError(f"{where}: non-finite value")
    return number


def _vector(values: object, where: str) -> np.ndarray:
    if not isinstance(values, list) or not values:
        raise ParseError(f"{where}: expected a nonempty list")
    return np.array([_complex(item, f"{where}[{index}]") for index, item in enumerate(values)], dtype=complex)


def _matrix(rows: object, where: str) -> np.ndarray:
    if not isinstance(rows, list) or not rows:
        raise ParseError(f"{where}: expected a nonempty list of rows")
    parsed = [_vector(row, f"{where}[{index}]") for index, row in enumerate(rows)]
    width = len(parsed)
    for index, row in enumerate(parsed):
        if row.size != width:
            raise ParseError(f"{where}[{index}]: expected {width} entries, got {row.size}")
    return np.vstack(parsed)


def _dims(value: object) -> List[int]:
    if not isinstance(value, list) or not value:
        raise ParseError("dims: expected a nonempty list of positive integers")
    dims = []
    for index, item in enumerate(value):
        if isinstance(item, bool) or not isinstance(item, int) or item < 1:
            raise ParseError(f"dims[{index}]: expected a positive integer")
        dims.append(item)
    return dims


def _labels(value: object, count: int) -> List[str]:
    if value is None:
        return [chr(ord("A") + index) for index in range(count)]
    if not isinstance(value, list) or not all(isinstance(item, str) for item in value):
        raise ParseError("labels: expected a list of strings")
    if len(value) != count:
        raise ParseError(f"labels: expected {count} names, got {len(value)}")
    return list(value)


def parse_state(document: Mapping[str, object]) -> StateObject:
    """Build the validated domain object described by a decoded state file."""

    if not isinstance(document, Mapping):
        raise ParseError("state file must hold a JSON object")
    kind = document.get("kind")
    if kind not in KINDS:
        raise ParseError(f"kind: expected one of {', '.join(KINDS)}, got {kind!r}")
    if "data" not in document:
        raise ParseError("data: missing")
    dims = _dims(document.get("dims"))
    labels = _labels(document.get("labels"), len(dims))
    data = document["data"]

    if kind == "density":
        matrix = _matrix(data, "data")
        try:
            return validate_density(matrix, dims, labels)
        except QStateError as exc:
            raise ValidationError(f"data: {exc}") from exc

    if kind == "pure":
        vector = _vector(data, "data")
        try:
            return make_pure_state(vector, dims, labels)
        except QStateError as exc:
            raise ValidationError(f"data: {exc}") from exc

    if len(dims) != 2:
        raise ParseError("dims: a decomposition needs exactly two parties")
    if not isinstance(data, list) or not data:
        raise ParseError("data: expected a nonempty list of terms")
    terms = []
    for index, entry in enumerate(data):
        where = f"data[{index}]"
        if not isinstance(entry, Mapping):
            raise ParseError(f"{where}: expected an object with weight, psi and phi")
        weight = entry.get("weight")
        if isinstance(weight, bool) or not isinstance(weight, (int, float)):
            raise ParseError(f"{where}.weight: expected a number")
        states = []
        for side, dim, label in (("psi", dims[0], labels[0]), ("phi", dims[1], labels[1])):
            vector = _vector(entry.get(side), f"{where}.{side}")
            if vector.size != dim:
                raise ValidationError(f"{where}.{side}: expected {dim} amplitudes, got {vector.size}")
            try:
                states.append(make_pure_state(vector, [dim], [label]))
            except QStateError as exc:
                raise ValidationError(f"{where}.{side}: {exc}") from exc
        terms.append(DecompositionTerm(float(weight), states[0], states[1]))
    try:
        return SeparableDecomposition(tuple(terms))
    except FamilyError as exc:
        raise ValidationError(f"data: {exc}") from exc


def parse_state_file(path: str | Path) -> StateObject:
    file_path = Path(path)
    try:
        with open(file_path, "r", encoding="utf-8") as handle:
            document = json.load(handle)
    except FileNotFoundError as exc:
        raise ParseError(f"{file_path}: file not found") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{file_path}: invalid JSON ({exc})") from exc
    state = parse_state(document)
    logger.debug("Loaded %s state from %s", document.get("kind"), file_path)
    return state


def _pairs(values: np.ndarray) -> List[List[float]]:
    return [[float(value.real), float(value.imag)] for value in np.asarray(values, dtype=complex).reshape(-1)]


def serialize_state(state: StateObject, labels: Sequence[str] = ("A", "C")) -> dict:
    """State file object for ``state``; ``labels`` names the parties of a decomposition."""

    if isinstance(state, DensityMatrix):
        return {
            "kind": "density",
            "dims": list(state.dims),
            "labels": list(state.labels),
            "data": [_pairs(row) for row in state.matrix],
        }
    if isinstance(state, PureState):
        return {
            "kind": "pure",
            "dims": list(state.dims),
            "labels": list(state.labels),
            "data": _pairs(state.amplitudes),
        }
    if isinstance(state, SeparableDecomposition):
        return {
            "kind": "decomposition",
            "dims": [state.dim_a, state.dim_c],
            "labels": list(labels),
            "data": [
                {"weight": term.weight, "psi": _pairs(term.psi.amplitudes), "phi": _pairs(term.phi.amplitudes)}
                for term in state.terms
            ],
        }
    raise StateFileError(f"Cannot serialise object of type {type(state).__name__}")


def write_state_file(path: str | Path, state: StateObject) -> Path:
    return atomic_write_text(path, json.dumps(serialize_state(state), indent=2) + "\n")


__all__ = [
    "KINDS",
    "ParseError",
    "StateFileError",
    "StateObject",
    "ValidationError",
    "parse_state",
    "parse_state_file",
    "serialize_state",
    "write_state_file",
]
