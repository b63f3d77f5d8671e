"""Run configuration helpers for Monocorr."""
from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Dict, Mapping, Optional

from core import app_paths
from core.bloch import OptimizerConfig
from core.measures import MeasureName, UnsupportedMeasureError
from core.monogamy import deficit_tolerance
from core.qstate import EXACT_TOL, HERMITIAN_TOL, TRACE_TOL


logger = logging.getLogger(__name__)


DEFAULT_SETTINGS_PATH = os.getenv(
    "MONOCORR_SETTINGS",
    str(app_paths.config_path("settings.json")),
)

_SEED_MASK = (1 << 64) - 1
OUTPUT_FORMATS = ("json", "csv")


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name, "")
    try:
        return int(value) if value.strip() else default
    except ValueError:
        logger.warning("Ignoring non-integer %s=%r", name, value)
        return default


DEFAULT_SEED = _env_int("MONOCORR_SEED", 42) & _SEED_MASK
DEFAULT_WORKERS = max(1, _env_int("MONOCORR_WORKERS", 1))

DEFAULT_CONFIG = {
    "seed": 42,
    "samples": 10000,
    "measure": "gdiscord",
    "workers": 1,
    "tolerances": {
        "deficit": None,
    },
    "optimizer": {
        "grid_theta": 64,
        "grid_phi": 128,
        "refinements": 3,
        "max_steps": 200,
        "fatol": 1e-10,
        "tolerance": 1e-5,
    },
    "output": {
        "format": "csv",
    },
}


@dataclass
class Tolerances:
    """Numerical tolerances embedded in every report header.

    The structural tolerances are fixed by :mod:`core.qstate`; only the
    deficit tolerance can be overridden.
    """

    hermitian: float = HERMITIAN_TOL
    trace: float = TRACE_TOL
    exact: float = EXACT_TOL
    deficit: Optional[float] = None

    def as_dict(self) -> Dict[str, object]:
        return {
            "hermitian": self.hermitian,
            "trace": self.trace,
            "exact": self.exact,
            "deficit": self.deficit,
        }


@dataclass
class RunConfig:
    seed: int = DEFAULT_SEED
    samples: int = 10000
    measure: str = MeasureName.GDISCORD.value
    workers: int = DEFAULT_WORKERS
    tolerances: Tolerances = field(default_factory=Tolerances)
    optimizer: OptimizerConfig = field(default_factory=OptimizerConfig)
    output_format: str = "csv"
    output: Optional[Path] = None

    def with_overrides(self, **changes: object) -> "RunConfig":
        """Return a copy with every non-``None`` keyword applied."""

        return replace(self, **{key: value for key, value in changes.items() if value is not None})

    def header(self) -> Dict[str, object]:
        """Replay header; an unset deficit tolerance is written as the value applied."""

        tolerances = self.tolerances.as_dict()
        if self.tolerances.deficit is None:
            tolerances["deficit"] = deficit_tolerance(self.measure, self.optimizer)
        tolerances["deficit_measure"] = self.measure
        return {
            "seed": self.seed,
            "tolerances": tolerances,
            "optimizer": self.optimizer.as_dict(),
        }


def _ensure_default_settings(path: str) -> Dict[str, object]:
    if not os.path.exists(path):
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(DEFAULT_CONFIG, handle, indent=2)
        return json.loads(json.dumps(DEFAULT_CONFIG))
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except json.JSONDecodeError as exc:
        logger.warning("Settings file %s is not valid JSON (%s); using defaults", path, exc)
        return json.loads(json.dumps(DEFAULT_CONFIG))
    if not isinstance(data, dict):
        logger.warning("Settings file %s does not hold an object; using defaults", path)
        return json.loads(json.dumps(DEFAULT_CONFIG))
    return data


def _clamped_int(data: Mapping[str, object], key: str, default: int, low: int, high: int) -> int:
    try:
        value = int(data.get(key, default))  # type: ignore[arg-type]
    except (TypeError, ValueError):
        return default
    return max(low, min(high, value))


def _float(data: Mapping[str, object], key: str, default: float) -> float:
    try:
        value = float(data.get(key, default))  # type: ignore[arg-type]
    except (TypeError, ValueError):
        return default
    return value if value > 0 else default


def _parse_optimizer(data: Mapping[str, object]) -> OptimizerConfig:
    defaults = DEFAULT_CONFIG["optimizer"]
    return OptimizerConfig(
        grid_theta=_clamped_int(data, "grid_theta", defaults["grid_theta"], 2, 4096),
        grid_phi=_clamped_int(data, "grid_phi", defaults["grid_phi"], 2, 8192),
        starts=_clamped_int(data, "refinements", defaults["refinements"], 1, 64),
        max_steps=_clamped_int(data, "max_steps", defaults["max_steps"], 1, 100000),
        fatol=_float(data, "fatol", defaults["fatol"]),
        tolerance=_float(data, "tolerance", defaults["tolerance"]),
    )


def _parse_measure(value: object) -> str:
    try:
        return MeasureName.parse(str(value)).value
    except UnsupportedMeasureError:
        logger.warning("Unknown measure %r in settings; using %s", value, DEFAULT_CONFIG["measure"])
        return str(DEFAULT_CONFIG["measure"])


def load_run_config(path: str = DEFAULT_SETTINGS_PATH) -> RunConfig:
    data = _ensure_default_settings(path)
    optimizer = data.get("optimizer", {})
    tolerances = data.get("tolerances", {})
    output = data.get("output", {})
    if not isinstance(optimizer, Mapping):
        optimizer = {}
    if not isinstance(tolerances, Mapping):
        tolerances = {}
    if not isinstance(output, Mapping):
        output = {}

    try:
        seed_value = int(data.get("seed", DEFAULT_SEED)) & _SEED_MASK  # type: ignore[arg-type]
    except (TypeError, ValueError):
        seed_value = DEFAULT_SEED
    seed_value = _env_int("MONOCORR_SEED", seed_value) & _SEED_MASK
    workers = max(1, _env_int("MONOCORR_WORKERS", _clamped_int(data, "workers", 1, 1, 256)))

    deficit_tol = tolerances.get("deficit")
    output_format = str(output.get("format", DEFAULT_CONFIG["output"]["format"])).lower()
    if output_format not in OUTPUT_FORMATS:
        output_format = str(DEFAULT_CONFIG["output"]["format"])

    return RunConfig(
        seed=seed_value,
        samples=_clamped_int(data, "samples", DEFAULT_CONFIG["samples"], 1, 10**9),
        measure=_parse_measure(data.get("measure", DEFAULT_CONFIG["measure"])),
        workers=workers,
        tolerances=Tolerances(deficit=float(deficit_tol) if isinstance(deficit_tol, (int, float)) else None),
        optimizer=_parse_optimizer(optimizer),
        output_format=output_format,
    )


__all__ = [
    "DEFAULT_CONFIG",
    "DEFAULT_SEED",
    "DEFAULT_SETTINGS_PATH",
    "DEFAULT_WORKERS",
    "OUTPUT_FORMATS",
    "RunConfig",
    "Tolerances",
    "load_run_config",
]
