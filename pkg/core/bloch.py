"""Two-stage search over qubit measurement directions.

A coarse ``theta x phi`` grid is evaluated in one vectorised call, then the
best grid maxima, one per measurement axis, are refined with Nelder-Mead (``scipy.optimize.minimize``).
Objectives receive an ``(N, 3)`` array of unit Bloch vectors and return ``N``
values to maximise.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, Dict

import numpy as np
from scipy.optimize import minimize

from core.qstate import QubitBasis

logger = logging.getLogger(__name__)

BatchObjective = Callable[[np.ndarray], np.ndarray]

_SAME_AXIS = 0.99


@dataclass(frozen=True)
class OptimizerConfig:
    grid_theta: int = 64
    grid_phi: int = 128
    starts: int = 3
    max_steps: int = 200
    fatol: float = 1e-10
    tolerance: float = 1e-5

    def __post_init__(self) -> None:
        if self.grid_theta < 2 or self.grid_phi < 2:
            raise ValueError("Optimizer grid must be at least 2 x 2")
        if self.starts < 1 or self.max_steps < 1:
            raise ValueError("Optimizer needs at least one start and one step")

    def coarse(self) -> "OptimizerConfig":
        """Single-start 16 x 32 variant for objectives with a unique maximum."""

        return replace(self, grid_theta=16, grid_phi=32, starts=1)

    def as_dict(self) -> Dict[str, object]:
        return {
            "grid": [self.grid_theta, self.grid_phi],
            "refinements": self.starts,
            "max_steps": self.max_steps,
            "fatol": self.fatol,
            "tolerance": self.tolerance,
        }


DEFAULT_OPTIMIZER = OptimizerConfig()


@dataclass(frozen=True)
class BasisSearchResult:
    value: float
    basis: QubitBasis
    evaluations: int
    converged: bool


def bloch_directions(theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    sin_theta = np.sin(theta)
    return np.stack([sin_theta * np.cos(phi), sin_theta * np.sin(phi), np.cos(theta)], axis=-1)


def _grid_local_maxima(values: np.ndarray) -> np.ndarray:
    """Flat indices of grid points no smaller than their eight neighbours; phi wraps around."""

    padded = np.pad(values, ((1, 1), (0, 0)), mode="edge")
    keep = np.ones(values.shape, dtype=bool)
    for d_theta in (-1, 0, 1):
        for d_phi in (-1, 0, 1):
            if d_theta or d_phi:
                shifted = np.roll(padded, d_phi, axis=1)[1 + d_theta : 1 + d_theta + values.shape[0]]
                keep &= values >= shifted
    return np.flatnonzero(keep)


def _select_starts(values: np.ndarray, directions: np.ndarray, config: OptimizerConfig) -> list:
    """Best grid maxima with pairwise distinct measurement axes, at most ``config.starts``."""

    candidates = _grid_local_maxima(values.reshape(config.grid_theta, config.grid_phi))
    candidates = candidates[np.argsort(values[candidates], kind="stable")[::-1]]
    chosen: list = []
    for index in candidates:
        if all(abs(float(directions[index] @ directions[other])) < _SAME_AXIS for other in chosen):
            chosen.append(int(index))
            if len(chosen) == config.starts:
                break
    return chosen or [int(np.argmax(values))]


def maximize_over_bloch(objective: BatchObjective, config: OptimizerConfig = DEFAULT_OPTIMIZER) -> BasisSearchResult:
    thetas = np.linspace(0.0, math.pi, config.grid_theta)
    phis = np.linspace(0.0, 2.0 * math.pi, config.grid_phi, endpoint=False)
    theta_grid, phi_grid = np.meshgrid(thetas, phis, indexing="ij")
    theta_flat = theta_grid.reshape(-1)
    phi_flat = phi_grid.reshape(-1)
    directions = bloch_directions(theta_flat, phi_flat)
    values = np.asarray(objective(directions), dtype=float)
    evaluations = int(values.size)

    order = _select_starts(values, directions, config)
    best_value = float(values[order[0]])
    best_angles = (float(theta_flat[order[0]]), float(phi_flat[order[0]]))
    step_theta = 0.5 * math.pi / (config.grid_theta - 1)
    step_phi = 0.5 * 2.0 * math.pi / config.grid_phi
    converged = True

    def negative(angles: np.ndarray) -> float:
        direction = bloch_directions(angles[0], angles[1])[None, :]
        return -float(objective(direction)[0])

    for index in order:
        start = np.array([theta_flat[index], phi_flat[index]])
        simplex = np.array([start, start + [step_theta, 0.0], start + [0.0, step_phi]])
        result = minimize(
            negative,
            start,
            method="Nelder-Mead",
            options={
                "maxiter": config.max_steps,
                "fatol": config.fatol,
                "xatol": np.inf,
                "initial_simplex": simplex,
            },
        )
        evaluations += int(result.nfev)
        converged = converged and bool(result.success)
        logger.debug(
            "Refinement from (%.4f, %.4f): value %.12g after %d steps",
            start[0],
            start[1],
            -result.fun,
            result.nit,
        )
        if -float(result.fun) > best_value:
            best_value = -float(result.fun)
            best_angles = (float(result.x[0]), float(result.x[1]))

    if not converged:
        logger.warning("Basis refinement hit the %d step limit", config.max_steps)
    return BasisSearchResult(
        value=best_value,
        basis=QubitBasis.from_angles(*best_angles),
        evaluations=evaluations,
        converged=converged,
    )


__all__ = [
    "BasisSearchResult",
    "BatchObjective",
    "DEFAULT_OPTIMIZER",
    "OptimizerConfig",
    "bloch_directions",
    "maximize_over_bloch",
]
