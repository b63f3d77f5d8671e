"""Correlation measures for states whose measured party is a qubit.

Discord-type measures are evaluated through the Bloch decomposition of the
state with respect to the measured qubit ``m``::

    rho = 1/2 * sum_mu sigma_mu (x) Y_mu

Dephasing ``m`` along the unit vector ``n`` keeps ``Y_0`` and ``n . Y``, so
both the dephased purity and the post-measurement conditional states follow
directly from the four blocks ``Y_mu``.  The basis search in
:mod:`core.bloch` evaluates those closed expressions on whole grids of
directions at once.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import minimize

from core.bloch import DEFAULT_OPTIMIZER, OptimizerConfig, maximize_over_bloch
from core.qstate import (
    DensityMatrix,
    PureState,
    QubitBasis,
    SeedLike,
    hs_norm_sq,
    make_rng,
    partial_trace,
    purity,
    reorder,
)

logger = logging.getLogger(__name__)

EIGENVALUE_FLOOR = 1e-12
VALUE_TOL = 1e-9
PURE_TOL = 1e-8
_BATCH_ELEMENTS = 1 << 20

_SIGMA_Y2 = np.kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]]))


class MeasureError(ValueError):
    """Base error for correlation measure evaluation."""


class MeasuredNotQubitError(MeasureError):
    """Raised when the measured subsystem is not a qubit."""


class BadSplitError(MeasureError):
    """Raised when a bipartition does not partition the state's labels."""


class WrongDimsError(MeasureError):
    """Raised when a measure is applied to a state of the wrong shape."""


class UnsupportedMeasureError(MeasureError):
    """Raised for unknown measure names or inputs a measure does not cover."""


class MeasureName(str, Enum):
    GDISCORD = "gdiscord"
    DISCORD = "discord"
    CONCURRENCE2 = "concurrence2"

    @classmethod
    def parse(cls, value: Union[str, "MeasureName"]) -> "MeasureName":
        if isinstance(value, MeasureName):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise UnsupportedMeasureError(
                f"Unknown measure '{value}'. Expected one of: {', '.join(m.value for m in cls)}"
            ) from None

    @property
    def uses_optimizer(self) -> bool:
        return self is not MeasureName.CONCURRENCE2


@dataclass(frozen=True)
class MeasureResult:
    """Measure value with the optimal basis and optimizer bookkeeping."""

    value: float
    argmin_basis: Optional[QubitBasis] = None
    optimizer_evals: int = 0
    converged: bool = True

    def as_dict(self) -> dict:
        basis = None
        if self.argmin_basis is not None:
            basis = {"theta": self.argmin_basis.theta, "phi": self.argmin_basis.phi}
        return {
            "value": self.value,
            "argmin_basis": basis,
            "optimizer_evals": self.optimizer_evals,
            "converged": self.converged,
        }


def _clip(value: float) -> float:
    if -VALUE_TOL <= value < 0.0:
        return 0.0
    return float(value)


def _entropy_from_eigenvalues(eigenvalues: np.ndarray) -> np.ndarray:
    """Shannon entropy in bits along the last axis; values below the floor count as zero."""

    values = np.asarray(eigenvalues, dtype=float)
    mask = values > EIGENVALUE_FLOOR
    safe = np.where(mask, values, 1.0)
    return -np.sum(np.where(mask, values * np.log2(safe), 0.0), axis=-1)


def _h(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    mask = values > EIGENVALUE_FLOOR
    safe = np.where(mask, values, 1.0)
    return np.where(mask, -values * np.log2(safe), 0.0)


def vn_entropy(rho: DensityMatrix) -> float:
    """Von Neumann entropy in bits."""

    eigenvalues = np.linalg.eigvalsh(rho.matrix)
    return _clip(float(_entropy_from_eigenvalues(eigenvalues)))


def _labels(value: Union[str, Iterable[str]]) -> Tuple[str, ...]:
    if isinstance(value, str):
        return (value,)
    return tuple(value)


def mutual_information(rho: DensityMatrix, split: Tuple[Union[str, Sequence[str]], Union[str, Sequence[str]]]) -> float:
    """``S(rho_X) + S(rho_Y) - S(rho_XY)`` for the bipartition ``split = (X, Y)``."""

    left, right = (_labels(part) for part in split)
    combined = left + right
    if not left or not right or len(set(combined)) != len(combined) or set(combined) != set(rho.labels):
        raise BadSplitError(f"Split {left}|{right} does not partition labels {rho.labels}")
    value = (
        vn_entropy(partial_trace(rho, left))
        + vn_entropy(partial_trace(rho, right))
        - vn_entropy(rho)
    )
    return _clip(value)


@dataclass(frozen=True, eq=False)
class BlochBlocks:
    """``Y_0 .. Y_3`` blocks of a state relative to its measured qubit."""

    blocks: np.ndarray
    rest: DensityMatrix

    @property
    def gram(self) -> np.ndarray:
        """``G_kl = Re Tr(Y_k Y_l)`` for ``k, l`` in ``1..3``."""

        vectors = self.blocks[1:]
        return np.real(np.einsum("kij,lji->kl", vectors, vectors))

    @property
    def y0_purity(self) -> float:
        return purity(self.blocks[0])

    def conditional(self, directions: np.ndarray, sign: float) -> np.ndarray:
        """Unnormalised post-measurement states ``(Y_0 +- n . Y) / 2`` for each direction."""

        projected = np.einsum("nk,kij->nij", directions, self.blocks[1:])
        return 0.5 * (self.blocks[0][None, :, :] + sign * projected)


def _restrict(rho: DensityMatrix, measured: str, rest: Optional[Sequence[str]]) -> DensityMatrix:
    index = rho.index_of(measured)
    if rho.dims[index] != 2:
        raise MeasuredNotQubitError(
            f"Measured subsystem '{measured}' has dimension {rho.dims[index]}, expected 2"
        )
    if rest is None:
        return rho
    rest_labels = _labels(rest)
    if measured in rest_labels or not rest_labels:
        raise BadSplitError(f"Unmeasured side {rest_labels} must be nonempty and exclude '{measured}'")
    return partial_trace(rho, (measured,) + rest_labels)


def bloch_blocks(rho: DensityMatrix, measured: str) -> BlochBlocks:
    state = _restrict(rho, measured, None)
    others = tuple(label for label in state.labels if label != measured)
    if not others:
        raise BadSplitError("The unmeasured side is empty")
    ordered = reorder(state, (measured,) + others)
    rest_dim = ordered.dim // 2
    x = ordered.matrix.reshape(2, rest_dim, 2, rest_dim)
    x00, x01 = x[0, :, 0, :], x[0, :, 1, :]
    x10, x11 = x[1, :, 0, :], x[1, :, 1, :]
    blocks = np.stack([x00 + x11, x01 + x10, 1j * (x01 - x10), x00 - x11])
    rest = DensityMatrix(blocks[0], ordered.dims[1:], ordered.labels[1:])
    return BlochBlocks(blocks, rest)


# -- Geometric discord ------------------------------------------------------------

def geometric_discord(
    rho: DensityMatrix,
    measured: str,
    rest: Optional[Sequence[str]] = None,
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
) -> MeasureResult:
    """Minimal squared Hilbert-Schmidt distance to the classical-quantum states on ``measured``."""

    state = _restrict(rho, measured, rest)
    blocks = bloch_blocks(state, measured)
    gram = blocks.gram
    base = blocks.y0_purity

    def dephased_purity(directions: np.ndarray) -> np.ndarray:
        return 0.5 * (base + np.einsum("ni,ij,nj->n", directions, gram, directions))

    search = maximize_over_bloch(dephased_purity, config)
    value = _clip(purity(state) - search.value)
    return MeasureResult(value, search.basis, search.evaluations, search.converged)


def geometric_discord_closed_form(rho: DensityMatrix, measured: str) -> float:
    """``(Tr G - lambda_max(G)) / 2`` from the Bloch correlation matrix."""

    gram = bloch_blocks(rho, measured).gram
    eigenvalues = np.linalg.eigvalsh(gram)
    return _clip(0.5 * float(np.trace(gram) - eigenvalues[-1]))


def _measured_reduction(psi: PureState, measured: str) -> np.ndarray:
    try:
        index = psi.labels.index(measured)
    except ValueError:
        raise MeasureError(f"Unknown subsystem '{measured}', state has {psi.labels}") from None
    if psi.dims[index] != 2:
        raise MeasuredNotQubitError(
            f"Measured subsystem '{measured}' has dimension {psi.dims[index]}, expected 2"
        )
    tensor = np.moveaxis(psi.amplitudes.reshape(psi.dims), index, 0).reshape(2, -1)
    return tensor @ tensor.conj().T


def geometric_discord_pure(psi: PureState, measured: str) -> float:
    """``2 (1 - p) p`` with ``p`` the larger Schmidt weight of the measured qubit."""

    eigenvalues = np.linalg.eigvalsh(_measured_reduction(psi, measured))
    p = float(np.clip(eigenvalues[-1], 0.0, 1.0))
    return _clip(2.0 * (1.0 - p) * p)


# -- Discord --------------------------------------------------------------------

def _classical_correlation_batch(blocks: BlochBlocks, directions: np.ndarray) -> np.ndarray:
    rest_dim = blocks.blocks.shape[1]
    rest_entropy = vn_entropy(blocks.rest)
    chunk = max(1, _BATCH_ELEMENTS // (rest_dim * rest_dim))
    results = np.empty(directions.shape[0])
    for start in range(0, directions.shape[0], chunk):
        part = directions[start : start + chunk]
        conditional_entropy = np.zeros(part.shape[0])
        for sign in (1.0, -1.0):
            block = blocks.conditional(part, sign)
            eigenvalues = np.linalg.eigvalsh(block)
            weight = np.trace(block, axis1=1, axis2=2).real
            conditional_entropy += _h(eigenvalues).sum(axis=-1) - _h(weight)
        results[start : start + chunk] = rest_entropy - conditional_entropy
    return results


def classical_correlation(rho: DensityMatrix, measured: str, basis: QubitBasis) -> float:
    """Mutual information left after measuring ``measured`` in ``basis``."""

    blocks = bloch_blocks(rho, measured)
    return float(_classical_correlation_batch(blocks, basis.bloch_vector()[None, :])[0])


def discord(
    rho: DensityMatrix,
    measured: str,
    rest: Optional[Sequence[str]] = None,
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
) -> MeasureResult:
    """Projective-measurement discord ``I(rho) - max_n J(n)``; ``argmin_basis`` is the best measurement."""

    state = _restrict(rho, measured, rest)
    blocks = bloch_blocks(state, measured)
    search = maximize_over_bloch(lambda directions: _classical_correlation_batch(blocks, directions), config)
    total = (
        vn_entropy(partial_trace(state, measured))
        + vn_entropy(blocks.rest)
        - vn_entropy(state)
    )
    return MeasureResult(_clip(total - search.value), search.basis, search.evaluations, search.converged)


# -- Entanglement baselines ---------------------------------------------------------

def concurrence_2q(rho: DensityMatrix) -> float:
    """Wootters concurrence of a two-qubit state."""

    if rho.dims != (2, 2):
        raise WrongDimsError(f"Concurrence needs a two-qubit state, got dims {rho.dims}")
    matrix = rho.matrix
    eigenvalues, eigenvectors = np.linalg.eigh(matrix)
    root = (eigenvectors * np.sqrt(np.clip(eigenvalues, 0.0, None))) @ eigenvectors.conj().T
    flipped = _SIGMA_Y2 @ matrix.conj() @ _SIGMA_Y2
    product = root @ flipped @ root
    spectrum = np.sqrt(np.clip(np.linalg.eigvalsh((product + product.conj().T) / 2), 0.0, None))[::-1]
    return float(min(1.0, max(0.0, spectrum[0] - spectrum[1] - spectrum[2] - spectrum[3])))


def _tangle_from_reduced(reduced: np.ndarray) -> float:
    det = float((reduced[0, 0] * reduced[1, 1]).real - abs(reduced[0, 1]) ** 2)
    return float(min(1.0, max(0.0, 4.0 * det)))


def tangle_pure(psi: PureState, head: str) -> float:
    """Squared concurrence ``4 det(rho_head)`` of the head|rest split of a pure three-qubit state."""

    if psi.dims != (2, 2, 2):
        raise WrongDimsError(f"Tangle needs a three-qubit pure state, got dims {psi.dims}")
    return _tangle_from_reduced(_measured_reduction(psi, head))


# -- Dispatcher ---------------------------------------------------------------------

def measure(
    rho: DensityMatrix,
    name: Union[str, MeasureName],
    measured: str,
    rest: Optional[Sequence[str]] = None,
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
) -> MeasureResult:
    """Evaluate ``name`` with ``measured`` as the head party."""

    kind = MeasureName.parse(name)
    if kind is MeasureName.GDISCORD:
        return geometric_discord(rho, measured, rest, config)
    if kind is MeasureName.DISCORD:
        return discord(rho, measured, rest, config)

    state = _restrict(rho, measured, rest)
    if state.dims == (2, 2):
        value = concurrence_2q(state)
        return MeasureResult(value * value)
    if state.dims == (2, 2, 2):
        if abs(purity(state) - 1.0) > PURE_TOL:
            raise UnsupportedMeasureError(
                "concurrence2 on a three-qubit state needs a pure state (tangle of the head split)"
            )
        return MeasureResult(_tangle_from_reduced(partial_trace(state, measured).matrix))
    raise WrongDimsError(f"concurrence2 supports two- and three-qubit states, got dims {state.dims}")


# -- Brute-force oracle ---------------------------------------------------------------

def _cq_state(params: np.ndarray, rest_dim: int) -> np.ndarray:
    theta, phi = params[:2]
    raw = params[2:].reshape(2, 2, rest_dim, rest_dim)
    factors = raw[:, 0] + 1j * raw[:, 1]
    blocks = np.einsum("kij,klj->kil", factors, factors.conj())
    total = float(np.trace(blocks, axis1=1, axis2=2).real.sum())
    blocks = blocks / total
    projectors = QubitBasis(float(theta), float(phi)).projectors()
    return np.kron(projectors[0], blocks[0]) + np.kron(projectors[1], blocks[1])


def cq_distance_bruteforce(
    rho: DensityMatrix,
    measured: str,
    seed: SeedLike = 0,
    starts: int = 6,
) -> float:
    """Minimise the distance to ``sum_i Pi_i (x) W_i`` over the basis and all PSD blocks ``W_i``.

    Independent of the dephasing construction; used to cross-check
    :func:`geometric_discord`.
    """

    blocks = bloch_blocks(rho, measured)
    rest_dim = blocks.rest.dim
    ordered = reorder(rho, (measured,) + blocks.rest.labels).matrix
    rng = make_rng(seed)
    best = math.inf
    golden = math.pi * (3.0 - math.sqrt(5.0))
    for start in range(starts):
        z = 1.0 - (start + 0.5) / starts
        initial_direction = (math.acos(z), (golden * start) % (2 * math.pi))
        x0 = np.concatenate([initial_direction, rng.standard_normal(4 * rest_dim * rest_dim)])
        result = minimize(
            lambda params: hs_norm_sq(ordered, _cq_state(params, rest_dim)),
            x0,
            method="BFGS",
            options={"gtol": 1e-9, "maxiter": 2000},
        )
        best = min(best, float(result.fun))
    logger.debug("Brute-force classical-quantum distance %.8g over %d starts", best, starts)
    return _clip(best)


__all__ = [
    "BadSplitError",
    "BlochBlocks",
    "MeasureError",
    "MeasureName",
    "MeasureResult",
    "MeasuredNotQubitError",
    "UnsupportedMeasureError",
    "WrongDimsError",
    "bloch_blocks",
    "classical_correlation",
    "concurrence_2q",
    "cq_distance_bruteforce",
    "discord",
    "geometric_discord",
    "geometric_discord_closed_form",
    "geometric_discord_pure",
    "measure",
    "mutual_information",
    "tangle_pure",
    "vn_entropy",
]
