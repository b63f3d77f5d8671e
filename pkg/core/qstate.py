"""Dense state manipulation for small multipartite quantum registers.

Every other Monocorr module builds on the helpers defined here.  The module
keeps a deliberately small surface:

* :class:`DensityMatrix` and :class:`PureState` carry a dense numpy array
  together with an explicit, ordered list of subsystem dimensions and labels.
  Subsystems are only ever addressed by label and never reordered implicitly;
  :func:`reorder` is the single place where a permutation happens.
* :func:`validate_density` is the checked entry point for matrices coming from
  outside (files, user code).  Operations in this module produce states that
  satisfy the validity invariants by construction and therefore skip the
  spectral check.
* Tolerances are global: ``HERMITIAN_TOL`` for hermiticity and positivity,
  ``TRACE_TOL`` for the trace and ``EXACT_TOL`` for algebraic identities.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

logger = logging.getLogger(__name__)

HERMITIAN_TOL = 1e-9
TRACE_TOL = 1e-7
EXACT_TOL = 1e-12

ComplexMatrix = np.ndarray
SeedLike = Union[None, int, np.integer, np.random.SeedSequence, np.random.Generator]


class QStateError(ValueError):
    """Base error raised for invalid states and operations."""


class _MagnitudeError(QStateError):
    def __init__(self, message: str, magnitude: float) -> None:
        super().__init__(message)
        self.magnitude = float(magnitude)


class NotHermitianError(_MagnitudeError):
    """Raised when ``max |M - M^dagger|`` exceeds ``HERMITIAN_TOL``."""


class NotUnitTraceError(_MagnitudeError):
    """Raised when ``|Tr M - 1|`` exceeds ``TRACE_TOL``."""


class NotPositiveError(_MagnitudeError):
    """Raised when the smallest eigenvalue is below ``-HERMITIAN_TOL``."""


class DimensionMismatchError(QStateError):
    """Raised when matrix shapes and subsystem dimensions disagree."""


class UnknownLabelError(QStateError):
    """Raised when a subsystem label is not part of the state."""


class DuplicateLabelError(QStateError):
    """Raised when two subsystems would share a label."""


class TargetNotQubitError(QStateError):
    """Raised when a qubit-only operation targets a larger subsystem."""


class IncompleteChannelError(_MagnitudeError):
    """Raised when Kraus operators do not satisfy completeness."""


def default_labels(count: int) -> Tuple[str, ...]:
    """Return ``A, B, C, ...`` for ``count`` subsystems."""

    if count <= 26:
        return tuple(chr(ord("A") + index) for index in range(count))
    return tuple(f"S{index}" for index in range(count))


def make_rng(seed: SeedLike) -> np.random.Generator:
    """Return a numpy generator; integer seeds are reduced to 64 bits."""

    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, (int, np.integer)):
        return np.random.default_rng(int(seed) % (1 << 64))
    return np.random.default_rng(seed)


def _normalise_dims(dims: Iterable[int]) -> Tuple[int, ...]:
    result = tuple(int(value) for value in dims)
    if not result or any(value < 1 for value in result):
        raise DimensionMismatchError(f"Subsystem dimensions must be positive and nonempty, got {result}")
    return result


def _normalise_labels(labels: Optional[Iterable[str]], count: int) -> Tuple[str, ...]:
    if labels is None:
        return default_labels(count)
    result = tuple(str(label) for label in labels)
    if len(result) != count:
        raise DimensionMismatchError(f"Expected {count} labels, got {len(result)}")
    if len(set(result)) != len(result):
        raise DuplicateLabelError(f"Subsystem labels must be unique, got {result}")
    return result


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite operator on labelled subsystems."""

    matrix: np.ndarray
    dims: Tuple[int, ...]
    labels: Tuple[str, ...]

    def __post_init__(self) -> None:
        dims = _normalise_dims(self.dims)
        labels = _normalise_labels(self.labels, len(dims))
        matrix = np.asarray(self.matrix, dtype=complex)
        total = math.prod(dims)
        if matrix.shape != (total, total):
            raise DimensionMismatchError(
                f"Matrix shape {matrix.shape} does not match dims {dims} (product {total})"
            )
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabelError(f"Unknown subsystem '{label}', state has {self.labels}") from None

    def dim_of(self, label: str) -> int:
        return self.dims[self.index_of(label)]

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def purity(self) -> float:
        return purity(self)


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalised state vector on labelled subsystems."""

    amplitudes: np.ndarray
    dims: Tuple[int, ...]
    labels: Tuple[str, ...]

    def __post_init__(self) -> None:
        dims = _normalise_dims(self.dims)
        labels = _normalise_labels(self.labels, len(dims))
        amplitudes = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amplitudes.shape[0] != math.prod(dims):
            raise DimensionMismatchError(
                f"Vector length {amplitudes.shape[0]} does not match dims {dims}"
            )
        object.__setattr__(self, "amplitudes", amplitudes)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "labels", labels)

    @property
    def norm_error(self) -> float:
        return abs(float(np.vdot(self.amplitudes, self.amplitudes).real) - 1.0)

    def density(self) -> DensityMatrix:
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()), self.dims, self.labels)


def make_pure_state(
    amplitudes: Sequence[complex] | np.ndarray,
    dims: Sequence[int],
    labels: Optional[Sequence[str]] = None,
    *,
    normalise: bool = False,
) -> PureState:
    """Build a :class:`PureState`, checking the unit-norm invariant."""

    vector = np.asarray(amplitudes, dtype=complex).reshape(-1)
    norm = float(np.linalg.norm(vector))
    if normalise:
        if norm == 0.0:
            raise NotUnitTraceError("Cannot normalise the zero vector", 1.0)
        vector = vector / norm
    elif abs(norm**2 - 1.0) > HERMITIAN_TOL:
        raise NotUnitTraceError(f"State vector norm^2 deviates from 1 by {abs(norm**2 - 1.0):.3e}", abs(norm**2 - 1.0))
    dims_tuple = _normalise_dims(dims)
    return PureState(vector, dims_tuple, _normalise_labels(labels, len(dims_tuple)))


def as_density(state: Union[DensityMatrix, PureState]) -> DensityMatrix:
    """Return ``state`` as a density matrix."""

    if isinstance(state, PureState):
        return state.density()
    return state


@dataclass(frozen=True)
class QubitBasis:
    """Orthonormal qubit basis ``{|n>, |-n>}`` for the Bloch direction (theta, phi)."""

    theta: float
    phi: float

    @classmethod
    def computational(cls) -> "QubitBasis":
        return cls(0.0, 0.0)

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "QubitBasis":
        """Fold arbitrary angles into ``theta in [0, pi]``, ``phi in [0, 2 pi)``."""

        theta = math.fmod(float(theta), 2 * math.pi)
        if theta < 0:
            theta += 2 * math.pi
        phi = float(phi)
        if theta > math.pi:
            theta = 2 * math.pi - theta
            phi += math.pi
        phi = math.fmod(phi, 2 * math.pi)
        if phi < 0:
            phi += 2 * math.pi
        return cls(theta, phi)

    @classmethod
    def from_bloch(cls, vector: Sequence[float]) -> "QubitBasis":
        x, y, z = (float(value) for value in vector)
        norm = math.sqrt(x * x + y * y + z * z)
        if norm == 0.0:
            raise QStateError("Bloch direction must be nonzero")
        return cls.from_angles(math.acos(max(-1.0, min(1.0, z / norm))), math.atan2(y, x))

    def bloch_vector(self) -> np.ndarray:
        return np.array(
            [
                math.sin(self.theta) * math.cos(self.phi),
                math.sin(self.theta) * math.sin(self.phi),
                math.cos(self.theta),
            ]
        )

    def vectors(self) -> np.ndarray:
        """Columns are ``|n>`` and ``|-n>``."""

        c = math.cos(self.theta / 2)
        s = math.sin(self.theta / 2)
        phase = complex(math.cos(self.phi), math.sin(self.phi))
        return np.array([[c, -phase.conjugate() * s], [phase * s, c]], dtype=complex)

    def projectors(self) -> Tuple[np.ndarray, np.ndarray]:
        basis = self.vectors()
        return (
            np.outer(basis[:, 0], basis[:, 0].conj()),
            np.outer(basis[:, 1], basis[:, 1].conj()),
        )


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """Channel given by Kraus operators of shape ``(output_dim, input_dim)``."""

    operators: Tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        operators = tuple(np.atleast_2d(np.asarray(op, dtype=complex)) for op in self.operators)
        if not operators:
            raise IncompleteChannelError("A channel needs at least one Kraus operator", 1.0)
        shape = operators[0].shape
        if any(op.shape != shape for op in operators):
            raise DimensionMismatchError("All Kraus operators must share one shape")
        object.__setattr__(self, "operators", operators)

    @property
    def input_dim(self) -> int:
        return int(self.operators[0].shape[1])

    @property
    def output_dim(self) -> int:
        return int(self.operators[0].shape[0])

    def completeness_error(self) -> float:
        total = sum(op.conj().T @ op for op in self.operators)
        return float(np.max(np.abs(total - np.eye(self.input_dim))))

    def check(self) -> None:
        error = self.completeness_error()
        if error > HERMITIAN_TOL:
            raise IncompleteChannelError(f"Kraus completeness violated by {error:.3e}", error)


# -- Validation ---------------------------------------------------------------

def hermiticity_error(m: ComplexMatrix) -> float:
    matrix = np.asarray(m, dtype=complex)
    return float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0


def validate_density(
    m: ComplexMatrix,
    dims: Sequence[int],
    labels: Optional[Sequence[str]] = None,
) -> DensityMatrix:
    """Check the three validity invariants and wrap ``m`` as a density matrix.

    Eigenvalues in ``[-HERMITIAN_TOL, -EXACT_TOL)`` are clipped to zero and the
    spectrum is renormalised to unit trace; larger violations raise.  Otherwise
    the entries of ``m`` are kept as given, including sub-tolerance
    anti-Hermitian noise.
    """

    matrix = np.asarray(m, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(f"Expected a square matrix, got shape {matrix.shape}")
    dims_tuple = _normalise_dims(dims)
    if math.prod(dims_tuple) != matrix.shape[0]:
        raise DimensionMismatchError(
            f"Product of dims {dims_tuple} does not equal matrix dimension {matrix.shape[0]}"
        )

    herm_error = hermiticity_error(matrix)
    if herm_error > HERMITIAN_TOL:
        raise NotHermitianError(f"Matrix is not Hermitian (max deviation {herm_error:.3e})", herm_error)
    hermitian = (matrix + matrix.conj().T) / 2

    trace_error = abs(float(np.trace(hermitian).real) - 1.0)
    if trace_error > TRACE_TOL:
        raise NotUnitTraceError(f"Trace deviates from 1 by {trace_error:.3e}", trace_error)

    eigenvalues, eigenvectors = np.linalg.eigh(hermitian)
    smallest = float(eigenvalues[0])
    if smallest < -HERMITIAN_TOL:
        raise NotPositiveError(f"Matrix has negative eigenvalue {smallest:.3e}", -smallest)
    if smallest < -EXACT_TOL:
        clipped = np.clip(eigenvalues, 0.0, None)
        clipped = clipped / clipped.sum()
        matrix = (eigenvectors * clipped) @ eigenvectors.conj().T
        logger.debug("Clipped eigenvalue %.3e while validating a %d-dim state", smallest, matrix.shape[0])

    return DensityMatrix(matrix, dims_tuple, _normalise_labels(labels, len(dims_tuple)))


def is_valid_density(state: DensityMatrix | ComplexMatrix) -> bool:
    """Return ``True`` when hermiticity, trace and positivity all hold."""

    matrix = state.matrix if isinstance(state, DensityMatrix) else np.asarray(state, dtype=complex)
    if hermiticity_error(matrix) > HERMITIAN_TOL:
        return False
    if abs(float(np.trace(matrix).real) - 1.0) > TRACE_TOL:
        return False
    smallest = float(np.linalg.eigvalsh((matrix + matrix.conj().T) / 2)[0])
    return smallest >= -HERMITIAN_TOL


# -- Linear algebra -------------------------------------------------------------

def _as_matrix(value: DensityMatrix | ComplexMatrix) -> np.ndarray:
    if isinstance(value, DensityMatrix):
        return value.matrix
    return np.asarray(value, dtype=complex)


def eig_hermitian(m: DensityMatrix | ComplexMatrix) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues in descending order and the matching eigenvector columns.

    The choice of eigenvectors inside a degenerate subspace is unspecified.
    """

    matrix = _as_matrix(m)
    herm_error = hermiticity_error(matrix)
    if herm_error > HERMITIAN_TOL:
        raise NotHermitianError(f"Matrix is not Hermitian (max deviation {herm_error:.3e})", herm_error)
    eigenvalues, eigenvectors = np.linalg.eigh((matrix + matrix.conj().T) / 2)
    return eigenvalues[::-1].copy(), eigenvectors[:, ::-1].copy()


def hs_norm_sq(a: DensityMatrix | ComplexMatrix, b: DensityMatrix | ComplexMatrix) -> float:
    """Squared Hilbert-Schmidt distance ``Tr[(a-b)^dagger (a-b)]``."""

    left = _as_matrix(a)
    right = _as_matrix(b)
    if left.shape != right.shape:
        raise DimensionMismatchError(f"Cannot compare shapes {left.shape} and {right.shape}")
    diff = left - right
    return float(np.vdot(diff, diff).real)


def purity(rho: DensityMatrix | ComplexMatrix) -> float:
    matrix = _as_matrix(rho)
    return float(np.vdot(matrix, matrix).real)


def kron(a: DensityMatrix, b: DensityMatrix) -> DensityMatrix:
    """Tensor product with concatenated dims and labels."""

    clash = set(a.labels) & set(b.labels)
    if clash:
        raise DuplicateLabelError(f"Labels {sorted(clash)} appear on both factors")
    return DensityMatrix(np.kron(a.matrix, b.matrix), a.dims + b.dims, a.labels + b.labels)


def _label_set(keep: Union[str, Iterable[str]]) -> set:
    if isinstance(keep, str):
        return {keep}
    return set(keep)


def partial_trace(rho: DensityMatrix, keep: Union[str, Iterable[str]]) -> DensityMatrix:
    """Reduced state on ``keep``; kept subsystems retain their original order."""

    keep_set = _label_set(keep)
    if not keep_set:
        raise QStateError("partial_trace needs at least one subsystem to keep")
    unknown = keep_set - set(rho.labels)
    if unknown:
        raise UnknownLabelError(f"Unknown subsystems {sorted(unknown)}, state has {rho.labels}")

    count = len(rho.dims)
    kept = [index for index, label in enumerate(rho.labels) if label in keep_set]
    if len(kept) == count:
        return rho
    tensor = rho.matrix.reshape(rho.dims + rho.dims)
    rows = list(range(count))
    cols = [count + index if index in kept else index for index in range(count)]
    out = kept + [count + index for index in kept]
    reduced = np.einsum(tensor, rows + cols, out)
    kept_dims = tuple(rho.dims[index] for index in kept)
    total = math.prod(kept_dims)
    return DensityMatrix(
        reduced.reshape(total, total),
        kept_dims,
        tuple(rho.labels[index] for index in kept),
    )


def reorder(rho: DensityMatrix, labels: Sequence[str]) -> DensityMatrix:
    """Permute subsystems into the order given by ``labels``."""

    order = [rho.index_of(label) for label in labels]
    if sorted(order) != list(range(len(rho.dims))):
        raise UnknownLabelError(f"Reorder needs every label of {rho.labels} exactly once")
    if order == list(range(len(rho.dims))):
        return rho
    count = len(rho.dims)
    tensor = rho.matrix.reshape(rho.dims + rho.dims)
    permuted = tensor.transpose(order + [count + index for index in order])
    return DensityMatrix(
        permuted.reshape(rho.dim, rho.dim),
        tuple(rho.dims[index] for index in order),
        tuple(rho.labels[index] for index in order),
    )


def _split(rho: DensityMatrix, target: str) -> Tuple[int, int, int, int]:
    index = rho.index_of(target)
    left = math.prod(rho.dims[:index])
    right = math.prod(rho.dims[index + 1 :])
    return index, left, rho.dims[index], right


def dephase(rho: DensityMatrix, basis: QubitBasis, target: str) -> DensityMatrix:
    """Return ``sum_i (Pi_i x I) rho (Pi_i x I)`` for the basis projectors on ``target``."""

    index, left, dim, right = _split(rho, target)
    if dim != 2:
        raise TargetNotQubitError(f"Subsystem '{target}' has dimension {dim}, expected 2")
    tensor = rho.matrix.reshape(left, 2, right, left, 2, right)
    result = np.zeros_like(tensor)
    for projector in basis.projectors():
        result += np.einsum("ab,xbyzcw,cd->xayzdw", projector, tensor, projector, optimize=True)
    return DensityMatrix(result.reshape(rho.dim, rho.dim), rho.dims, rho.labels)


def apply_local_channel(rho: DensityMatrix, channel: KrausChannel, target: str) -> DensityMatrix:
    """Apply ``channel`` to subsystem ``target``; the output dimension may differ."""

    channel.check()
    index, left, dim, right = _split(rho, target)
    if channel.input_dim != dim:
        raise DimensionMismatchError(
            f"Channel input dimension {channel.input_dim} does not match subsystem '{target}' ({dim})"
        )
    tensor = rho.matrix.reshape(left, dim, right, left, dim, right)
    out_dim = channel.output_dim
    result = np.zeros((left, out_dim, right, left, out_dim, right), dtype=complex)
    for operator in channel.operators:
        result += np.einsum("ab,xbyzcw,dc->xayzdw", operator, tensor, operator.conj(), optimize=True)
    dims = rho.dims[:index] + (out_dim,) + rho.dims[index + 1 :]
    total = math.prod(dims)
    return DensityMatrix(result.reshape(total, total), dims, rho.labels)


def local_unitary(rho: DensityMatrix, unitary: ComplexMatrix, target: str) -> DensityMatrix:
    return apply_local_channel(rho, KrausChannel((np.asarray(unitary, dtype=complex),)), target)


def _fresh_label(existing: Sequence[str], stem: str = "R") -> str:
    if stem not in existing:
        return stem
    suffix = 1
    while f"{stem}{suffix}" in existing:
        suffix += 1
    return f"{stem}{suffix}"


def purify(rho: DensityMatrix) -> PureState:
    """Spectral purification ``sum_k sqrt(lambda_k) |e_k> |k>`` on ``dims + (d,)``."""

    eigenvalues, eigenvectors = eig_hermitian(rho.matrix)
    weights = np.sqrt(np.clip(eigenvalues, 0.0, None))
    amplitudes = (eigenvectors * weights).reshape(-1)
    ancilla = _fresh_label(rho.labels)
    return PureState(amplitudes, rho.dims + (rho.dim,), rho.labels + (ancilla,))


# -- Random states and channels -------------------------------------------------

def random_haar_pure(
    dims: Sequence[int],
    seed: SeedLike,
    labels: Optional[Sequence[str]] = None,
) -> PureState:
    """Normalised vector of independent standard complex Gaussians."""

    dims_tuple = _normalise_dims(dims)
    rng = make_rng(seed)
    total = math.prod(dims_tuple)
    vector = rng.standard_normal(total) + 1j * rng.standard_normal(total)
    vector /= np.linalg.norm(vector)
    return PureState(vector, dims_tuple, _normalise_labels(labels, len(dims_tuple)))


def random_density(
    dims: Sequence[int],
    ancilla_dim: int,
    seed: SeedLike,
    labels: Optional[Sequence[str]] = None,
) -> DensityMatrix:
    """Partial trace of a Haar pure state on ``dims`` plus an ancilla of ``ancilla_dim``."""

    if int(ancilla_dim) < 1:
        raise DimensionMismatchError("ancilla_dim must be positive")
    dims_tuple = _normalise_dims(dims)
    total = math.prod(dims_tuple)
    joint = random_haar_pure((total, int(ancilla_dim)), seed)
    block = joint.amplitudes.reshape(total, int(ancilla_dim))
    return DensityMatrix(block @ block.conj().T, dims_tuple, _normalise_labels(labels, len(dims_tuple)))


def random_unitary(dim: int, seed: SeedLike) -> np.ndarray:
    """Haar unitary from the QR decomposition of a Ginibre matrix."""

    rng = make_rng(seed)
    ginibre = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(ginibre)
    diagonal = np.diagonal(r)
    return q * (diagonal / np.abs(diagonal))


def channel_from_isometry(isometry: ComplexMatrix, output_dim: int) -> KrausChannel:
    """Split a Stinespring isometry of shape ``(output_dim * k, input_dim)`` into Kraus blocks."""

    matrix = np.asarray(isometry, dtype=complex)
    rows = matrix.shape[0]
    if rows % output_dim:
        raise DimensionMismatchError(f"Isometry rows {rows} are not a multiple of {output_dim}")
    blocks = rows // output_dim
    return KrausChannel(tuple(matrix[k * output_dim : (k + 1) * output_dim, :] for k in range(blocks)))


def random_channel(input_dim: int, output_dim: int, n_kraus: int, seed: SeedLike) -> KrausChannel:
    """Channel drawn from a random Stinespring isometry with ``n_kraus`` environment levels."""

    if output_dim * n_kraus < input_dim:
        raise DimensionMismatchError("output_dim * n_kraus must be at least input_dim")
    rng = make_rng(seed)
    rows = output_dim * n_kraus
    ginibre = rng.standard_normal((rows, input_dim)) + 1j * rng.standard_normal((rows, input_dim))
    isometry, _ = np.linalg.qr(ginibre)
    return channel_from_isometry(isometry, output_dim)


def identity_channel(dim: int) -> KrausChannel:
    return KrausChannel((np.eye(dim, dtype=complex),))


def dephasing_channel(dim: int) -> KrausChannel:
    operators: List[np.ndarray] = []
    for index in range(dim):
        operator = np.zeros((dim, dim), dtype=complex)
        operator[index, index] = 1.0
        operators.append(operator)
    return KrausChannel(tuple(operators))


def replacement_channel(state: DensityMatrix | ComplexMatrix, input_dim: int) -> KrausChannel:
    """Trace the input and prepare ``state``."""

    eigenvalues, eigenvectors = eig_hermitian(state)
    operators: List[np.ndarray] = []
    for weight, vector in zip(eigenvalues, eigenvectors.T):
        if weight <= EXACT_TOL:
            continue
        for index in range(input_dim):
            operator = np.zeros((eigenvectors.shape[0], input_dim), dtype=complex)
            operator[:, index] = math.sqrt(weight) * vector
            operators.append(operator)
    return KrausChannel(tuple(operators))


_HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)


def amplitude_damping_channel(eta: float, axis: str = "z") -> KrausChannel:
    """Qubit amplitude damping keeping amplitude ``sqrt(eta)``; ``axis='x'`` damps towards ``|+>``."""

    if not 0.0 <= eta <= 1.0:
        raise QStateError(f"eta must lie in [0, 1], got {eta}")
    k0 = np.array([[1.0, 0.0], [0.0, math.sqrt(eta)]], dtype=complex)
    k1 = np.array([[0.0, math.sqrt(1.0 - eta)], [0.0, 0.0]], dtype=complex)
    if axis == "z":
        return KrausChannel((k0, k1))
    if axis == "x":
        return KrausChannel((_HADAMARD @ k0 @ _HADAMARD, _HADAMARD @ k1 @ _HADAMARD))
    raise QStateError(f"Unsupported damping axis '{axis}'")


__all__ = [
    "ComplexMatrix",
    "DensityMatrix",
    "DimensionMismatchError",
    "DuplicateLabelError",
    "EXACT_TOL",
    "HERMITIAN_TOL",
    "IncompleteChannelError",
    "KrausChannel",
    "NotHermitianError",
    "NotPositiveError",
    "NotUnitTraceError",
    "PureState",
    "QStateError",
    "QubitBasis",
    "SeedLike",
    "TRACE_TOL",
    "TargetNotQubitError",
    "UnknownLabelError",
    "amplitude_damping_channel",
    "apply_local_channel",
    "as_density",
    "channel_from_isometry",
    "default_labels",
    "dephase",
    "dephasing_channel",
    "eig_hermitian",
    "hermiticity_error",
    "hs_norm_sq",
    "identity_channel",
    "is_valid_density",
    "kron",
    "local_unitary",
    "make_pure_state",
    "make_rng",
    "partial_trace",
    "purify",
    "purity",
    "random_channel",
    "random_density",
    "random_haar_pure",
    "random_unitary",
    "reorder",
    "replacement_channel",
]
