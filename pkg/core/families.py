"""State families used by the monogamy analyses and their parameter samplers."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np

from core.qstate import (
    DensityMatrix,
    PureState,
    SeedLike,
    make_pure_state,
    make_rng,
    random_haar_pure,
)

logger = logging.getLogger(__name__)

PARAM_TOL = 1e-12
WEIGHT_TOL = 1e-12
MAX_EXTENSION_QUBITS = 12.0

BRUN_SAMPLING = (
    "p, a, f uniform on [0, 1]; |g|^2 uniform on [0, 1 - f^2]; arg g uniform on [0, 2pi)"
)


class FamilyError(ValueError):
    """Base error for state family construction failures."""


class InvalidParamsError(FamilyError):
    """Raised when Brun parameters fall outside their domain."""


class EmptyDecompositionError(FamilyError):
    """Raised when a separable decomposition has no terms."""


class InvalidDecompositionError(FamilyError):
    """Raised when weights or component states of a decomposition are invalid."""


class TooLargeError(FamilyError):
    """Raised when a construction would exceed the dense-matrix memory guard."""


class UnknownNameError(FamilyError):
    """Raised for an unrecognised named state."""


@dataclass(frozen=True)
class BrunParams:
    """Parameters ``(p, a, f, g)`` of a pure three-qubit state; ``gamma`` is derived."""

    p: float
    a: float
    f: float
    g: complex = 0j

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "f", float(self.f))
        object.__setattr__(self, "g", complex(self.g))
        for name in ("p", "a", "f"):
            value = getattr(self, name)
            if not (-PARAM_TOL <= value <= 1.0 + PARAM_TOL) or math.isnan(value):
                raise InvalidParamsError(f"{name} must lie in [0, 1], got {value!r}")
        if self.f**2 + abs(self.g) ** 2 > 1.0 + PARAM_TOL:
            raise InvalidParamsError(
                f"f^2 + |g|^2 must not exceed 1, got {self.f**2 + abs(self.g) ** 2!r}"
            )

    @classmethod
    def with_gamma(cls, p: float, a: float, gamma: float) -> "BrunParams":
        """Parameters with the requested ``gamma`` using ``f = sqrt(1 - gamma^2)`` and ``g = 0``."""

        if not 0.0 <= gamma <= 1.0:
            raise InvalidParamsError(f"gamma must lie in [0, 1], got {gamma!r}")
        return cls(p, a, math.sqrt(max(0.0, 1.0 - gamma * gamma)), 0j)

    @property
    def gamma(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.f**2 - abs(self.g) ** 2))

    def as_dict(self) -> Dict[str, float]:
        return {
            "p": self.p,
            "a": self.a,
            "f": self.f,
            "g_re": self.g.real,
            "g_im": self.g.imag,
            "gamma": self.gamma,
        }


@dataclass(frozen=True, eq=False)
class DecompositionTerm:
    weight: float
    psi: PureState
    phi: PureState


@dataclass(frozen=True, eq=False)
class SeparableDecomposition:
    """Ensemble ``{p_i, |psi_i>, |phi_i>}`` of product pure states on two parties."""

    terms: Tuple[DecompositionTerm, ...]

    def __post_init__(self) -> None:
        terms = tuple(self.terms)
        if not terms:
            raise EmptyDecompositionError("A separable decomposition needs at least one term")
        total = 0.0
        for index, term in enumerate(terms):
            if not 0.0 < term.weight <= 1.0:
                raise InvalidDecompositionError(
                    f"terms[{index}].weight must lie in (0, 1], got {term.weight!r}"
                )
            for side in ("psi", "phi"):
                state: PureState = getattr(term, side)
                if len(state.dims) != 1:
                    raise InvalidDecompositionError(f"terms[{index}].{side} must be a single-party state")
                if state.norm_error > 1e-9:
                    raise InvalidDecompositionError(f"terms[{index}].{side} is not normalised")
            total += term.weight
        if abs(total - 1.0) > WEIGHT_TOL:
            raise InvalidDecompositionError(f"Weights must sum to 1, got {total!r}")
        dim_a = terms[0].psi.dims[0]
        dim_c = terms[0].phi.dims[0]
        for index, term in enumerate(terms):
            if term.psi.dims[0] != dim_a or term.phi.dims[0] != dim_c:
                raise InvalidDecompositionError(f"terms[{index}] has inconsistent dimensions")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_vectors(
        cls,
        entries: Sequence[Tuple[float, Sequence[complex], Sequence[complex]]],
    ) -> "SeparableDecomposition":
        terms = []
        for weight, psi, phi in entries:
            psi_vec = np.asarray(psi, dtype=complex)
            phi_vec = np.asarray(phi, dtype=complex)
            terms.append(
                DecompositionTerm(
                    float(weight),
                    make_pure_state(psi_vec, [psi_vec.size], ["A"]),
                    make_pure_state(phi_vec, [phi_vec.size], ["C"]),
                )
            )
        return cls(tuple(terms))

    @property
    def k(self) -> int:
        return len(self.terms)

    @property
    def dim_a(self) -> int:
        return self.terms[0].psi.dims[0]

    @property
    def dim_c(self) -> int:
        return self.terms[0].phi.dims[0]

    def density(self, labels: Sequence[str] = ("A", "C")) -> DensityMatrix:
        """The separable state ``sum_i p_i |psi_i><psi_i| (x) |phi_i><phi_i|``."""

        matrix = sum(
            term.weight * np.kron(_projector(term.psi), _projector(term.phi)) for term in self.terms
        )
        return DensityMatrix(matrix, (self.dim_a, self.dim_c), tuple(labels))


def _projector(state: PureState) -> np.ndarray:
    return np.outer(state.amplitudes, state.amplitudes.conj())


def _basis_projector(index: int, dim: int) -> np.ndarray:
    projector = np.zeros((dim, dim), dtype=complex)
    projector[index, index] = 1.0
    return projector


def brun_state(params: BrunParams, labels: Sequence[str] = ("A", "B", "C")) -> PureState:
    """Pure three-qubit state for ``params`` with index ``4A + 2B + C``."""

    branch0 = math.sqrt(params.p)
    branch1 = math.sqrt(max(0.0, 1.0 - params.p))
    comp_a = math.sqrt(max(0.0, 1.0 - params.a**2))
    gamma = params.gamma
    amplitudes = np.zeros(8, dtype=complex)
    amplitudes[0] = branch0 * params.a
    amplitudes[3] = branch0 * comp_a
    amplitudes[4] = branch1 * gamma * comp_a
    amplitudes[5] = branch1 * params.f
    amplitudes[6] = branch1 * params.g
    amplitudes[7] = -branch1 * gamma * params.a
    return PureState(amplitudes, (2, 2, 2), tuple(labels))


def sample_brun(seed: SeedLike) -> BrunParams:
    """Draw Brun parameters; the sampling measure is ``BRUN_SAMPLING``."""

    rng = make_rng(seed)
    p, a, f = rng.random(3)
    modulus_sq = rng.uniform(0.0, 1.0 - f * f)
    phase = rng.uniform(0.0, 2.0 * math.pi)
    g = math.sqrt(modulus_sq) * complex(math.cos(phase), math.sin(phase))
    return BrunParams(float(p), float(a), float(f), g)


def separable_extension(
    dec: SeparableDecomposition,
    labels: Sequence[str] = ("A", "B", "C"),
) -> DensityMatrix:
    """Extension ``sum_i p_i psi_i (x) |i><i|_B (x) phi_i`` with a ``k``-level flag register B."""

    k = dec.k
    matrix = sum(
        term.weight
        * np.kron(np.kron(_projector(term.psi), _basis_projector(index, k)), _projector(term.phi))
        for index, term in enumerate(dec.terms)
    )
    return DensityMatrix(matrix, (dec.dim_a, k, dec.dim_c), tuple(labels))


def sigma_extension(
    dec: SeparableDecomposition,
    labels: Sequence[str] = ("A", "B", "C"),
) -> DensityMatrix:
    """Same AB marginal as :func:`separable_extension` with C fixed to ``|0>``."""

    k = dec.k
    fixed = _basis_projector(0, dec.dim_c)
    matrix = sum(
        term.weight * np.kron(np.kron(_projector(term.psi), _basis_projector(index, k)), fixed)
        for index, term in enumerate(dec.terms)
    )
    return DensityMatrix(matrix, (dec.dim_a, k, dec.dim_c), tuple(labels))


def extension_size_bits(dim_a: int, dim_b: int, n: int) -> float:
    return n * math.log2(dim_b) + math.log2(dim_a)


def symmetric_extension(dec: SeparableDecomposition, n: int) -> DensityMatrix:
    """``sum_i p_i psi_i (x) phi_i^{(x) n}`` on ``A, B1, ..., Bn``."""

    if n < 1:
        raise FamilyError(f"n must be positive, got {n}")
    bits = extension_size_bits(dec.dim_a, dec.dim_c, n)
    if bits > MAX_EXTENSION_QUBITS:
        raise TooLargeError(
            f"Extension with n={n} needs 2^{bits:.1f} dimensions, limit is 2^{MAX_EXTENSION_QUBITS:.0f}"
        )
    matrix = sum(
        term.weight * reduce(np.kron, [_projector(term.psi)] + [_projector(term.phi)] * n)
        for term in dec.terms
    )
    labels = ("A",) + tuple(f"B{index}" for index in range(1, n + 1))
    return DensityMatrix(matrix, (dec.dim_a,) + (dec.dim_c,) * n, labels)


def random_decomposition(k: int, dim_a: int, dim_c: int, seed: SeedLike) -> SeparableDecomposition:
    """Dirichlet weights with Haar-random components on each side."""

    if k < 1:
        raise EmptyDecompositionError("k must be at least 1")
    rng = make_rng(seed)
    weights = rng.dirichlet(np.ones(k))
    terms = tuple(
        DecompositionTerm(
            float(weight),
            random_haar_pure([dim_a], rng, ["A"]),
            random_haar_pure([dim_c], rng, ["C"]),
        )
        for weight in weights
    )
    return SeparableDecomposition(terms)


class NamedState(str, Enum):
    GHZ = "GHZ"
    W = "W"
    BELL = "Bell"
    SEPARABLE_DISCORDANT = "separable_discordant"

    @classmethod
    def parse(cls, value: Union[str, "NamedState"]) -> "NamedState":
        if isinstance(value, NamedState):
            return value
        lowered = str(value).strip().lower()
        for member in cls:
            if member.value.lower() == lowered:
                return member
        raise UnknownNameError(f"Unknown named state '{value}'")


_SQRT_HALF = 1 / math.sqrt(2)


def named_state(name: Union[str, NamedState]) -> Union[PureState, SeparableDecomposition]:
    member = NamedState.parse(name)
    if member is NamedState.GHZ:
        vector = np.zeros(8, dtype=complex)
        vector[0] = vector[7] = _SQRT_HALF
        return PureState(vector, (2, 2, 2), ("A", "B", "C"))
    if member is NamedState.W:
        vector = np.zeros(8, dtype=complex)
        vector[[1, 2, 4]] = 1 / math.sqrt(3)
        return PureState(vector, (2, 2, 2), ("A", "B", "C"))
    if member is NamedState.BELL:
        vector = np.zeros(4, dtype=complex)
        vector[0] = vector[3] = _SQRT_HALF
        return PureState(vector, (2, 2), ("A", "B"))
    plus = [_SQRT_HALF, _SQRT_HALF]
    return SeparableDecomposition.from_vectors([(0.5, [1, 0], [1, 0]), (0.5, plus, plus)])


def named_density(name: Union[str, NamedState], labels: Optional[Sequence[str]] = None) -> DensityMatrix:
    """Density matrix of a named state; decompositions become their separable state."""

    value = named_state(name)
    if isinstance(value, SeparableDecomposition):
        return value.density(labels or ("A", "C"))
    density = value.density()
    if labels is not None:
        return DensityMatrix(density.matrix, density.dims, tuple(labels))
    return density


__all__ = [
    "BRUN_SAMPLING",
    "BrunParams",
    "DecompositionTerm",
    "EmptyDecompositionError",
    "FamilyError",
    "InvalidDecompositionError",
    "InvalidParamsError",
    "MAX_EXTENSION_QUBITS",
    "NamedState",
    "SeparableDecomposition",
    "TooLargeError",
    "UnknownNameError",
    "brun_state",
    "extension_size_bits",
    "named_density",
    "named_state",
    "random_decomposition",
    "sample_brun",
    "sigma_extension",
    "symmetric_extension",
    "separable_extension",
]
