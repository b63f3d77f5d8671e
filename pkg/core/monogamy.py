"""Monogamy deficits, monogamy verifiers and violation certificates.

Each public function here turns one statement about correlation measures
into a numerical check that either passes, produces a witness or raises.
Random searches record the integer seed of every witness they report so a
finding can be replayed with the single-sample helpers.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from core.bloch import DEFAULT_OPTIMIZER, OptimizerConfig
from core.families import (
    BRUN_SAMPLING,
    MAX_EXTENSION_QUBITS,
    BrunParams,
    SeparableDecomposition,
    TooLargeError,
    brun_state,
    extension_size_bits,
    named_state,
    sample_brun,
    separable_extension,
    sigma_extension,
    symmetric_extension,
)
from core.measures import MeasureName, UnsupportedMeasureError, measure
from core.qstate import (
    DensityMatrix,
    KrausChannel,
    PureState,
    QubitBasis,
    SeedLike,
    apply_local_channel,
    as_density,
    dephase,
    hs_norm_sq,
    make_rng,
    partial_trace,
    random_channel,
    random_density,
    random_haar_pure,
)

logger = logging.getLogger(__name__)

BASE_TOLERANCE = 1e-6
PURE_MONOGAMY_TOLERANCE = 1e-6
MAXIMALITY_TOLERANCE = 1e-4
CKW_TOLERANCE = 1e-9
MARGINAL_TOLERANCE = 1e-12
HISTOGRAM_BINS = 20
PROOF_GAP_TOL = 1e-10
PROOF_ORDER_TOL = 1e-12
COEFFICIENT_GRID = 101
_SEED_LIMIT = 1 << 63

StateLike = Union[DensityMatrix, PureState]


class MonogamyError(RuntimeError):
    """Base error for monogamy analyses."""


class MeasureVanishesOnInputError(MonogamyError):
    """Raised when the input state carries no correlations for the chosen measure."""


class ChainViolatedError(MonogamyError):
    """Raised when a link of the extension argument fails numerically."""


class Verdict(str, Enum):
    SATISFIED = "Satisfied"
    VIOLATED = "Violated"
    INCONCLUSIVE = "Inconclusive"


def deficit_tolerance(kind: Union[str, MeasureName], config: OptimizerConfig = DEFAULT_OPTIMIZER) -> float:
    """``1e-6`` plus twice the optimizer tolerance for optimized measures."""

    kind = MeasureName.parse(kind)
    if kind.uses_optimizer:
        return BASE_TOLERANCE + 2.0 * config.tolerance
    return BASE_TOLERANCE


def classify(deficit_value: float, tolerance: float, converged: bool) -> Verdict:
    if deficit_value < -tolerance:
        return Verdict.VIOLATED
    if converged:
        return Verdict.SATISFIED
    return Verdict.INCONCLUSIVE


@dataclass(frozen=True)
class MonogamyReport:
    q_a_bc: float
    q_a_b: float
    q_a_c: float
    deficit: float
    measure_name: str
    tolerance: float
    verdict: Verdict
    head: str = "A"
    converged: bool = True

    def as_dict(self) -> Dict[str, object]:
        return {
            "measure": self.measure_name,
            "head": self.head,
            "q_a_bc": self.q_a_bc,
            "q_a_b": self.q_a_b,
            "q_a_c": self.q_a_c,
            "deficit": self.deficit,
            "tolerance": self.tolerance,
            "verdict": self.verdict.value,
            "converged": self.converged,
        }


def deficit(
    state: StateLike,
    measure_name: Union[str, MeasureName],
    *,
    head: str = "A",
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
    tolerance: Optional[float] = None,
) -> MonogamyReport:
    """``Q(head|rest) - Q(head|first) - Q(head|second)`` for a tripartite state."""

    kind = MeasureName.parse(measure_name)
    rho = as_density(state)
    if len(rho.labels) != 3:
        raise MonogamyError(f"Monogamy deficits need a tripartite state, got labels {rho.labels}")
    rho.index_of(head)
    first, second = (label for label in rho.labels if label != head)
    tol = deficit_tolerance(kind, config) if tolerance is None else float(tolerance)

    whole = measure(rho, kind, head, config=config)
    left = measure(partial_trace(rho, (head, first)), kind, head, config=config)
    right = measure(partial_trace(rho, (head, second)), kind, head, config=config)
    value = whole.value - left.value - right.value
    converged = whole.converged and left.converged and right.converged
    verdict = classify(value, tol, converged)
    if verdict is Verdict.INCONCLUSIVE:
        logger.warning("Inconclusive %s deficit %.3e (optimizer did not converge)", kind.value, value)
    return MonogamyReport(
        q_a_bc=whole.value,
        q_a_b=left.value,
        q_a_c=right.value,
        deficit=value,
        measure_name=kind.value,
        tolerance=tol,
        verdict=verdict,
        head=head,
        converged=converged,
    )


# -- Pure three-qubit sweeps ----------------------------------------------------------

@dataclass(frozen=True)
class BrunSample:
    seed: int
    params: BrunParams
    report: MonogamyReport

    def row(self) -> Dict[str, float]:
        values = dict(self.params.as_dict())
        values.update(
            q_abc=self.report.q_a_bc,
            q_ab=self.report.q_a_b,
            q_ac=self.report.q_a_c,
            deficit=self.report.deficit,
            seed=self.seed,
        )
        return values


def _evaluate_brun(task: Tuple[int, OptimizerConfig]) -> BrunSample:
    seed, config = task
    params = sample_brun(seed)
    report = deficit(brun_state(params), MeasureName.GDISCORD, config=config)
    return BrunSample(seed, params, report)


def sample_seeds(seed: SeedLike, count: int) -> List[int]:
    """Independent per-sample integer seeds derived from ``seed``."""

    rng = make_rng(seed)
    return [int(value) for value in rng.integers(0, _SEED_LIMIT, size=count, dtype=np.int64)]


def scan_brun(
    samples: int,
    seed: SeedLike,
    *,
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
    workers: int = 1,
) -> List[BrunSample]:
    """Geometric-discord deficits for ``samples`` random Brun states, in seed order."""

    if samples < 1:
        raise ValueError("samples must be at least 1")
    tasks = [(value, config) for value in sample_seeds(seed, samples)]
    if workers > 1:
        chunk = max(1, samples // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate_brun, tasks, chunksize=chunk))
    else:
        results = [_evaluate_brun(task) for task in tasks]
    logger.info("Evaluated %d Brun samples with %d worker(s)", samples, max(1, workers))
    return results


@dataclass(frozen=True)
class PureMonogamySummary:
    samples: int
    min_deficit: float
    argmin_params: BrunParams
    argmin_seed: int
    histogram_edges: List[float]
    histogram_counts: List[int]
    inconclusive: int
    passed: bool
    sampling: str = BRUN_SAMPLING

    def as_dict(self) -> Dict[str, object]:
        return {
            "samples": self.samples,
            "min_deficit": self.min_deficit,
            "argmin_params": self.argmin_params.as_dict(),
            "argmin_seed": self.argmin_seed,
            "histogram": {"edges": self.histogram_edges, "counts": self.histogram_counts},
            "inconclusive": self.inconclusive,
            "passed": self.passed,
            "sampling": self.sampling,
        }


def summarize_pure_monogamy(results: Sequence[BrunSample]) -> PureMonogamySummary:
    deficits = np.array([sample.report.deficit for sample in results])
    index = int(np.argmin(deficits))
    counts, edges = np.histogram(deficits, bins=HISTOGRAM_BINS)
    minimum = float(deficits[index])
    passed = minimum >= -PURE_MONOGAMY_TOLERANCE
    inconclusive = sum(1 for sample in results if sample.report.verdict is Verdict.INCONCLUSIVE)
    if not passed:
        logger.warning("Negative geometric-discord deficit %.3e at seed %d", minimum, results[index].seed)
    return PureMonogamySummary(
        samples=len(results),
        min_deficit=minimum,
        argmin_params=results[index].params,
        argmin_seed=results[index].seed,
        histogram_edges=[float(edge) for edge in edges],
        histogram_counts=[int(count) for count in counts],
        inconclusive=inconclusive,
        passed=passed,
    )


def verify_pure_monogamy(
    samples: int,
    seed: SeedLike,
    *,
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
    workers: int = 1,
) -> PureMonogamySummary:
    """Check that geometric discord is monogamous on sampled pure three-qubit states."""

    return summarize_pure_monogamy(scan_brun(samples, seed, config=config, workers=workers))


def c_coefficient(params: BrunParams) -> float:
    a_sq = params.a * params.a
    return 1.0 + (4.0 * a_sq * (1.0 - a_sq) - 1.0) * params.gamma**2


@dataclass(frozen=True)
class ProofBound:
    lhs: float
    rhs_numeric: float
    rhs_closed: float
    c: float

    def as_dict(self) -> Dict[str, float]:
        return {"lhs": self.lhs, "rhs_numeric": self.rhs_numeric, "rhs_closed": self.rhs_closed, "c": self.c}


def proof_bound_rhs(params: BrunParams) -> ProofBound:
    """Compare ``2(1-p)p`` with the distances of both marginals to their computational dephasing."""

    rho = brun_state(params).density()
    sigma = dephase(rho, QubitBasis.computational(), "A")
    rhs_numeric = hs_norm_sq(partial_trace(rho, ("A", "B")), partial_trace(sigma, ("A", "B"))) + hs_norm_sq(
        partial_trace(rho, ("A", "C")), partial_trace(sigma, ("A", "C"))
    )
    c = c_coefficient(params)
    weight = 2.0 * (1.0 - params.p) * params.p
    return ProofBound(lhs=weight, rhs_numeric=rhs_numeric, rhs_closed=c * weight, c=c)


def coefficient_extremes(points: int = COEFFICIENT_GRID) -> Tuple[float, float]:
    """``(min, max)`` of the coefficient over a ``points x points`` grid of ``(a, gamma)`` in ``[0, 1]^2``."""

    values = [
        c_coefficient(BrunParams.with_gamma(0.5, float(a), float(gamma)))
        for a in np.linspace(0.0, 1.0, points)
        for gamma in np.linspace(0.0, 1.0, points)
    ]
    return min(values), max(values)


@dataclass(frozen=True)
class ProofBoundSummary:
    samples: int
    max_abs_gap: float
    min_lhs_minus_rhs: float
    c_min: float
    c_max: float
    passed: bool

    def as_dict(self) -> Dict[str, object]:
        return {
            "samples": self.samples,
            "max_abs_gap": self.max_abs_gap,
            "min_lhs_minus_rhs": self.min_lhs_minus_rhs,
            "coefficient_grid": {"points": COEFFICIENT_GRID, "min": self.c_min, "max": self.c_max},
            "passed": self.passed,
        }


def verify_proof_bound(samples: int, seed: SeedLike) -> ProofBoundSummary:
    """Closed form against direct evaluation on sampled parameters, plus the coefficient range."""

    if samples < 1:
        raise ValueError("samples must be at least 1")
    gap = 0.0
    order = math.inf
    for value_seed in sample_seeds(seed, samples):
        bound = proof_bound_rhs(sample_brun(value_seed))
        gap = max(gap, abs(bound.rhs_numeric - bound.rhs_closed))
        order = min(order, bound.lhs - bound.rhs_closed)
    c_min, c_max = coefficient_extremes()
    passed = (
        gap <= PROOF_GAP_TOL
        and order >= -PROOF_ORDER_TOL
        and c_max <= 1.0 + PROOF_ORDER_TOL
        and c_min >= -PROOF_ORDER_TOL
    )
    return ProofBoundSummary(samples, gap, order, c_min, c_max, passed)


# -- Separable extensions -------------------------------------------------------------

@dataclass(frozen=True)
class ChainCheck:
    marginal_residual: float
    q_sigma_ab: float
    q_rho_abc: float
    q_sigma_abc: float
    holds: bool

    def as_dict(self) -> Dict[str, object]:
        return {
            "marginal_residual": self.marginal_residual,
            "q_sigma_ab": self.q_sigma_ab,
            "q_rho_abc": self.q_rho_abc,
            "q_sigma_abc": self.q_sigma_abc,
            "holds": self.holds,
        }


@dataclass(frozen=True, eq=False)
class ViolationCertificate:
    decomposition: SeparableDecomposition
    state: DensityMatrix
    report: MonogamyReport
    chain_check: ChainCheck


def violation_certificate(
    dec: SeparableDecomposition,
    measure_name: Union[str, MeasureName],
    *,
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
    tolerance: Optional[float] = None,
) -> ViolationCertificate:
    """Monogamy violation built from a discordant separable state.

    The separable state becomes the AC marginal of an extension whose AB
    marginal is matched by a state with C fixed to ``|0>``; every link of that
    argument is recomputed and checked.
    """

    kind = MeasureName.parse(measure_name)
    tol = deficit_tolerance(kind, config) if tolerance is None else float(tolerance)
    separable = measure(dec.density(("A", "C")), kind, "A", config=config)
    if separable.value <= 10.0 * tol:
        raise MeasureVanishesOnInputError(
            f"{kind.value} of the separable state is {separable.value:.3e}; no certificate possible"
        )

    rho = separable_extension(dec)
    sigma = sigma_extension(dec)
    rho_ab = partial_trace(rho, ("A", "B"))
    sigma_ab = partial_trace(sigma, ("A", "B"))
    residual = float(np.max(np.abs(rho_ab.matrix - sigma_ab.matrix)))
    q_sigma_ab = measure(sigma_ab, kind, "A", config=config).value
    q_rho_abc = measure(rho, kind, "A", config=config).value
    q_sigma_abc = measure(sigma, kind, "A", config=config).value
    chain = ChainCheck(
        marginal_residual=residual,
        q_sigma_ab=q_sigma_ab,
        q_rho_abc=q_rho_abc,
        q_sigma_abc=q_sigma_abc,
        holds=residual <= MARGINAL_TOLERANCE and q_sigma_ab >= q_rho_abc - tol,
    )
    if not chain.holds:
        raise ChainViolatedError(
            f"Extension chain failed: residual {residual:.3e}, Q(sigma_AB) {q_sigma_ab:.6g} < Q(rho_ABC) {q_rho_abc:.6g}"
        )

    report = deficit(rho, kind, config=config, tolerance=tol)
    if report.verdict is not Verdict.VIOLATED:
        raise ChainViolatedError(
            f"Expected a violated {kind.value} deficit, got {report.deficit:.6g} ({report.verdict.value})"
        )
    logger.info("Certificate for %s: deficit %.6g", kind.value, report.deficit)
    return ViolationCertificate(dec, rho, report, chain)


@dataclass(frozen=True)
class ExtensionReport:
    n: int
    q_per_copy: float
    q_joint: float
    rhs: float
    bound: Optional[float]
    violated: bool

    def as_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "q_per_copy": self.q_per_copy,
            "q_joint": self.q_joint,
            "rhs": self.rhs,
            "bound": self.bound,
            "violated": self.violated,
        }


def extension_check(
    dec: SeparableDecomposition,
    measure_name: Union[str, MeasureName],
    n_max: int,
    *,
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
    tolerance: Optional[float] = None,
) -> List[ExtensionReport]:
    """Compare ``Q(A|B1..Bn)`` against ``n Q(A|B)`` on symmetric extensions."""

    kind = MeasureName.parse(measure_name)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    bits = extension_size_bits(dec.dim_a, dec.dim_c, n_max)
    if bits > MAX_EXTENSION_QUBITS:
        raise TooLargeError(f"n_max={n_max} needs 2^{bits:.1f} dimensions, limit is 2^{MAX_EXTENSION_QUBITS:.0f}")
    tol = deficit_tolerance(kind, config) if tolerance is None else float(tolerance)
    per_copy = measure(dec.density(("A", "B")), kind, "A", config=config).value
    if per_copy <= 10.0 * tol:
        raise MeasureVanishesOnInputError(
            f"{kind.value} of the separable state is {per_copy:.3e}; nothing to extend"
        )
    bound = 1.0 if kind is MeasureName.GDISCORD else None

    reports: List[ExtensionReport] = []
    for n in range(1, n_max + 1):
        joint = measure(symmetric_extension(dec, n), kind, "A", config=config).value
        rhs = n * per_copy
        reports.append(
            ExtensionReport(n=n, q_per_copy=per_copy, q_joint=joint, rhs=rhs, bound=bound, violated=joint + tol < rhs)
        )
        logger.debug("Extension n=%d: joint %.8g, rhs %.8g", n, joint, rhs)
    return reports


# -- Sampled property checks ------------------------------------------------------------

@dataclass(frozen=True)
class MaximalityReport:
    measure_name: str
    max_pure: float
    max_mixed: float
    pure_witness_seed: Optional[int]
    mixed_witness_seed: int
    asserted: bool
    passed: Optional[bool]

    def as_dict(self) -> Dict[str, object]:
        return {
            "measure": self.measure_name,
            "max_pure": self.max_pure,
            "max_mixed": self.max_mixed,
            "pure_witness_seed": self.pure_witness_seed,
            "mixed_witness_seed": self.mixed_witness_seed,
            "asserted": self.asserted,
            "passed": self.passed,
        }


def pure_maximality_check(
    measure_name: Union[str, MeasureName],
    mixed_samples: int,
    pure_samples: int,
    seed: SeedLike,
    *,
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
) -> MaximalityReport:
    """Largest measure values over sampled pure and mixed two-qubit states.

    The pure samples always include the Bell state (reported with a ``None``
    seed).  Geometric discord runs in demonstration mode: values are reported
    and nothing is asserted.
    """

    kind = MeasureName.parse(measure_name)
    if mixed_samples < 1 or pure_samples < 1:
        raise ValueError("Sample counts must be at least 1")
    pure_seeds = sample_seeds(seed, pure_samples + mixed_samples)
    mixed_seeds = pure_seeds[pure_samples:]
    pure_seeds = pure_seeds[: pure_samples - 1]

    bell = as_density(named_state("Bell"))
    max_pure = measure(bell, kind, "A", config=config).value
    pure_witness: Optional[int] = None
    for value_seed in pure_seeds:
        value = measure(random_haar_pure([2, 2], value_seed).density(), kind, "A", config=config).value
        if value > max_pure:
            max_pure, pure_witness = value, value_seed

    max_mixed = -math.inf
    mixed_witness = mixed_seeds[0]
    for value_seed in mixed_seeds:
        value = measure(random_density([2, 2], 4, value_seed), kind, "A", config=config).value
        if value > max_mixed:
            max_mixed, mixed_witness = value, value_seed

    asserted = kind is not MeasureName.GDISCORD
    passed = (max_pure >= max_mixed - MAXIMALITY_TOLERANCE) if asserted else None
    return MaximalityReport(kind.value, max_pure, max_mixed, pure_witness, mixed_witness, asserted, passed)


@dataclass(frozen=True, eq=False)
class MonotonicityReport:
    measure_name: str
    trials: int
    max_increase: float
    witness_seed: int
    witness_state: DensityMatrix
    witness_channel: KrausChannel

    def as_dict(self) -> Dict[str, object]:
        return {
            "measure": self.measure_name,
            "trials": self.trials,
            "max_increase": self.max_increase,
            "witness_seed": self.witness_seed,
        }


def monotonicity_trial(
    kind: MeasureName,
    trial_seed: int,
    config: OptimizerConfig,
    channel: Optional[KrausChannel] = None,
) -> Tuple[float, DensityMatrix, KrausChannel]:
    """Increase of the measure after a channel on B, for one seeded state and channel."""

    rng = make_rng(trial_seed)
    rho = random_density([2, 2], int(rng.integers(1, 5)), rng)
    if channel is None:
        channel = random_channel(2, 2, int(rng.integers(1, 5)), rng)
    before = measure(rho, kind, "A", config=config).value
    after = measure(apply_local_channel(rho, channel, "B"), kind, "A", config=config).value
    return after - before, rho, channel


def channel_monotonicity_check(
    measure_name: Union[str, MeasureName],
    trials: int,
    seed: SeedLike,
    *,
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
    channel: Optional[KrausChannel] = None,
) -> MonotonicityReport:
    """Largest observed change of a measure under channels on the unmeasured side."""

    kind = MeasureName.parse(measure_name)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    best: Optional[Tuple[float, int, DensityMatrix, KrausChannel]] = None
    for trial_seed in sample_seeds(seed, trials):
        increase, rho, used = monotonicity_trial(kind, trial_seed, config, channel)
        if best is None or increase > best[0]:
            best = (increase, trial_seed, rho, used)
    assert best is not None
    if best[0] > 0:
        logger.info("Largest %s increase under a local channel: %.6g (seed %d)", kind.value, best[0], best[1])
    return MonotonicityReport(kind.value, trials, best[0], best[1], best[2], best[3])


@dataclass(frozen=True)
class CkwReport:
    samples: int
    min_slack: float
    argmin_seed: int
    w_slack: float
    ghz_slack: float
    passed: bool

    def as_dict(self) -> Dict[str, object]:
        return {
            "samples": self.samples,
            "min_slack": self.min_slack,
            "argmin_seed": self.argmin_seed,
            "w_slack": self.w_slack,
            "ghz_slack": self.ghz_slack,
            "passed": self.passed,
        }


def ckw_check(samples: int, seed: SeedLike) -> CkwReport:
    """Squared-concurrence monogamy slack over Haar pure three-qubit states."""

    if samples < 1:
        raise ValueError("samples must be at least 1")
    minimum = math.inf
    argmin_seed = 0
    for value_seed in sample_seeds(seed, samples):
        slack = deficit(random_haar_pure([2, 2, 2], value_seed), MeasureName.CONCURRENCE2).deficit
        if slack < minimum:
            minimum, argmin_seed = slack, value_seed
    w_slack = deficit(named_state("W"), MeasureName.CONCURRENCE2).deficit
    ghz_slack = deficit(named_state("GHZ"), MeasureName.CONCURRENCE2).deficit
    return CkwReport(samples, minimum, argmin_seed, w_slack, ghz_slack, minimum >= -CKW_TOLERANCE)


@dataclass(frozen=True, eq=False)
class DiscordSearchReport:
    samples_evaluated: int
    threshold: float
    min_deficit: float
    witness_seed: Optional[int]
    witness_state: Optional[PureState]
    witness_report: Optional[MonogamyReport]

    @property
    def found(self) -> bool:
        return self.witness_seed is not None

    def as_dict(self) -> Dict[str, object]:
        return {
            "samples_evaluated": self.samples_evaluated,
            "threshold": self.threshold,
            "min_deficit": self.min_deficit,
            "found": self.found,
            "witness_seed": self.witness_seed,
            "witness_report": None if self.witness_report is None else self.witness_report.as_dict(),
        }


def discord_pure_violation_search(
    samples: int,
    seed: SeedLike,
    *,
    threshold: float = 1e-3,
    config: OptimizerConfig = DEFAULT_OPTIMIZER,
    stop_at_first: bool = True,
) -> DiscordSearchReport:
    """Search Haar pure three-qubit states for a discord deficit below ``-threshold``.

    Candidates are confirmed with the default optimizer before being reported.
    """

    if samples < 1:
        raise ValueError("samples must be at least 1")
    minimum = math.inf
    witness: Optional[Tuple[int, PureState, MonogamyReport]] = None
    evaluated = 0
    for value_seed in sample_seeds(seed, samples):
        evaluated += 1
        psi = random_haar_pure([2, 2, 2], value_seed)
        report = deficit(psi, MeasureName.DISCORD, config=config)
        minimum = min(minimum, report.deficit)
        if report.deficit < -threshold and (witness is None or report.deficit < witness[2].deficit):
            confirmed = report if config == DEFAULT_OPTIMIZER else deficit(psi, MeasureName.DISCORD)
            if confirmed.deficit < -threshold:
                witness = (value_seed, psi, confirmed)
                logger.info("Discord deficit %.6g at seed %d", confirmed.deficit, value_seed)
                if stop_at_first:
                    break
    if witness is None:
        return DiscordSearchReport(evaluated, threshold, minimum, None, None, None)
    return DiscordSearchReport(evaluated, threshold, minimum, witness[0], witness[1], witness[2])


__all__ = [
    "BASE_TOLERANCE",
    "BrunSample",
    "ChainCheck",
    "ChainViolatedError",
    "CkwReport",
    "DiscordSearchReport",
    "ExtensionReport",
    "MaximalityReport",
    "MeasureVanishesOnInputError",
    "MonogamyError",
    "MonogamyReport",
    "MonotonicityReport",
    "ProofBound",
    "ProofBoundSummary",
    "PureMonogamySummary",
    "UnsupportedMeasureError",
    "Verdict",
    "ViolationCertificate",
    "c_coefficient",
    "channel_monotonicity_check",
    "ckw_check",
    "classify",
    "coefficient_extremes",
    "deficit",
    "deficit_tolerance",
    "discord_pure_violation_search",
    "extension_check",
    "monotonicity_trial",
    "proof_bound_rhs",
    "pure_maximality_check",
    "sample_seeds",
    "scan_brun",
    "summarize_pure_monogamy",
    "verify_proof_bound",
    "verify_pure_monogamy",
]
