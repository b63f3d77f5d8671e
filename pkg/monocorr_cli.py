"""Command line front-end for the Monocorr monogamy toolkit."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Callable, Dict, Optional

import numpy as np

from core import families, measures, monogamy, qstate, reports, state_io
from core.hash import file_sha256, short_digest
from core.logging_config import configure_logging
from settings import DEFAULT_SETTINGS_PATH, RunConfig, load_run_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

MONOTONE_TOL = 1e-4


class UsageError(RuntimeError):
    """Raised for argument combinations argparse cannot reject by itself."""


def _config(args: argparse.Namespace, measure: Optional[str] = None) -> RunConfig:
    """Settings file, then command line flags; ``measure`` pins commands tied to one measure."""

    for name in ("samples", "workers", "refinements"):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            raise UsageError(f"--{name} must be at least 1, got {value}")
    grid = getattr(args, "grid", None)
    if grid and min(grid) < 2:
        raise UsageError(f"--grid needs at least 2 points per angle, got {grid}")
    config = load_run_config(args.settings or DEFAULT_SETTINGS_PATH)
    config = config.with_overrides(
        seed=getattr(args, "seed", None),
        samples=getattr(args, "samples", None),
        workers=getattr(args, "workers", None),
        output=getattr(args, "out", None),
        measure=measure or getattr(args, "measure", None),
    )
    optimizer = config.optimizer
    if getattr(args, "coarse", False):
        optimizer = optimizer.coarse()
    if grid:
        optimizer = replace(optimizer, grid_theta=grid[0], grid_phi=grid[1])
    refinements = getattr(args, "refinements", None)
    if refinements:
        optimizer = replace(optimizer, starts=refinements)
    deficit_tol = getattr(args, "tolerance", None)
    tolerances = config.tolerances
    if deficit_tol is not None:
        tolerances = replace(tolerances, deficit=deficit_tol)
    return replace(config, optimizer=optimizer, tolerances=tolerances)


def _emit_report(command: str, config: RunConfig, payload: object) -> None:
    if config.output is None:
        return
    report = reports.build_report(command, config.header(), payload)
    path = reports.write_json_report(config.output, report)
    print(f"Report written to {path} (sha256 {short_digest(file_sha256(path))})")


def _density(state: state_io.StateObject) -> qstate.DensityMatrix:
    if isinstance(state, families.SeparableDecomposition):
        return state.density()
    return qstate.as_density(state)


def _decomposition(path: Path) -> families.SeparableDecomposition:
    state = state_io.parse_state_file(path)
    if not isinstance(state, families.SeparableDecomposition):
        raise state_io.ValidationError(f"{path}: kind must be 'decomposition'")
    return state


def command_validate(args: argparse.Namespace) -> int:
    state = state_io.parse_state_file(args.file)
    if isinstance(state, families.SeparableDecomposition):
        print(f"Decomposition with {state.k} terms on dims [{state.dim_a}, {state.dim_c}]")
        return EXIT_OK
    density = qstate.as_density(state)
    eigenvalues, _ = qstate.eig_hermitian(density)
    kind = "Pure state" if isinstance(state, qstate.PureState) else "Density matrix"
    print(f"{kind} on {'x'.join(map(str, density.dims))} labels {','.join(density.labels)}")
    print(f"Purity {density.purity():.12g}, rank {int(np.sum(eigenvalues > qstate.HERMITIAN_TOL))}")
    return EXIT_OK


def command_measure(args: argparse.Namespace) -> int:
    config = _config(args)
    state = state_io.parse_state_file(args.file)
    density = _density(state)
    kind = config.measure
    result = measures.measure(density, kind, args.measured, args.rest, config.optimizer)
    payload: Dict[str, object] = {"measure": kind, "measured": args.measured, "result": result.as_dict()}
    if kind == measures.MeasureName.GDISCORD.value and isinstance(state, qstate.PureState):
        payload["pure_formula"] = measures.geometric_discord_pure(state, args.measured)
    if kind == measures.MeasureName.DISCORD.value:
        payload["measurements"] = "rank-1 projective"
    print(f"{kind}({args.measured}) = {result.value:.10g}")
    _emit_report("measure", config, payload)
    return EXIT_OK


def command_deficit(args: argparse.Namespace) -> int:
    config = _config(args)
    density = _density(state_io.parse_state_file(args.file))
    report = monogamy.deficit(
        density,
        config.measure,
        head=args.head,
        config=config.optimizer,
        tolerance=config.tolerances.deficit,
    )
    print(
        f"{report.measure_name} deficit ({report.head}-headed) = {report.deficit:.10g} "
        f"[{report.verdict.value}]"
    )
    _emit_report("deficit", config, report.as_dict())
    if args.expect_satisfied and report.verdict is monogamy.Verdict.VIOLATED:
        return EXIT_FAIL
    return EXIT_OK


def command_verify_pure_monogamy(args: argparse.Namespace) -> int:
    config = _config(args, measures.MeasureName.GDISCORD.value)
    summary = monogamy.verify_pure_monogamy(
        config.samples, config.seed, config=config.optimizer, workers=config.workers
    )
    print(
        f"{summary.samples} samples, min deficit {summary.min_deficit:.6g} "
        f"(seed {summary.argmin_seed}): {'PASS' if summary.passed else 'FAIL'}"
    )
    _emit_report("verify pure-monogamy", config, summary.as_dict())
    return EXIT_OK if summary.passed else EXIT_FAIL


def command_verify_proof_bound(args: argparse.Namespace) -> int:
    config = _config(args, measures.MeasureName.GDISCORD.value)
    summary = monogamy.verify_proof_bound(config.samples, config.seed)
    print(
        f"Closed-form gap {summary.max_abs_gap:.3e}, min lhs-rhs {summary.min_lhs_minus_rhs:.3e}, "
        f"c in [{summary.c_min:.6g}, {summary.c_max:.6g}]"
    )
    _emit_report("verify proof-bound", config, summary.as_dict())
    return EXIT_OK if summary.passed else EXIT_FAIL


def command_verify_maximality(args: argparse.Namespace) -> int:
    config = _config(args)
    report = monogamy.pure_maximality_check(
        config.measure, args.mixed, args.pure, config.seed, config=config.optimizer
    )
    status = "not asserted" if not report.asserted else ("PASS" if report.passed else "FAIL")
    print(f"max pure {report.max_pure:.8g}, max mixed {report.max_mixed:.8g}: {status}")
    _emit_report("verify maximality", config, report.as_dict())
    return EXIT_FAIL if report.passed is False else EXIT_OK


def command_verify_ckw(args: argparse.Namespace) -> int:
    config = _config(args, measures.MeasureName.CONCURRENCE2.value)
    report = monogamy.ckw_check(config.samples, config.seed)
    anchors = abs(report.w_slack) <= monogamy.CKW_TOLERANCE and abs(report.ghz_slack - 1.0) <= monogamy.CKW_TOLERANCE
    print(
        f"min slack {report.min_slack:.3e} over {report.samples} states; "
        f"W {report.w_slack:.3e}, GHZ {report.ghz_slack:.10g}"
    )
    _emit_report("verify ckw", config, report.as_dict())
    return EXIT_OK if report.passed and anchors else EXIT_FAIL


def _monotonicity(args: argparse.Namespace, measure_name: str, command: str) -> int:
    config = _config(args, measure_name)
    report = monogamy.channel_monotonicity_check(measure_name, args.trials, config.seed, config=config.optimizer)
    payload = report.as_dict()
    payload["witness_state"] = state_io.serialize_state(report.witness_state)
    payload["witness_channel"] = [
        [[[float(v.real), float(v.imag)] for v in row] for row in operator]
        for operator in report.witness_channel.operators
    ]
    print(f"Largest {measure_name} increase {report.max_increase:.6g} (seed {report.witness_seed})")
    _emit_report(command, config, payload)
    if measure_name == measures.MeasureName.GDISCORD.value:
        return EXIT_OK
    return EXIT_OK if report.max_increase <= MONOTONE_TOL else EXIT_FAIL


def command_verify_monotonicity(args: argparse.Namespace) -> int:
    return _monotonicity(args, args.measure, "verify monotonicity")


def command_search_gdiscord_increase(args: argparse.Namespace) -> int:
    return _monotonicity(args, measures.MeasureName.GDISCORD.value, "search gdiscord-increase")


def command_search_discord_violation(args: argparse.Namespace) -> int:
    config = _config(args, measures.MeasureName.DISCORD.value)
    report = monogamy.discord_pure_violation_search(
        config.samples, config.seed, threshold=args.threshold, config=config.optimizer
    )
    payload = report.as_dict()
    if report.witness_state is not None:
        payload["witness_state"] = state_io.serialize_state(report.witness_state)
    if report.found:
        print(f"Discord deficit {report.witness_report.deficit:.6g} at seed {report.witness_seed}")
    else:
        print(f"No deficit below -{report.threshold:g} in {report.samples_evaluated} samples")
    _emit_report("search discord-pure-violation", config, payload)
    return EXIT_OK if report.found else EXIT_FAIL


def command_certificate_separable(args: argparse.Namespace) -> int:
    config = _config(args)
    dec = _decomposition(args.dec)
    certificate = monogamy.violation_certificate(
        dec, config.measure, config=config.optimizer, tolerance=config.tolerances.deficit
    )
    payload = {
        "decomposition": state_io.serialize_state(dec),
        "state": state_io.serialize_state(certificate.state),
        "report": certificate.report.as_dict(),
        "chain_check": certificate.chain_check.as_dict(),
    }
    print(
        f"Certificate: {certificate.report.measure_name} deficit {certificate.report.deficit:.10g} "
        f"[{certificate.report.verdict.value}]"
    )
    _emit_report("certificate separable", config, payload)
    return EXIT_OK


def command_extend(args: argparse.Namespace) -> int:
    config = _config(args)
    dec = _decomposition(args.dec)
    results = monogamy.extension_check(
        dec, config.measure, args.n_max, config=config.optimizer, tolerance=config.tolerances.deficit
    )
    first = next((entry.n for entry in results if entry.violated), None)
    payload = {"reports": [entry.as_dict() for entry in results], "smallest_violating_n": first}
    if first is None:
        print(f"No violation up to n = {args.n_max}")
    else:
        print(f"Smallest violating n = {first}")
    _emit_report("extend", config, payload)
    return EXIT_OK


def command_scan_brun(args: argparse.Namespace) -> int:
    config = _config(args, measures.MeasureName.GDISCORD.value)
    samples = monogamy.scan_brun(config.samples, config.seed, config=config.optimizer, workers=config.workers)
    minimum = min(sample.report.deficit for sample in samples)
    print(f"Scanned {len(samples)} Brun states, min deficit {minimum:.6g}")
    if config.output is None:
        return EXIT_OK
    if (args.format or config.output_format) == "csv":
        path = reports.write_csv_report(config.output, [sample.row() for sample in samples])
        print(f"Report written to {path} (sha256 {short_digest(file_sha256(path))})")
    else:
        payload = {
            "sampling": families.BRUN_SAMPLING,
            "rows": [sample.row() for sample in samples],
        }
        _emit_report("scan brun", config, payload)
    return EXIT_OK


def command_export_named(args: argparse.Namespace) -> int:
    path = state_io.write_state_file(args.out, families.named_state(args.name))
    print(f"Wrote {args.name} to {path}")
    return EXIT_OK


def _add_run_options(parser: argparse.ArgumentParser, *, samples: bool = False, optimizer: bool = True) -> None:
    parser.add_argument("--seed", type=int, help="Root seed for random sampling")
    parser.add_argument("--out", type=Path, help="Report file to write")
    if samples:
        parser.add_argument("--samples", type=int, help="Number of random samples")
    if optimizer:
        parser.add_argument("--grid", type=int, nargs=2, metavar=("THETA", "PHI"), help="Coarse grid size")
        parser.add_argument("--refinements", type=int, help="Number of local refinements")
        parser.add_argument("--tolerance", type=float, help="Deficit tolerance override")


def _measure_choice(parser: argparse.ArgumentParser, flag: str = "--measure", default: Optional[str] = None) -> None:
    parser.add_argument(
        flag,
        dest="measure",
        choices=[member.value for member in measures.MeasureName],
        default=default,
        help="Correlation measure (default: the settings file measure)" if default is None else None,
    )


def _sweep_optimizer_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--workers", type=int, help="Worker processes")
    parser.add_argument("--coarse", action="store_true", help="Single-start 16x32 optimizer (the default)")
    parser.add_argument(
        "--full-optimizer",
        dest="coarse",
        action="store_false",
        help="Use the settings optimizer instead of the coarse one",
    )
    parser.set_defaults(coarse=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Monocorr monogamy-of-correlations toolkit")
    parser.add_argument("--settings", help="Settings file (defaults to the application settings)")
    parser.add_argument("--verbose", action="store_true", help="Log debug output to standard error")
    subparsers = parser.add_subparsers(dest="command", required=True)

    validate_parser = subparsers.add_parser("validate", help="Check a state file")
    validate_parser.add_argument("file", type=Path)
    validate_parser.set_defaults(func=command_validate)

    measure_parser = subparsers.add_parser("measure", help="Evaluate a correlation measure")
    _measure_choice(measure_parser, "--kind")
    measure_parser.add_argument("--measured", default="A", help="Measured qubit label")
    measure_parser.add_argument("--rest", nargs="+", help="Unmeasured labels (default: all others)")
    measure_parser.add_argument("file", type=Path)
    _add_run_options(measure_parser)
    measure_parser.set_defaults(func=command_measure)

    deficit_parser = subparsers.add_parser("deficit", help="Monogamy deficit of a tripartite state")
    _measure_choice(deficit_parser)
    deficit_parser.add_argument("--head", default="A", help="Head party of the monogamy split")
    deficit_parser.add_argument("--expect-satisfied", action="store_true", help="Exit 1 on a violated verdict")
    deficit_parser.add_argument("file", type=Path)
    _add_run_options(deficit_parser)
    deficit_parser.set_defaults(func=command_deficit)

    verify_parser = subparsers.add_parser("verify", help="Run a verification sweep")
    verify_sub = verify_parser.add_subparsers(dest="target", required=True)

    pure_check = verify_sub.add_parser(
        "pure-monogamy", aliases=["theorem3"], help="Geometric-discord monogamy on pure three-qubit states"
    )
    _add_run_options(pure_check, samples=True)
    _sweep_optimizer_options(pure_check)
    pure_check.set_defaults(func=command_verify_pure_monogamy)

    proof = verify_sub.add_parser("proof-bound", help="Closed-form bound and coefficient range")
    _add_run_options(proof, samples=True, optimizer=False)
    proof.set_defaults(func=command_verify_proof_bound)

    maximality = verify_sub.add_parser("maximality", help="Pure states attain the maximum")
    _measure_choice(maximality, default=measures.MeasureName.DISCORD.value)
    maximality.add_argument("--mixed", type=int, default=500)
    maximality.add_argument("--pure", type=int, default=500)
    _add_run_options(maximality)
    maximality.set_defaults(func=command_verify_maximality)

    ckw = verify_sub.add_parser("ckw", help="Squared-concurrence monogamy baseline")
    _add_run_options(ckw, samples=True, optimizer=False)
    ckw.set_defaults(func=command_verify_ckw)

    monotone = verify_sub.add_parser("monotonicity", help="No increase under channels on the unmeasured side")
    _measure_choice(monotone, default=measures.MeasureName.DISCORD.value)
    monotone.add_argument("--trials", type=int, default=200)
    _add_run_options(monotone)
    monotone.set_defaults(func=command_verify_monotonicity)

    certificate_parser = subparsers.add_parser("certificate", help="Build a violation certificate")
    certificate_sub = certificate_parser.add_subparsers(dest="target", required=True)
    separable = certificate_sub.add_parser(
        "separable", aliases=["theorem1"], help="Monogamy violation from a discordant separable state"
    )
    separable.add_argument("--dec", type=Path, required=True, help="Decomposition state file")
    _measure_choice(separable)
    _add_run_options(separable)
    separable.set_defaults(func=command_certificate_separable)

    extend_parser = subparsers.add_parser("extend", help="Symmetric-extension check")
    extend_parser.add_argument("--dec", type=Path, required=True, help="Decomposition state file")
    _measure_choice(extend_parser)
    extend_parser.add_argument("--n-max", type=int, default=10)
    _add_run_options(extend_parser)
    extend_parser.set_defaults(func=command_extend)

    search_parser = subparsers.add_parser("search", help="Random witness searches")
    search_sub = search_parser.add_subparsers(dest="target", required=True)
    discord_search = search_sub.add_parser("discord-pure-violation", help="Discord deficit below -threshold")
    discord_search.add_argument("--threshold", type=float, default=1e-3)
    _add_run_options(discord_search, samples=True)
    discord_search.set_defaults(func=command_search_discord_violation)
    increase = search_sub.add_parser("gdiscord-increase", help="Geometric discord increase under a channel")
    increase.add_argument("--trials", type=int, default=1000)
    _add_run_options(increase)
    increase.set_defaults(func=command_search_gdiscord_increase)

    scan_parser = subparsers.add_parser("scan", help="Parameter scans")
    scan_sub = scan_parser.add_subparsers(dest="target", required=True)
    brun = scan_sub.add_parser("brun", help="Per-sample deficits of random Brun states")
    brun.add_argument("--format", choices=("csv", "json"), help="Output format (default: settings output.format)")
    _sweep_optimizer_options(brun)
    _add_run_options(brun, samples=True)
    brun.set_defaults(func=command_scan_brun)

    export_parser = subparsers.add_parser("export", help="Write state files")
    export_sub = export_parser.add_subparsers(dest="target", required=True)
    named = export_sub.add_parser("named", help="Write a named state")
    named.add_argument("name", choices=[member.value for member in families.NamedState])
    named.add_argument("--out", type=Path, required=True)
    named.set_defaults(func=command_export_named)

    return parser


_INPUT_ERRORS = (
    state_io.StateFileError,
    qstate.QStateError,
    families.FamilyError,
    measures.MeasureError,
    UsageError,
)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(logging.DEBUG if args.verbose else logging.INFO, console=args.verbose)
    handler: Callable[[argparse.Namespace], int] = args.func
    try:
        return handler(args)
    except _INPUT_ERRORS as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (monogamy.MonogamyError, reports.ReportError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
