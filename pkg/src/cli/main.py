#!/usr/bin/env python3
"""
Quantum Reading V1.0.0 — Command Line
======================================
CSV data for the readout figures, secure-memory design reports and the Fock
oracle cross-check.

Subcommands:
    sweep-delta        Δ(n̄, r) over a high-reflectivity grid
    condition-curves   classical / quantum information along 1 - r = K/n̄
    classical-cap      classical information for n̄ <= n̄_max on a fixed cell
    asymptote-curve    n̄ -> ∞ quantum information as a function of K
    design             design report for (n̄_max, K)
    oracle-check       closed forms vs. the Fock oracle at one (n̄, r)

Exit codes: 0 ok, 2 domain/config error, 3 I/O error, 4 oracle tolerance failure.

Usage:
    python -m src.cli sweep-delta --out delta.csv
    python -m src.cli condition-curves --K 10
    python -m src.cli design --nbar-max 1000 --K 1 --json
    python -m src.cli oracle-check --nbar 1 --r 0.25
"""

import argparse
from pathlib import Path
import sys
from typing import Optional, Sequence

from rich.console import Console

from config.settings import VERSION, get_settings
from src.core.errors import (
    EXIT_OK,
    ConfigError,
    OracleToleranceError,
    QuantumReadingError,
    exit_code_for,
)
from src.core.secure_design import DesignSpec, design_report
from src.oracle.crosscheck import run_crosscheck
from src.utils.logging_setup import configure_logging, get_logger

from .reporting import render_crosscheck, render_design, render_json
from .sweeps import (
    GridScale,
    SweepConfig,
    SweepDefaults,
    asymptote_table,
    classical_cap,
    condition_curves,
    sweep_delta,
    write_csv,
)

logger = get_logger("qreading.cli")


# =============================================================================
# PARSER
# =============================================================================

def _output_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--out", type=Path, default=None, help="CSV destination (default: stdout)")
    parent.add_argument("--precision", type=int, default=None, help="significant digits (6-17)")
    return parent


def _logging_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parent.add_argument("--log-json", action="store_true", help="JSON log lines on stderr")
    return parent


def _grid_options(with_r: bool) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--n-min", type=float, default=None)
    parent.add_argument("--n-max", type=float, default=None)
    parent.add_argument("--n-steps", type=int, default=SweepDefaults.STEPS)
    parent.add_argument("--n-scale", choices=[s.value for s in GridScale], default=GridScale.LOG.value)
    if with_r:
        parent.add_argument("--r-min", type=float, default=SweepDefaults.DELTA_R_MIN)
        parent.add_argument("--r-max", type=float, default=SweepDefaults.DELTA_R_MAX)
        parent.add_argument("--r-steps", type=int, default=SweepDefaults.STEPS)
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quantum-reading",
        description="Quantum reading of a digital memory: figure data, design, oracle checks",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    output = _output_options()
    logs = _logging_options()

    sub.add_parser(
        "sweep-delta",
        parents=[_grid_options(with_r=True), output, logs],
        help="Δ(n̄, r) = I_quant - I_class over a grid",
    )

    p = sub.add_parser(
        "condition-curves",
        parents=[_grid_options(with_r=False), output, logs],
        help="information of both readers along 1 - r = K/n̄",
    )
    p.add_argument("--K", type=float, default=1.0, help="gap coefficient")

    p = sub.add_parser(
        "classical-cap",
        parents=[_grid_options(with_r=False), output, logs],
        help="classical information for every n̄ <= n̄_max",
    )
    p.add_argument("--nbar-max", type=float, default=SweepDefaults.CAP_NBAR_MAX)
    p.add_argument("--K", type=float, default=1.0)

    p = sub.add_parser(
        "asymptote-curve",
        parents=[output, logs],
        help="limiting quantum information versus K",
    )
    p.add_argument("--K-min", type=float, default=SweepDefaults.ASYMPTOTE_K_MIN)
    p.add_argument("--K-max", type=float, default=SweepDefaults.ASYMPTOTE_K_MAX)
    p.add_argument("--K-steps", type=int, default=SweepDefaults.STEPS)

    p = sub.add_parser("design", parents=[logs], help="secure-memory design report")
    p.add_argument("--nbar-max", type=float, default=SweepDefaults.CAP_NBAR_MAX)
    p.add_argument("--K", type=float, default=1.0)
    p.add_argument("--json", action="store_true", help="JSON on stdout, table on stderr")

    p = sub.add_parser("oracle-check", parents=[logs], help="closed forms vs. Fock oracle")
    p.add_argument("--nbar", type=float, default=1.0)
    p.add_argument("--r", type=float, default=0.25)
    p.add_argument("--cutoff", type=int, default=None, help="override the automatic cutoff")
    p.add_argument("--force", action="store_true", help="allow n̄ beyond desk scale")
    p.add_argument("--json", action="store_true", help="print JSON instead of tables")

    return parser


# =============================================================================
# SUBCOMMANDS
# =============================================================================

def _precision(args: argparse.Namespace) -> int:
    return get_settings().csv_precision if args.precision is None else args.precision


def _sweep_config(args: argparse.Namespace, n_min: float, n_max: float, **extra: object) -> SweepConfig:
    return SweepConfig.build(
        n_min=n_min if args.n_min is None else args.n_min,
        n_max=n_max if args.n_max is None else args.n_max,
        n_steps=args.n_steps,
        n_scale=args.n_scale,
        output_path=args.out,
        precision=_precision(args),
        **extra,
    )


def cmd_sweep_delta(args: argparse.Namespace) -> int:
    config = _sweep_config(
        args,
        SweepDefaults.DELTA_N_MIN,
        SweepDefaults.DELTA_N_MAX,
        r_min=args.r_min,
        r_max=args.r_max,
        r_steps=args.r_steps,
    )
    write_csv(sweep_delta(config), config.output_path, config.precision)
    return EXIT_OK


def cmd_condition_curves(args: argparse.Namespace) -> int:
    if not args.K > 0.0:
        raise ConfigError(f"--K must be > 0, got {args.K}")
    config = _sweep_config(
        args,
        SweepDefaults.CONDITION_N_MIN_FACTOR * args.K,
        SweepDefaults.CONDITION_N_MAX,
    )
    write_csv(condition_curves(args.K, config), config.output_path, config.precision)
    return EXIT_OK


def cmd_classical_cap(args: argparse.Namespace) -> int:
    config = _sweep_config(args, 1.0, args.nbar_max)
    write_csv(classical_cap(args.nbar_max, args.K, config), config.output_path, config.precision)
    return EXIT_OK


def cmd_asymptote_curve(args: argparse.Namespace) -> int:
    precision = _precision(args)
    if not 6 <= precision <= 17:
        raise ConfigError(f"--precision must lie in [6, 17], got {precision}")
    write_csv(asymptote_table(args.K_min, args.K_max, args.K_steps), args.out, precision)
    return EXIT_OK


def cmd_design(args: argparse.Namespace) -> int:
    report = design_report(DesignSpec(nbar_max=args.nbar_max, K=args.K))
    if args.json:
        # table to stderr keeps stdout parseable
        render_design(Console(stderr=True), report)
        render_json(report)
    else:
        render_design(Console(), report)
    return EXIT_OK


def cmd_oracle_check(args: argparse.Namespace) -> int:
    settings = get_settings()
    if args.nbar > settings.oracle_desk_scale_nbar and not args.force:
        raise ConfigError(
            f"nbar={args.nbar} is beyond desk scale ({settings.oracle_desk_scale_nbar}); "
            f"pass --force to run anyway"
        )
    report = run_crosscheck(args.nbar, args.r, cutoff=args.cutoff)
    if args.json:
        render_json(report)
    else:
        render_crosscheck(Console(), report)
    if not report["passed"]:
        failed = [row["name"] for row in report["checks"] if not row["passed"]]
        raise OracleToleranceError(f"oracle check failed: {', '.join(failed)}", failures=failed)
    return EXIT_OK


COMMANDS = {
    "sweep-delta": cmd_sweep_delta,
    "condition-curves": cmd_condition_curves,
    "classical-cap": cmd_classical_cap,
    "asymptote-curve": cmd_asymptote_curve,
    "design": cmd_design,
    "oracle-check": cmd_oracle_check,
}


# =============================================================================
# ENTRY POINT
# =============================================================================

def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()
    configure_logging(
        level="DEBUG" if args.verbose else settings.log_level,
        json=args.log_json or settings.log_json,
    )

    try:
        return COMMANDS[args.command](args)
    except (QuantumReadingError, OSError) as e:
        code = exit_code_for(e)
        logger.error("command_failed", command=args.command, error=str(e), exit_code=code)
        Console(stderr=True).print(f"[red]error:[/red] {e}", markup=True, highlight=False)
        return code


if __name__ == "__main__":
    sys.exit(main())
