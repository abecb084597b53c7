"""
Terminal and JSON rendering for the report-style subcommands.
"""

import json
import sys
from typing import Any, Mapping

from rich.console import Console
from rich.table import Table

from src.core.secure_design import DesignReport
from src.oracle.crosscheck import CrossCheckReport


def _fmt(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def render_json(payload: Mapping[str, Any]) -> None:
    """Machine-readable form: one JSON document on stdout, keys sorted."""
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def render_design(console: Console, report: DesignReport) -> None:
    table = Table(title=f"Secure design  n̄_max={_fmt(report['nbar_max'])}  K={_fmt(report['K'])}")
    table.add_column("field")
    table.add_column("value", justify="right")
    for key, value in report.items():
        table.add_row(key, _fmt(value))
    console.print(table)


def render_crosscheck(console: Console, report: CrossCheckReport) -> None:
    header = Table(title=f"Oracle check  n̄={_fmt(report['nbar'])}  r={_fmt(report['r'])}")
    header.add_column("field")
    header.add_column("value", justify="right")
    for key in ("cutoff_coherent", "tail_coherent", "cutoff_epr", "tail_epr", "fidelity_epr_printed"):
        header.add_row(key, _fmt(report[key]))
    console.print(header)

    checks = Table(title="Closed form vs. oracle")
    for column in ("check", "oracle", "closed form", "tolerance", "pass"):
        checks.add_column(column, justify="left" if column == "check" else "right")
    for row in report["checks"]:
        checks.add_row(
            row["name"],
            _fmt(row["oracle"]),
            _fmt(row["closed_form"]),
            f"{row['tolerance']:.0e}",
            "[green]PASS[/green]" if row["passed"] else "[red]FAIL[/red]",
        )
    console.print(checks)


__all__ = ["render_json", "render_design", "render_crosscheck"]
