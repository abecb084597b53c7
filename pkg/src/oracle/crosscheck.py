"""
Closed forms vs. Fock oracle at one (n̄, r) point.

Runs the coherent pair and the lossy TMSV through the oracle and compares
against src.core:
- coherent overlap and exact Helstrom error vs. the closed forms
- exact EPR Helstrom error below the QCB
- ⟨ψ|σ₀|ψ⟩ vs. the EPR fidelity
- moments of σ₀ vs. the lossy EPR covariance matrix

The expression (1 + n̄ + n̄√r)⁻² is reported next to the oracle fidelity
without being checked.
"""

import math
from typing import Optional, TypedDict

from config.settings import get_settings
from src.core.errors import DomainError
from src.core.gaussian_core import (
    apply_loss_to_signal,
    epr_covariance,
    fidelity_coherent,
    fidelity_epr_closed,
    fidelity_epr_printed,
)
from src.core.readout_model import classical_error_prob, quantum_error_prob_qcb
from src.utils.logging_setup import get_logger

from .fock_oracle import (
    coherent_hypotheses,
    density_from_vector,
    epr_hypotheses,
    helstrom_exact,
    moments_from_density,
    overlap_fidelity,
    pure_state_fidelity,
)

logger = get_logger("qreading.oracle.crosscheck")

BOUND_SLACK = 1e-9


class CheckRow(TypedDict):
    name: str
    oracle: float
    closed_form: float
    tolerance: float
    passed: bool


class CrossCheckReport(TypedDict):
    nbar: float
    r: float
    cutoff_coherent: int
    cutoff_epr: int
    tail_coherent: float
    tail_epr: float
    fidelity_epr_printed: float
    checks: list[CheckRow]
    passed: bool


def _agreement(name: str, oracle: float, closed: float, tolerance: float) -> CheckRow:
    return CheckRow(
        name=name,
        oracle=oracle,
        closed_form=closed,
        tolerance=tolerance,
        passed=abs(oracle - closed) <= tolerance,
    )


def run_crosscheck(
    nbar: float,
    r: float,
    cutoff: Optional[int] = None,
    tolerance: Optional[float] = None,
) -> CrossCheckReport:
    """
    Compare every closed form against the oracle at (n̄, r).

    Example:
        report = run_crosscheck(1.0, 0.25)
        report["passed"]   # True
    """
    if not (math.isfinite(nbar) and nbar >= 0.0):
        raise DomainError(f"nbar must be >= 0, got {nbar}")
    if not (math.isfinite(r) and 0.0 <= r <= 1.0):
        raise DomainError(f"reflectivity r must lie in [0, 1], got {r}")
    tol = get_settings().oracle_check_tolerance if tolerance is None else tolerance

    checks: list[CheckRow] = []

    # coherent transmitter
    bit0, bit1 = coherent_hypotheses(nbar, r, cutoff=cutoff)
    checks.append(_agreement(
        "coherent_fidelity", overlap_fidelity(bit0, bit1), float(fidelity_coherent(nbar, r)), tol
    ))
    coherent = helstrom_exact(density_from_vector(bit0), density_from_vector(bit1))
    checks.append(_agreement(
        "coherent_helstrom", coherent["p_bar"], float(classical_error_prob(nbar, r)), tol
    ))

    # EPR transmitter
    sigma0, sigma1, psi = epr_hypotheses(nbar, r, cutoff=cutoff)
    epr = helstrom_exact(sigma0, sigma1)
    qcb = float(quantum_error_prob_qcb(nbar, r))
    checks.append(CheckRow(
        name="epr_helstrom_below_qcb",
        oracle=epr["p_bar"],
        closed_form=qcb,
        tolerance=BOUND_SLACK,
        passed=epr["p_bar"] <= qcb + BOUND_SLACK,
    ))
    fidelity_oracle = pure_state_fidelity(psi, sigma0)
    checks.append(_agreement(
        "epr_fidelity", fidelity_oracle, float(fidelity_epr_closed(nbar, r)), tol
    ))

    expected = apply_loss_to_signal(epr_covariance(2.0 * nbar + 1.0), r)
    estimate = moments_from_density(sigma0).covariance
    for entry in ("a", "b", "c"):
        checks.append(_agreement(
            f"moment_{entry}",
            float(getattr(estimate, entry)),
            float(getattr(expected, entry)),
            tol,
        ))

    report = CrossCheckReport(
        nbar=nbar,
        r=r,
        cutoff_coherent=bit1.cutoff,
        cutoff_epr=psi.cutoff,
        tail_coherent=bit1.tail,
        tail_epr=psi.tail,
        fidelity_epr_printed=float(fidelity_epr_printed(nbar, r)),
        checks=checks,
        passed=all(row["passed"] for row in checks),
    )
    failed = [row["name"] for row in checks if not row["passed"]]
    if failed:
        logger.warning("oracle_crosscheck_failed", nbar=nbar, r=r, failed=failed)
    else:
        logger.info("oracle_crosscheck_passed", nbar=nbar, r=r, checks=len(checks))
    return report


__all__ = ["BOUND_SLACK", "CheckRow", "CrossCheckReport", "run_crosscheck"]
