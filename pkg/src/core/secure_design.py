"""
Quantum Reading V1.0.0 — Secure Memory Design
==============================================
Choose the cell reflectivity from the photon budget so that coherent-state
readers get essentially nothing while the EPR reader keeps a finite number
of bits per cell.

DESIGN RULE:
    1 - r = K / n̄_max        (K = gap coefficient, 0 < K < n̄_max)

Under this rule, as n̄ -> ∞:
    I_class ≈ K²/(n̄ ln 256) -> 0
    I_quant -> 1 - H((1 + K/2)⁻²/2)
      K = 1    -> 0.235795...  = [ln(2048/81) - 7 ln(9/7)]/ln 512
      K = 10   -> 0.8944
      K = 100  -> 0.9973

The gap coefficient is the only parameter exposed. A constant "c" with
1 - r = c/n̄ reproduces the limits 0.895 and 0.997 quoted for c = 0.1 and
c = 0.01 only under K = 1/c; the two readings coincide at K = c = 1.

INVERSE DESIGN:
Along the design rule, n̄(1-√r) = K/(1 + √(1 - K/n̄)) falls towards K/2, so
I_quant DECREASES with the budget and approaches its limit from above.
budget_for_target_quantum_info() therefore returns the largest budget that
still gives the EPR reader at least the target: the most classically secure
cell that keeps the quantum reader above target.
"""

from dataclasses import dataclass
import math
from typing import TypedDict

import numpy as np
from numpy.typing import ArrayLike

from src.utils.logging_setup import get_logger

from ._numeric import FloatOrArray, as_float_array, to_output
from .discrimination import readout_information_from_bias
from .errors import DesignInfeasibleError, DomainError, NumericalDegeneracyError, UnreachableTargetError
from .readout_model import (
    LN256,
    info_classical_at_gap,
    info_quantum_at_gap,
)

logger = get_logger("qreading.core.secure_design")


# =============================================================================
# CONFIGURATION
# =============================================================================

class DesignConfig:
    """Inverse-design search parameters."""
    BRACKET_LOW_OFFSET: float = 1.0       # lower bracket = K + 1
    BRACKET_HIGH: float = 1e12
    RELATIVE_TOLERANCE: float = 1e-9
    MONOTONICITY_GRID: int = 64
    MONOTONICITY_SLACK: float = 1e-12


# =============================================================================
# DOMAIN TYPES
# =============================================================================

@dataclass(frozen=True)
class DesignSpec:
    """Photon budget per cell and gap coefficient K (1 - r = K/n̄_max)."""
    nbar_max: float
    K: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.nbar_max) and self.nbar_max >= 1.0):
            raise DomainError(f"nbar_max must be >= 1, got {self.nbar_max}")
        if not (math.isfinite(self.K) and self.K > 0.0):
            raise DomainError(f"gap coefficient K must be > 0, got {self.K}")
        if self.K >= self.nbar_max:
            raise DesignInfeasibleError(
                f"K={self.K} >= nbar_max={self.nbar_max} gives r <= 0; "
                f"choose K below the photon budget"
            )


class DesignReport(TypedDict):
    """Outcome of a secure-memory design."""
    nbar_max: float
    K: float
    r: float
    info_classical_cap: float       # best coherent reader with n̄ <= n̄_max
    info_quantum: float             # EPR reader at n̄_max (QCB-derived lower bound)
    delta: float
    asymptotic_quantum: float       # n̄ -> ∞ limit at this K
    asymptotic_classical: float     # K²/(n̄_max ln 256)


# =============================================================================
# DESIGN RULE
# =============================================================================

def reflectivity_for_budget(nbar_max: float, K: float) -> float:
    """
    r = 1 - K/n̄_max.

    Example:
        reflectivity_for_budget(1000, 1)   # 0.999
    """
    if not (math.isfinite(K) and K > 0.0):
        raise DomainError(f"gap coefficient K must be > 0, got {K}")
    if not (math.isfinite(nbar_max) and nbar_max > 0.0):
        raise DomainError(f"nbar_max must be > 0, got {nbar_max}")
    if K >= nbar_max:
        raise DesignInfeasibleError(
            f"K={K} >= nbar_max={nbar_max} gives r <= 0; choose K below the photon budget"
        )
    return 1.0 - K / nbar_max


def asymptotic_quantum_info(K: ArrayLike) -> FloatOrArray:
    """
    lim_{n̄->∞} I_quant(n̄, 1 - K/n̄) = 1 - H((1 + K/2)⁻²/2).

    Example:
        asymptotic_quantum_info(1.0)   # 0.235795...
    """
    k = as_float_array(K, "gap coefficient K")
    if np.any(k <= 0.0):
        raise DomainError(f"gap coefficient K must be > 0, got {K!r}")
    y = k / 2.0
    return readout_information_from_bias(y * (2.0 + y) / (1.0 + y) ** 2)


def asymptotic_classical_info(nbar: ArrayLike, K: ArrayLike) -> FloatOrArray:
    """K²/(n̄ ln 256): leading behaviour of I_class along the design rule."""
    n = as_float_array(nbar, "nbar")
    k = as_float_array(K, "gap coefficient K")
    if np.any(n <= 0.0) or np.any(k <= 0.0):
        raise DomainError("asymptotic_classical_info needs nbar > 0 and K > 0")
    return to_output(k * k / (n * LN256))


def design_curve_quantum_info(nbar: ArrayLike, K: float) -> FloatOrArray:
    """I_quant(n̄, 1 - K/n̄) for each n̄ > K."""
    n = as_float_array(nbar, "nbar")
    if np.any(n <= K):
        raise DesignInfeasibleError(f"every nbar must exceed K={K}")
    return info_quantum_at_gap(n, K / n)


def design_curve_classical_info(nbar: ArrayLike, K: float) -> FloatOrArray:
    """I_class(n̄, 1 - K/n̄) for each n̄ > K."""
    n = as_float_array(nbar, "nbar")
    if np.any(n <= K):
        raise DesignInfeasibleError(f"every nbar must exceed K={K}")
    return info_classical_at_gap(n, K / n)


# =============================================================================
# REPORTS
# =============================================================================

def design_report(spec: DesignSpec) -> DesignReport:
    """
    Evaluate a design at its full photon budget.

    The classical cap is taken at n̄_max: I_class is non-decreasing in n̄ at
    fixed r, so the most energetic allowed coherent reader is the best one.

    Example:
        report = design_report(DesignSpec(nbar_max=1000, K=1))
        report["r"]                   # 0.999
        report["info_classical_cap"]  # ≈ 1.8e-4
    """
    r = reflectivity_for_budget(spec.nbar_max, spec.K)
    gap = spec.K / spec.nbar_max
    classical = float(info_classical_at_gap(spec.nbar_max, gap))
    quantum = float(info_quantum_at_gap(spec.nbar_max, gap))

    report = DesignReport(
        nbar_max=float(spec.nbar_max),
        K=float(spec.K),
        r=r,
        info_classical_cap=classical,
        info_quantum=quantum,
        delta=quantum - classical,
        asymptotic_quantum=float(asymptotic_quantum_info(spec.K)),
        asymptotic_classical=float(asymptotic_classical_info(spec.nbar_max, spec.K)),
    )

    logger.info(
        "design_report",
        nbar_max=spec.nbar_max,
        K=spec.K,
        r=r,
        info_classical_cap=f"{classical:.3e}",
        info_quantum=f"{quantum:.6f}",
        delta=f"{report['delta']:.6f}",
    )
    return report


def asymptote_curve(K_grid: ArrayLike) -> FloatOrArray:
    """Limiting EPR information for each gap coefficient in K_grid."""
    return asymptotic_quantum_info(K_grid)


def classical_cap_curve(nbar_max: float, K: float, nbar_grid: ArrayLike) -> FloatOrArray:
    """I_class of every coherent reader in nbar_grid on the cell designed for n̄_max."""
    reflectivity_for_budget(nbar_max, K)
    n = as_float_array(nbar_grid, "nbar")
    if np.any((n <= 0.0) | (n > nbar_max)):
        raise DomainError(f"nbar grid must lie in (0, {nbar_max}]")
    return info_classical_at_gap(n, K / nbar_max)


# =============================================================================
# INVERSE DESIGN
# =============================================================================

def budget_for_target_quantum_info(target_bits: float, K: float) -> float:
    """
    Largest photon budget n̄* such that every design n̄ <= n̄* along
    1 - r = K/n̄ gives the EPR reader at least target_bits.

    Bisection (geometric midpoints) on [K + 1, 1e12] to relative tolerance
    1e-9, after checking that the design curve is non-increasing on a log grid.

    Raises:
        UnreachableTargetError(reason="unbounded"): target <= the n̄ -> ∞
            limit, so every budget meets it.
        UnreachableTargetError(reason="unreachable"): target above the value
            at the lower bracket.

    Example:
        n_star = budget_for_target_quantum_info(0.25, 1.0)
        design_curve_quantum_info(n_star, 1.0) >= 0.25
    """
    if not (math.isfinite(K) and K > 0.0):
        raise DomainError(f"gap coefficient K must be > 0, got {K}")
    if not (math.isfinite(target_bits) and 0.0 < target_bits < 1.0):
        raise DomainError(f"target_bits must lie in (0, 1), got {target_bits}")

    cfg = DesignConfig
    limit = float(asymptotic_quantum_info(K))
    if target_bits <= limit:
        raise UnreachableTargetError(
            f"target {target_bits} <= asymptotic value {limit:.9f} for K={K}: "
            f"met at every budget, no finite maximum",
            reason="unbounded",
        )

    lo = K + cfg.BRACKET_LOW_OFFSET
    hi = cfg.BRACKET_HIGH

    def curve(n: float) -> float:
        return float(design_curve_quantum_info(n, K))

    top = curve(lo)
    if target_bits > top:
        raise UnreachableTargetError(
            f"target {target_bits} exceeds {top:.9f} reached at the smallest budget "
            f"nbar={lo} for K={K}",
            reason="unreachable",
        )

    probe = np.asarray(design_curve_quantum_info(np.geomspace(lo, hi, cfg.MONOTONICITY_GRID), K))
    if np.any(np.diff(probe) > cfg.MONOTONICITY_SLACK):
        raise NumericalDegeneracyError(f"design curve is not monotone for K={K}")

    if curve(hi) >= target_bits:
        logger.warning("inverse_design_bracket_limited", target=target_bits, K=K, nbar=hi)
        return hi

    iterations = 0
    while hi - lo > cfg.RELATIVE_TOLERANCE * lo:
        mid = math.sqrt(lo * hi)
        if curve(mid) >= target_bits:
            lo = mid
        else:
            hi = mid
        iterations += 1

    logger.info(
        "inverse_design",
        target=target_bits,
        K=K,
        nbar=lo,
        iterations=iterations,
    )
    return lo


__all__ = [
    "DesignConfig",
    "DesignSpec",
    "DesignReport",
    "reflectivity_for_budget",
    "asymptotic_quantum_info",
    "asymptotic_classical_info",
    "design_curve_quantum_info",
    "design_curve_classical_info",
    "design_report",
    "asymptote_curve",
    "classical_cap_curve",
    "budget_for_target_quantum_info",
]
