"""
Quantum Reading V1.0.0 — Figure Sweeps
=======================================
Grid definitions and the DataFrames behind each CSV subcommand.

Row order is deterministic: sweep-delta is r-major (every n̄ for the first
r, then the next r), the one-dimensional sweeps follow their grid.
"""

from enum import Enum
import math
from pathlib import Path
import sys
from typing import Optional

import numpy as np
from numpy.typing import NDArray
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.core.errors import ConfigError, DomainError
from src.core.readout_model import info_gain_delta
from src.core.secure_design import (
    asymptote_curve,
    classical_cap_curve,
    design_curve_classical_info,
    design_curve_quantum_info,
)
from src.utils.logging_setup import get_logger

logger = get_logger("qreading.cli.sweeps")


# =============================================================================
# CONFIGURATION
# =============================================================================

class GridScale(str, Enum):
    LINEAR = "linear"
    LOG = "log"


class SweepDefaults:
    """Default grids, one block per subcommand."""
    # sweep-delta: high-reflectivity map of Δ(n̄, r)
    DELTA_N_MIN: float = 1.0
    DELTA_N_MAX: float = 5e4
    DELTA_R_MIN: float = 0.99
    DELTA_R_MAX: float = 0.99999
    STEPS: int = 200

    # condition-curves: n̄ from 10·K up to this
    CONDITION_N_MAX: float = 1e6
    CONDITION_N_MIN_FACTOR: float = 10.0

    # classical-cap
    CAP_NBAR_MAX: float = 1000.0

    # asymptote-curve
    ASYMPTOTE_K_MIN: float = 0.1
    ASYMPTOTE_K_MAX: float = 1000.0

    PRECISION: int = 12


class SweepConfig(BaseModel):
    """One- or two-dimensional grid plus output options."""
    model_config = ConfigDict(frozen=True)

    n_min: float
    n_max: float
    n_steps: int = Field(default=SweepDefaults.STEPS, ge=2)
    n_scale: GridScale = GridScale.LOG
    r_min: float = SweepDefaults.DELTA_R_MIN
    r_max: float = SweepDefaults.DELTA_R_MAX
    r_steps: int = Field(default=SweepDefaults.STEPS, ge=2)
    output_path: Optional[Path] = None
    precision: int = Field(default=SweepDefaults.PRECISION, ge=6, le=17)

    @model_validator(mode="after")
    def _check_ranges(self) -> "SweepConfig":
        if not (math.isfinite(self.n_min) and math.isfinite(self.n_max)):
            raise ValueError("photon-number range must be finite")
        if self.n_min < 0.0 or self.n_min >= self.n_max:
            raise ValueError(f"need 0 <= n_min < n_max, got [{self.n_min}, {self.n_max}]")
        if self.n_scale is GridScale.LOG and self.n_min <= 0.0:
            raise ValueError("a log-scale photon-number grid needs n_min > 0")
        if not (0.0 <= self.r_min < self.r_max <= 1.0):
            raise ValueError(f"need 0 <= r_min < r_max <= 1, got [{self.r_min}, {self.r_max}]")
        return self

    @classmethod
    def build(cls, **values: object) -> "SweepConfig":
        """Construct, turning validation failures into ConfigError."""
        try:
            return cls(**values)
        except ValidationError as e:
            raise ConfigError(f"invalid sweep configuration: {e}") from e

    def nbar_grid(self) -> NDArray[np.float64]:
        if self.n_scale is GridScale.LOG:
            return np.geomspace(self.n_min, self.n_max, self.n_steps)
        return np.linspace(self.n_min, self.n_max, self.n_steps)

    def r_grid(self) -> NDArray[np.float64]:
        return np.linspace(self.r_min, self.r_max, self.r_steps)


# =============================================================================
# SWEEPS
# =============================================================================

def sweep_delta(config: SweepConfig) -> pd.DataFrame:
    """Rows (n_bar, r, delta) over the product grid, r-major."""
    rr, nn = np.meshgrid(config.r_grid(), config.nbar_grid(), indexing="ij")
    delta = np.asarray(info_gain_delta(nn, rr))
    frame = pd.DataFrame({"n_bar": nn.ravel(), "r": rr.ravel(), "delta": delta.ravel()})

    negative = int(np.count_nonzero(delta < 0.0))
    if negative:
        logger.warning("negative_delta", points=negative, reason="QCB-derived bound is loose here")
    logger.info("sweep_delta", rows=len(frame), max_delta=f"{float(delta.max()):.6f}")
    return frame


def condition_curves(K: float, config: SweepConfig) -> pd.DataFrame:
    """Rows (n_bar, info_classical, info_quantum) along 1 - r = K/n̄."""
    grid = config.nbar_grid()
    if np.any(grid <= K):
        raise ConfigError(f"every n_bar must exceed K={K}; grid starts at {grid.min()}")
    frame = pd.DataFrame({
        "n_bar": grid,
        "info_classical": np.asarray(design_curve_classical_info(grid, K)),
        "info_quantum": np.asarray(design_curve_quantum_info(grid, K)),
    })
    logger.info("condition_curves", K=K, rows=len(frame))
    return frame


def classical_cap(nbar_max: float, K: float, config: SweepConfig) -> pd.DataFrame:
    """Rows (n_bar, info_classical) at the fixed r = 1 - K/n̄_max."""
    if not nbar_max > 1.0:
        raise DomainError(f"nbar_max must be > 1, got {nbar_max}")
    grid = config.nbar_grid()
    frame = pd.DataFrame({
        "n_bar": grid,
        "info_classical": np.asarray(classical_cap_curve(nbar_max, K, grid)),
    })
    logger.info("classical_cap", nbar_max=nbar_max, K=K, rows=len(frame))
    return frame


def asymptote_table(K_min: float, K_max: float, K_steps: int) -> pd.DataFrame:
    """Rows (K, asymptotic_quantum_info, c_equivalent = 1/K), log-spaced in K."""
    if not (0.0 < K_min <= K_max and math.isfinite(K_max)):
        raise ConfigError(f"need 0 < K_min <= K_max, got [{K_min}, {K_max}]")
    if K_steps < 2:
        raise ConfigError(f"K_steps must be >= 2, got {K_steps}")
    grid = np.geomspace(K_min, K_max, K_steps)
    return pd.DataFrame({
        "K": grid,
        "asymptotic_quantum_info": np.asarray(asymptote_curve(grid)),
        "c_equivalent": 1.0 / grid,
    })


# =============================================================================
# OUTPUT
# =============================================================================

def format_decimal(value: float, precision: int) -> str:
    """
    Positional decimal with `precision` significant digits, trailing zeros
    trimmed: 1.80337e-07 -> "0.000000180337", 1000.0 -> "1000".
    """
    return np.format_float_positional(
        value, precision=precision, unique=False, fractional=False, trim="-"
    )


def write_csv(frame: pd.DataFrame, output_path: Optional[Path], precision: int) -> None:
    """
    UTF-8 CSV with LF endings, decimal notation and `precision` significant
    digits.

    Writes to stdout when no path is given. Non-finite values abort before
    anything is written.
    """
    values = frame.to_numpy(dtype=np.float64)
    if not np.all(np.isfinite(values)):
        raise DomainError("refusing to write non-finite values")
    text = frame.astype(np.float64).map(lambda value: format_decimal(value, precision))
    options = dict(index=False, lineterminator="\n")
    if output_path is None:
        text.to_csv(sys.stdout, **options)
        return
    text.to_csv(output_path, encoding="utf-8", **options)
    logger.info("csv_written", path=str(output_path), rows=len(frame))


__all__ = [
    "GridScale",
    "SweepDefaults",
    "SweepConfig",
    "sweep_delta",
    "condition_curves",
    "classical_cap",
    "asymptote_table",
    "format_decimal",
    "write_csv",
]
