"""
Quantum Reading V1.0.0 — Readout Model
=======================================
Performance of a coherent-state reader and an EPR reader against a memory
cell that stores bit 0 as reflectivity r < 1 and bit 1 as reflectivity 1.

    classical:  p̄ = (1 - √(1 - e^{-n̄(1-√r)²}))/2          exact Helstrom
    quantum:    p̄ ≤ (1 + n̄(1-√r))⁻²/2                     QCB
    gain:       Δ = I_read(quantum) - I_read(classical)

The quantum figure is a QCB-derived LOWER bound on the EPR reader's
information. Δ is therefore not clamped: it can be negative where the bound
is loose (low r, few photons).

Leading order in (1 - r):
    I_class ≈ n̄(1-r)²/ln 256,   I_quant ≈ n̄²(1-r)²/ln 4 = 4n̄·I_class

All functions are elementwise over numpy arrays.
"""

from dataclasses import dataclass
from enum import Enum
import math
from typing import TypedDict

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ._numeric import FloatOrArray, check_nbar, check_reflectivity, to_output
from .discrimination import (
    DiscriminationResult,
    discriminate_pure,
    discriminate_qcb,
    helstrom_from_infidelity,
    qcb_from_fidelity,
    readout_information_from_bias,
)
from .errors import DomainError
from .gaussian_core import (
    coherent_infidelity,
    coherent_infidelity_at_gap,
    epr_infidelity,
    epr_infidelity_at_gap,
    fidelity_coherent,
    fidelity_epr_closed,
)

LN256 = math.log(256.0)
LN4 = math.log(4.0)


# =============================================================================
# DOMAIN TYPES
# =============================================================================

class TransmitterKind(str, Enum):
    COHERENT = "coherent"
    EPR = "epr"


@dataclass(frozen=True)
class TransmitterSpec:
    """Transmitter kind and mean signal photons irradiated per cell."""
    kind: TransmitterKind
    nbar: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", TransmitterKind(self.kind))
        if not (math.isfinite(self.nbar) and self.nbar >= 0.0):
            raise DomainError(f"nbar must be >= 0, got {self.nbar}")

    @property
    def mu(self) -> float:
        """Squeeze parameter of the EPR source with this signal energy."""
        return 2.0 * self.nbar + 1.0


@dataclass(frozen=True)
class MemoryCellSpec:
    """Reflectivities r0 = r < 1 (bit 0) and r1 = 1 (bit 1); priors 1/2."""
    r0: float
    r1: float = 1.0

    def __post_init__(self) -> None:
        if self.r1 != 1.0:
            raise DomainError("only unit reflectivity for bit value 1 is modelled")
        if not (math.isfinite(self.r0) and 0.0 <= self.r0 < 1.0):
            raise DomainError(f"r0 must lie in [0, 1), got {self.r0}")

    @classmethod
    def from_reflectivity(cls, r: float) -> "MemoryCellSpec":
        return cls(r0=float(r))


class AdvantageSummary(TypedDict):
    """Where the EPR reader beats the classical one on a grid."""
    max_delta: float
    argmax_nbar: float
    argmax_r: float
    fraction_above_threshold: float
    threshold: float
    negative_points: int


# =============================================================================
# ERROR PROBABILITIES
# =============================================================================

def classical_error_prob(nbar: ArrayLike, r: ArrayLike) -> FloatOrArray:
    """
    Exact Helstrom error of the coherent-state reader.

    Example:
        classical_error_prob(1.0, 0.0)   # ≈ 0.102470
    """
    return helstrom_from_infidelity(coherent_infidelity(nbar, r))


def quantum_error_prob_qcb(nbar: ArrayLike, r: ArrayLike) -> FloatOrArray:
    """
    QCB on the error of the EPR reader, (1 + n̄(1-√r))⁻²/2.

    Example:
        quantum_error_prob_qcb(1.0, 0.25)   # 2/9
    """
    return qcb_from_fidelity(fidelity_epr_closed(nbar, r))


# =============================================================================
# READOUT INFORMATION
# =============================================================================

def info_classical(nbar: ArrayLike, r: ArrayLike) -> FloatOrArray:
    """Bits per cell read by the coherent-state reader (bias = trace distance)."""
    return readout_information_from_bias(np.sqrt(np.asarray(coherent_infidelity(nbar, r))))


def info_quantum(nbar: ArrayLike, r: ArrayLike) -> FloatOrArray:
    """Bits per cell the EPR reader reads at least (bias = 1 - F)."""
    return readout_information_from_bias(epr_infidelity(nbar, r))


def info_classical_at_gap(nbar: ArrayLike, gap: ArrayLike) -> FloatOrArray:
    """info_classical parametrized by the gap 1 - r, for r within ulps of 1."""
    return readout_information_from_bias(
        np.sqrt(np.asarray(coherent_infidelity_at_gap(nbar, gap)))
    )


def info_quantum_at_gap(nbar: ArrayLike, gap: ArrayLike) -> FloatOrArray:
    return readout_information_from_bias(epr_infidelity_at_gap(nbar, gap))


def info_gain_delta(nbar: ArrayLike, r: ArrayLike) -> FloatOrArray:
    """Δ = info_quantum - info_classical; may be negative."""
    quantum = np.asarray(info_quantum(nbar, r))
    classical = np.asarray(info_classical(nbar, r))
    return to_output(quantum - classical)


def info_classical_leading(nbar: ArrayLike, r: ArrayLike) -> FloatOrArray:
    """n̄(1-r)²/ln 256."""
    n = check_nbar(nbar)
    gap = 1.0 - check_reflectivity(r)
    return to_output(n * gap * gap / LN256)


def info_quantum_leading(nbar: ArrayLike, r: ArrayLike) -> FloatOrArray:
    """n̄²(1-r)²/ln 4."""
    n = check_nbar(nbar)
    gap = 1.0 - check_reflectivity(r)
    return to_output(n * n * gap * gap / LN4)


# =============================================================================
# ENTRY POINTS
# =============================================================================

def readout(transmitter: TransmitterSpec, cell: MemoryCellSpec) -> DiscriminationResult:
    """
    Read one cell with the given transmitter.

    Coherent transmitters get the exact Helstrom result, EPR transmitters the
    QCB result.
    """
    if transmitter.kind is TransmitterKind.COHERENT:
        return discriminate_pure(float(fidelity_coherent(transmitter.nbar, cell.r0)))
    return discriminate_qcb(float(fidelity_epr_closed(transmitter.nbar, cell.r0)))


def advantage_region(
    nbar_grid: ArrayLike,
    r_grid: ArrayLike,
    threshold: float = 0.95,
) -> AdvantageSummary:
    """
    Summarise Δ over the product grid nbar_grid × r_grid.

    Example:
        s = advantage_region(np.geomspace(1, 5e4, 200), np.linspace(0.99, 0.99999, 200))
        s["max_delta"] > 0.95
    """
    n = np.asarray(nbar_grid, dtype=np.float64).ravel()
    r = np.asarray(r_grid, dtype=np.float64).ravel()
    if n.size == 0 or r.size == 0:
        raise DomainError("advantage_region needs non-empty grids")
    rr, nn = np.meshgrid(r, n, indexing="ij")
    delta: NDArray[np.float64] = np.asarray(info_gain_delta(nn, rr))
    i_r, i_n = np.unravel_index(int(np.argmax(delta)), delta.shape)
    return AdvantageSummary(
        max_delta=float(delta[i_r, i_n]),
        argmax_nbar=float(n[i_n]),
        argmax_r=float(r[i_r]),
        fraction_above_threshold=float(np.mean(delta > threshold)),
        threshold=float(threshold),
        negative_points=int(np.count_nonzero(delta < 0.0)),
    )


__all__ = [
    "TransmitterKind",
    "TransmitterSpec",
    "MemoryCellSpec",
    "AdvantageSummary",
    "classical_error_prob",
    "quantum_error_prob_qcb",
    "info_classical",
    "info_quantum",
    "info_classical_at_gap",
    "info_quantum_at_gap",
    "info_gain_delta",
    "info_classical_leading",
    "info_quantum_leading",
    "readout",
    "advantage_region",
]
