"""
Quantum Reading V1.0.0 — Binary Discrimination
===============================================
Error-probability bounds for telling two equiprobable hypotheses apart, and
the readout information they translate into.

- Helstrom bound, two pure states:  p̄ = (1 - √(1 - F))/2
- Quantum Chernoff bound, one state pure:  p̄ ≤ F/2   (C = F)
- Readout information:  I_read(p̄) = 1 - H(p̄) bits per cell

Priors are fixed at 1/2. The general-prior Helstrom computation exists only in
the Fock oracle, on explicit density matrices.

BIAS FORM:
Both bounds are naturally produced as a bias β = 1 - 2p̄ (β = trace distance
for the pure-state Helstrom bound, β = 1 - F for the QCB). I_read is evaluated
from β directly so that it stays accurate when p̄ is within 1e-8 of 1/2,
which is the regime of a classical reader facing a secure cell.
"""

from dataclasses import dataclass, field
from enum import Enum
import math

import numpy as np
from numpy.typing import ArrayLike

from ._numeric import FloatOrArray, as_float_array, check_unit_interval, to_output
from .errors import DomainError


# =============================================================================
# CONFIGURATION
# =============================================================================

class EntropyConfig:
    SMALL_P_THRESHOLD: float = 1e-12      # H(p) ≈ p·log2(1/p) + p/ln 2 below this
    SMALL_BIAS_THRESHOLD: float = 1e-4    # power series for I_read below this


LN2 = math.log(2.0)


# =============================================================================
# RESULT TYPES
# =============================================================================

class BoundKind(str, Enum):
    """What a reported error probability is."""
    EXACT_HELSTROM = "exact-helstrom"
    QCB_UPPER = "qcb-upper"


@dataclass(frozen=True)
class DiscriminationResult:
    """Mean error probability, its kind, and the derived readout information."""
    p_bar: float
    kind: BoundKind
    info_bits: float = field(default=float("nan"))

    def __post_init__(self) -> None:
        if not 0.0 <= self.p_bar <= 0.5:
            raise DomainError(f"p_bar must lie in [0, 1/2], got {self.p_bar}")
        if math.isnan(self.info_bits):
            object.__setattr__(self, "info_bits", float(readout_information(self.p_bar)))


# =============================================================================
# HELSTROM BOUND (PURE STATES)
# =============================================================================

def trace_distance_pure(fidelity: ArrayLike) -> FloatOrArray:
    """
    D = √(1 - F) for two pure states.

    Example:
        trace_distance_pure(0.75)   # 0.5
    """
    f = check_unit_interval(fidelity, "fidelity F")
    return to_output(np.sqrt(1.0 - f))


def helstrom_from_infidelity(one_minus_fidelity: ArrayLike) -> FloatOrArray:
    """p̄ = (1 - √(1 - F))/2 taking 1 - F directly."""
    eps = check_unit_interval(one_minus_fidelity, "infidelity 1-F")
    return to_output((1.0 - np.sqrt(eps)) / 2.0)


def helstrom_pure(fidelity: ArrayLike) -> FloatOrArray:
    """
    Helstrom bound for two pure states with overlap F = |⟨φ₀|φ₁⟩|².

    Example:
        helstrom_pure(4 / 9)   # (1 - √5/3)/2 ≈ 0.127322
    """
    f = check_unit_interval(fidelity, "fidelity F")
    return helstrom_from_infidelity(1.0 - f)


# =============================================================================
# QUANTUM CHERNOFF BOUND
# =============================================================================

def qcb_from_fidelity(fidelity: ArrayLike) -> FloatOrArray:
    """
    QCB upper bound F/2, valid when one hypothesis state is pure (C = F).

    The purity of one state is the caller's contract; it is not checked.
    """
    f = check_unit_interval(fidelity, "fidelity F")
    return to_output(f / 2.0)


# =============================================================================
# ENTROPY AND READOUT INFORMATION
# =============================================================================

def binary_entropy(p: ArrayLike) -> FloatOrArray:
    """
    H(p) = -p log₂ p - (1-p) log₂(1-p), H(0) = H(1) = 0.

    Below p = 1e-12 (and symmetrically above 1 - 1e-12) the expansion
    p·log₂(1/p) + p/ln 2 is used.
    """
    arr = check_unit_interval(p, "probability p")
    # symmetric about 1/2
    q = np.atleast_1d(np.minimum(arr, 1.0 - arr))
    out = np.zeros_like(q)

    small = (q > 0.0) & (q < EntropyConfig.SMALL_P_THRESHOLD)
    regular = q >= EntropyConfig.SMALL_P_THRESHOLD

    qs = q[small]
    out[small] = -qs * np.log2(qs) + qs / LN2

    qr = q[regular]
    out[regular] = -qr * np.log2(qr) - (1.0 - qr) * np.log1p(-qr) / LN2
    return to_output(out.reshape(arr.shape))


def readout_information_from_bias(bias: ArrayLike) -> FloatOrArray:
    """
    I_read = 1 - H((1 - β)/2) for β = 1 - 2p̄ in [0, 1].

    Evaluated as [(1+β)ln(1+β) + (1-β)ln(1-β)]/(2 ln 2), switching to the
    series Σ β^{2k}/(2k(2k-1)) / ln 2 for β < 1e-4.
    """
    given = check_unit_interval(bias, "bias 1-2p")
    beta = np.atleast_1d(given)
    out = np.zeros_like(beta)

    small = beta < EntropyConfig.SMALL_BIAS_THRESHOLD
    b = beta[small]
    b2 = b * b
    out[small] = b2 * (0.5 + b2 * (1.0 / 12.0 + b2 / 30.0)) / LN2

    full = ~small
    b = beta[full]
    # (1-β)ln(1-β) -> 0 at β = 1
    inside = b < 1.0
    safe = np.where(inside, b, 0.0)
    tail = np.where(inside, (1.0 - b) * np.log1p(-safe), 0.0)
    out[full] = ((1.0 + b) * np.log1p(b) + tail) / (2.0 * LN2)
    return to_output(np.clip(out, 0.0, 1.0).reshape(given.shape))


def readout_information(p_bar: ArrayLike) -> FloatOrArray:
    """
    I_read(p̄) = 1 - H(p̄) for p̄ in [0, 1/2].

    Example:
        readout_information(2 / 9)   # ≈ 0.235795
    """
    p = as_float_array(p_bar, "p_bar")
    if np.any((p < 0.0) | (p > 0.5)):
        raise DomainError(f"p_bar must lie in [0, 1/2], got {p_bar!r}")
    flat = np.atleast_1d(p)
    out = np.atleast_1d(np.asarray(readout_information_from_bias(1.0 - 2.0 * flat))).copy()
    small = flat < EntropyConfig.SMALL_P_THRESHOLD
    if np.any(small):
        out[small] = 1.0 - np.atleast_1d(np.asarray(binary_entropy(flat[small])))
    return to_output(out.reshape(p.shape))


# =============================================================================
# RESULT CONSTRUCTORS
# =============================================================================

def discriminate_pure(fidelity: float) -> DiscriminationResult:
    """Exact Helstrom result for two pure states of overlap F."""
    f = float(check_unit_interval(fidelity, "fidelity F"))
    p_bar = float(helstrom_pure(f))
    return DiscriminationResult(
        p_bar=p_bar,
        kind=BoundKind.EXACT_HELSTROM,
        info_bits=float(readout_information_from_bias(math.sqrt(1.0 - f))),
    )


def discriminate_qcb(fidelity: float) -> DiscriminationResult:
    """QCB result when one state is pure and the pure-vs-mixed fidelity is F."""
    f = float(check_unit_interval(fidelity, "fidelity F"))
    return DiscriminationResult(
        p_bar=float(qcb_from_fidelity(f)),
        kind=BoundKind.QCB_UPPER,
        info_bits=float(readout_information_from_bias(1.0 - f)),
    )


__all__ = [
    "EntropyConfig",
    "BoundKind",
    "DiscriminationResult",
    "trace_distance_pure",
    "helstrom_from_infidelity",
    "helstrom_pure",
    "qcb_from_fidelity",
    "binary_entropy",
    "readout_information_from_bias",
    "readout_information",
    "discriminate_pure",
    "discriminate_qcb",
]
