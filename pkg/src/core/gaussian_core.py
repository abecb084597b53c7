"""
Quantum Reading V1.0.0 — Gaussian Core
=======================================
Two-mode Gaussian states in block standard form and the two fidelity formulas
used by the readout model.

CONVENTIONS:
- Quadrature ordering (q_S, p_S, q_R, p_R); vacuum covariance matrix = I.
- A two-mode CM in block standard form is

      V = | a·I   c·Z |        Z = diag(1, -1)
          | c·Z   b·I |

  and is stored as the three scalars (a, b, c) together with ab - c².
- EPR / two-mode squeezed vacuum: V(μ) = (μ, μ, √(μ²-1)), n̄ = (μ-1)/2.
- Pure loss on the signal with reflectivity r:
      (a, b, c) -> (r·a + 1 - r, b, √r·c)

PRECISION:
CM entries are held as numpy longdouble. The determinant of V(μ) + V₀(μ, r)
is a difference of two ~4μ² quantities that must resolve an O(1) result, so
at μ ~ 10³ double precision leaves only ~6 correct digits. The same
cancellation in ab - c² is avoided altogether for V(μ) and its lossy images,
which carry ab - c² exactly (1, then r + (1 - r)μ).

FIDELITY OF THE EPR TRANSMITTER:
F = 4/√det[V(μ) + V₀(μ, r)] = (1 + n̄(1 - √r))⁻². The expression
(1 + n̄ + n̄√r)⁻² that circulates for this quantity does not equal 1 at r = 1
and disagrees with the determinant; it is kept only as
fidelity_epr_printed() so the oracle check can show the discrepancy.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ._numeric import (
    FloatOrArray,
    check_gap,
    check_nbar,
    check_reflectivity,
    one_minus_sqrt,
    one_minus_sqrt_gap,
    to_output,
)
from .errors import DomainError, NumericalDegeneracyError, PreconditionError


# =============================================================================
# CONFIGURATION
# =============================================================================

class GaussianConfig:
    """Numerical tolerances for the Gaussian layer."""
    PURITY_TOLERANCE: float = 1e-9        # |ν - 1| for the pure-state precondition
    PHYSICALITY_TOLERANCE: float = 1e-9   # ν₋ >= 1 - tol
    DEGENERACY_TOLERANCE: float = 1e-12   # relative, on (a+b)² - 4c²
    DET_ROOT_ULPS: int = 64               # supplied ab - c² vs recomputed, in units of eps·ab


# =============================================================================
# DOMAIN TYPES
# =============================================================================

@dataclass(frozen=True)
class TwoModeCovariance:
    """
    Symmetric two-mode CM in block standard form (a·I, b·I, c·Z).

    det_root = ab - c² = ν₋·ν₊ = √det V. Left out, it is computed from the
    entries and carries an absolute error of about eps·ab; constructors that
    know it exactly pass it in.
    """
    a: np.longdouble
    b: np.longdouble
    c: np.longdouble
    det_root: Optional[np.longdouble] = None

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            value = np.longdouble(getattr(self, name))
            if not np.isfinite(value):
                raise DomainError(f"covariance entry {name} must be finite")
            object.__setattr__(self, name, value)

        computed = self.a * self.b - self.c * self.c
        if self.det_root is None:
            object.__setattr__(self, "det_root", computed)
            return

        given = np.longdouble(self.det_root)
        slack = GaussianConfig.DET_ROOT_ULPS * np.finfo(np.longdouble).eps * max(
            np.longdouble(1), abs(self.a * self.b)
        )
        if not np.isfinite(given) or abs(given - computed) > slack:
            raise DomainError(
                f"det_root={given} inconsistent with ab - c² = {computed} "
                f"for (a={self.a}, b={self.b}, c={self.c})"
            )
        object.__setattr__(self, "det_root", given)

    @property
    def determinant(self) -> np.longdouble:
        return self.det_root ** 2

    def is_physical(self, tol: float = GaussianConfig.PHYSICALITY_TOLERANCE) -> bool:
        if self.a < 1 - tol or self.b < 1 - tol:
            return False
        try:
            nu_minus, _ = symplectic_eigenvalues(self)
        except NumericalDegeneracyError:
            return False
        return nu_minus >= 1 - tol

    def is_pure(self, tol: float = GaussianConfig.PURITY_TOLERANCE) -> bool:
        nu_minus, nu_plus = symplectic_eigenvalues(self)
        return abs(nu_minus - 1) <= tol and abs(nu_plus - 1) <= tol

    def as_matrix(self) -> NDArray[np.float64]:
        """Full 4×4 CM in (q_S, p_S, q_R, p_R) ordering."""
        a, b, c = float(self.a), float(self.b), float(self.c)
        return np.array([
            [a, 0.0, c, 0.0],
            [0.0, a, 0.0, -c],
            [c, 0.0, b, 0.0],
            [0.0, -c, 0.0, b],
        ])


@dataclass(frozen=True)
class EprParameter:
    """Squeeze parameter μ and mean signal photons n̄ = (μ - 1)/2."""
    mu: float
    nbar: float

    def __post_init__(self) -> None:
        if not self.mu >= 1.0:
            raise DomainError(f"EPR squeeze parameter mu must be >= 1, got {self.mu}")
        if abs(self.nbar - (self.mu - 1.0) / 2.0) > 1e-12 * max(1.0, self.nbar):
            raise DomainError(
                f"inconsistent EPR parameter: nbar={self.nbar} but (mu-1)/2={(self.mu - 1.0) / 2.0}"
            )

    @classmethod
    def from_mu(cls, mu: float) -> "EprParameter":
        return cls(mu=float(mu), nbar=(float(mu) - 1.0) / 2.0)

    @classmethod
    def from_nbar(cls, nbar: float) -> "EprParameter":
        if nbar < 0:
            raise DomainError(f"mean photon number nbar must be >= 0, got {nbar}")
        return cls(mu=2.0 * float(nbar) + 1.0, nbar=float(nbar))


# =============================================================================
# COVARIANCE MATRICES
# =============================================================================

def epr_covariance(mu: float) -> TwoModeCovariance:
    """
    CM of the EPR state |μ⟩ (two-mode squeezed vacuum).

    Example:
        epr_covariance(3.0)   # (a=3, b=3, c=√8)
    """
    if not np.isfinite(mu) or mu < 1.0:
        raise DomainError(f"unphysical squeeze parameter mu={mu}; need mu >= 1")
    m = np.longdouble(mu)
    return TwoModeCovariance(a=m, b=m, c=np.sqrt((m - 1) * (m + 1)), det_root=np.longdouble(1))


def apply_loss_to_signal(cm: TwoModeCovariance, r: float) -> TwoModeCovariance:
    """
    Send the signal mode through a pure-loss channel of reflectivity r.

    For cm = V(μ) this is exactly V₀(μ, r):
        (rμ + 1 - r, μ, √(r(μ² - 1)))

    ab - c² is carried over as r·(ab - c²) + (1 - r)·b.
    """
    if not np.isfinite(r) or r < 0.0 or r > 1.0:
        raise DomainError(f"reflectivity r must lie in [0, 1], got {r}")
    if not cm.is_physical():
        raise DomainError(f"input covariance matrix is not physical: {cm}")
    rr = np.longdouble(r)
    return TwoModeCovariance(
        a=rr * cm.a + (1 - rr),
        b=cm.b,
        c=np.sqrt(rr) * cm.c,
        det_root=rr * cm.det_root + (1 - rr) * cm.b,
    )


def symplectic_eigenvalues(cm: TwoModeCovariance) -> Tuple[float, float]:
    """
    Symplectic spectrum (ν₋, ν₊) of a block-form CM.

    ν±² = (Δ ± √(Δ² - 4 det))/2 with Δ = a² + b² - 2c² and det = (ab - c²)².
    The discriminant factors as (a - b)²·((a + b)² - 4c²). With D = ab - c²
    both pieces are written without cancellation,
        Δ = (a - b)² + 2D,    (a + b)² - 4c² = (a - b)² + 4D,
    and ν₋ is recovered from ν₋ν₊ = D.
    """
    a, b, c = cm.a, cm.b, cm.c
    d = np.longdouble(cm.det_root)
    split = (a - b) ** 2
    spread = split + 4 * d
    if spread < 0:
        if spread < -GaussianConfig.DEGENERACY_TOLERANCE * (a + b) ** 2:
            raise NumericalDegeneracyError(
                f"symplectic discriminant negative for (a={a}, b={b}, c={c})"
            )
        spread = np.longdouble(0)

    delta = split + 2 * d
    root = abs(a - b) * np.sqrt(spread)
    nu_plus_sq = (delta + root) / 2
    if nu_plus_sq <= 0:
        raise NumericalDegeneracyError(f"non-positive symplectic spectrum for {cm}")
    nu_plus = np.sqrt(nu_plus_sq)
    nu_minus = d / nu_plus
    return float(nu_minus), float(nu_plus)


# =============================================================================
# FIDELITIES
# =============================================================================

def fidelity_pure_mixed_det(
    v_pure: TwoModeCovariance,
    v_mixed: TwoModeCovariance,
) -> float:
    """
    F = ⟨φ|σ|φ⟩ = 4/√det(V_pure + V_mixed) for zero-mean two-mode Gaussian
    states, valid only when V_pure is pure.

    For block-form inputs det(V + V₀) = (A·D - B²)² with A = a₁ + a₂,
    D = b₁ + b₂, B = c₁ + c₂.
    """
    if not v_pure.is_pure():
        nu = symplectic_eigenvalues(v_pure)
        raise PreconditionError(
            f"first argument must be a pure-state CM (symplectic eigenvalues {nu})"
        )
    if not v_mixed.is_physical():
        raise DomainError(f"second argument is not a physical CM: {v_mixed}")

    big_a = v_pure.a + v_mixed.a
    big_d = v_pure.b + v_mixed.b
    big_b = v_pure.c + v_mixed.c
    det_root = big_a * big_d - big_b * big_b
    if det_root <= 0:
        raise NumericalDegeneracyError("determinant of the CM sum is not positive")
    fidelity = 4 / det_root
    return float(min(fidelity, np.longdouble(1)))


def fidelity_epr_closed(nbar: ArrayLike, r: ArrayLike) -> FloatOrArray:
    """
    EPR-transmitter fidelity (1 + n̄(1 - √r))⁻².

    Example:
        fidelity_epr_closed(1.0, 0.25)   # 4/9
    """
    n = check_nbar(nbar)
    rr = check_reflectivity(r)
    y = n * one_minus_sqrt(rr)
    return to_output(1.0 / (1.0 + y) ** 2)


def epr_infidelity_at_gap(nbar: ArrayLike, gap: ArrayLike) -> FloatOrArray:
    """1 - F_EPR = y(2 + y)/(1 + y)², y = n̄(1 - √r), taking the gap 1 - r."""
    n = check_nbar(nbar)
    y = n * one_minus_sqrt_gap(check_gap(gap))
    return to_output(y * (2.0 + y) / (1.0 + y) ** 2)


def epr_infidelity(nbar: ArrayLike, r: ArrayLike) -> FloatOrArray:
    """1 - F_EPR without cancellation as n̄(1 - √r) -> 0."""
    return epr_infidelity_at_gap(nbar, 1.0 - check_reflectivity(r))


def fidelity_epr_printed(nbar: ArrayLike, r: ArrayLike) -> FloatOrArray:
    """(1 + n̄ + n̄√r)⁻²: the widely quoted form. Inconsistent; diagnostics only."""
    n = check_nbar(nbar)
    rr = check_reflectivity(r)
    return to_output(1.0 / (1.0 + n + n * np.sqrt(rr)) ** 2)


def coherent_exponent_at_gap(nbar: ArrayLike, gap: ArrayLike) -> FloatOrArray:
    """-n̄(1 - √r)² taking the gap 1 - r."""
    n = check_nbar(nbar)
    return to_output(-n * one_minus_sqrt_gap(check_gap(gap)) ** 2)


def coherent_exponent(nbar: ArrayLike, r: ArrayLike) -> FloatOrArray:
    """Exponent -n̄(1 - √r)² of the coherent-state fidelity."""
    return coherent_exponent_at_gap(nbar, 1.0 - check_reflectivity(r))


def fidelity_coherent(nbar: ArrayLike, r: ArrayLike) -> FloatOrArray:
    """
    |⟨α|√r α⟩|² = exp(-n̄(1 - √r)²).

    Example:
        fidelity_coherent(1.0, 0.0)   # e⁻¹
    """
    return to_output(np.exp(np.asarray(coherent_exponent(nbar, r))))


def coherent_infidelity_at_gap(nbar: ArrayLike, gap: ArrayLike) -> FloatOrArray:
    return to_output(-np.expm1(np.asarray(coherent_exponent_at_gap(nbar, gap))))


def coherent_infidelity(nbar: ArrayLike, r: ArrayLike) -> FloatOrArray:
    """1 - F_coh via -expm1, accurate when the exponent is tiny."""
    return to_output(-np.expm1(np.asarray(coherent_exponent(nbar, r))))


__all__ = [
    "GaussianConfig",
    "TwoModeCovariance",
    "EprParameter",
    "epr_covariance",
    "apply_loss_to_signal",
    "symplectic_eigenvalues",
    "fidelity_pure_mixed_det",
    "fidelity_epr_closed",
    "epr_infidelity",
    "epr_infidelity_at_gap",
    "fidelity_epr_printed",
    "coherent_exponent",
    "coherent_exponent_at_gap",
    "fidelity_coherent",
    "coherent_infidelity",
    "coherent_infidelity_at_gap",
]
