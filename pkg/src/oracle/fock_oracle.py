"""
Quantum Reading V1.0.0 — Fock Oracle
=====================================
Brute-force ground truth in a truncated photon-number basis. Builds the
transmitter states, pushes the signal mode through the pure-loss channel,
and computes exact Helstrom error probabilities and second moments so that
every closed form in src.core can be checked at desk scale (n̄ ≲ 5).

BASIS:
- one mode: |n⟩, n = 0 .. N-1 (N = cutoff, exclusive)
- two modes: |n_S, n_R⟩ at index n_S·N + n_R (signal first)
- quadratures q = a + a†, p = i(a† - a); vacuum variance 1

STORAGE:
Density matrices are scipy.sparse CSR. A lossy TMSV only populates the
sectors of fixed n_R - n_S, so the Helstrom matrix splits into small
connected blocks which are diagonalised densely one at a time.

CUTOFF POLICY:
Default N is the smallest cutoff whose discarded probability is below
oracle_target_tail (Poisson tail for coherent states, λ^{2N} for the TMSV).
A state whose tail exceeds oracle_tail_tolerance never yields a verdict.
"""

from dataclasses import dataclass
from enum import IntEnum
import math
from typing import Iterator, Optional, Tuple, TypedDict, Union

import numpy as np
from numpy.typing import NDArray
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components
from scipy.special import comb
from scipy.stats import poisson

from config.settings import get_settings
from src.core.errors import (
    DomainError,
    InsufficientCutoffError,
    OracleConfigurationError,
)
from src.core.gaussian_core import TwoModeCovariance
from src.utils.logging_setup import get_logger

logger = get_logger("qreading.oracle")


# =============================================================================
# CONFIGURATION
# =============================================================================

class OracleConfig:
    """Matrix-level tolerances of the oracle."""
    EIGENVALUE_FLOOR: float = 1e-14       # |λ| below this counts as zero
    HERMITIAN_TOLERANCE: float = 1e-12
    PSD_TOLERANCE: float = 1e-10          # smallest eigenvalue >= -tol
    TRACE_TOLERANCE: float = 1e-10        # |Tr ρ - (1 - tail)|
    COMPLETENESS_TOLERANCE: float = 1e-12
    STRUCTURE_TOLERANCE: float = 1e-8     # (aI, bI, cZ) residuals
    MIN_CUTOFF: int = 2                   # q² needs |1⟩ to act on |0⟩


class Mode(IntEnum):
    SIGNAL = 0
    REFERENCE = 1


# =============================================================================
# STATE TYPES
# =============================================================================

@dataclass(frozen=True)
class StateVector:
    """Truncated pure state with the probability mass it leaves out."""
    amplitudes: NDArray[np.complex128]
    cutoff: int
    modes: int
    tail: float

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=np.complex128).ravel()
        if amps.size != self.cutoff ** self.modes:
            raise OracleConfigurationError(
                f"state vector of size {amps.size} does not match cutoff={self.cutoff}, "
                f"modes={self.modes}"
            )
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)


@dataclass(frozen=True)
class FockDensity:
    """Hermitian PSD matrix on a truncated one- or two-mode Fock space."""
    matrix: sp.csr_matrix
    cutoff: int
    modes: int
    tail: float

    def __post_init__(self) -> None:
        if self.modes not in (1, 2):
            raise OracleConfigurationError(f"only one- and two-mode states, got modes={self.modes}")
        if self.cutoff < 1:
            raise DomainError(f"cutoff must be >= 1, got {self.cutoff}")
        if not self.tail >= 0.0:
            raise OracleConfigurationError(f"truncation tail must be >= 0, got {self.tail}")
        matrix = sp.csr_matrix(self.matrix, dtype=np.complex128)
        dim = self.cutoff ** self.modes
        if matrix.shape != (dim, dim):
            raise OracleConfigurationError(
                f"matrix shape {matrix.shape} does not match cutoff={self.cutoff}, modes={self.modes}"
            )
        skew = matrix - matrix.conj().T
        if skew.nnz and np.max(np.abs(skew.data)) > OracleConfig.HERMITIAN_TOLERANCE:
            raise OracleConfigurationError("density matrix is not Hermitian within tolerance")
        object.__setattr__(self, "matrix", matrix)

    @property
    def dimension(self) -> int:
        return self.cutoff ** self.modes

    @property
    def trace(self) -> float:
        return float(self.matrix.diagonal().sum().real)

    def validate(self) -> None:
        """Check trace = 1 - tail and positivity block by block."""
        if abs(self.trace - (1.0 - self.tail)) > OracleConfig.TRACE_TOLERANCE:
            raise OracleConfigurationError(
                f"trace {self.trace:.15f} inconsistent with recorded tail {self.tail:.3e}"
            )
        for block in _hermitian_blocks(self.matrix):
            lowest = float(np.linalg.eigvalsh(block)[0])
            if lowest < -OracleConfig.PSD_TOLERANCE:
                raise OracleConfigurationError(f"density matrix has eigenvalue {lowest:.3e} < 0")


class HelstromVerdict(TypedDict):
    """Exact minimum error probability on the truncated space."""
    p_bar: float
    error_bar: float            # combined truncation tails
    trace_norm: float           # ‖p₁ρ₁ - p₀ρ₀‖₁
    blocks: int
    support: int


@dataclass(frozen=True)
class CovarianceEstimate:
    """Block-form CM read off a density matrix, with its structure residuals."""
    covariance: TwoModeCovariance
    structure_residual: float
    first_moment: float
    full_matrix: NDArray[np.float64]


# =============================================================================
# CUTOFF SELECTION
# =============================================================================

def _resolve(value: Optional[float], default: float) -> float:
    return default if value is None else value


def coherent_tail(nbar: float, cutoff: int) -> float:
    """Poisson mass at n >= cutoff."""
    if nbar == 0.0:
        return 0.0
    return float(poisson.sf(cutoff - 1, nbar))


def tmsv_tail(mu: float, cutoff: int) -> float:
    """λ^{2N} with λ² = (μ - 1)/(μ + 1)."""
    lam_sq = (mu - 1.0) / (mu + 1.0)
    return float(lam_sq ** cutoff)


def coherent_cutoff(
    nbar: float,
    target_tail: Optional[float] = None,
    max_cutoff: Optional[int] = None,
) -> int:
    """Smallest N with Poisson tail < target_tail."""
    settings = get_settings()
    target = _resolve(target_tail, settings.oracle_target_tail)
    limit = int(_resolve(max_cutoff, settings.oracle_max_cutoff))
    for cutoff in range(OracleConfig.MIN_CUTOFF, limit + 1):
        if coherent_tail(nbar, cutoff) < target:
            return cutoff
    raise InsufficientCutoffError(
        f"no cutoff <= {limit} brings the coherent tail for nbar={nbar} below {target:.1e}",
        cutoff=limit,
        achieved_tail=coherent_tail(nbar, limit),
    )


def tmsv_cutoff(
    mu: float,
    target_tail: Optional[float] = None,
    max_cutoff: Optional[int] = None,
) -> int:
    """Smallest N with λ^{2N} < target_tail."""
    settings = get_settings()
    target = _resolve(target_tail, settings.oracle_target_tail)
    limit = int(_resolve(max_cutoff, settings.oracle_max_cutoff))
    lam_sq = (mu - 1.0) / (mu + 1.0)
    if lam_sq == 0.0:
        return OracleConfig.MIN_CUTOFF
    cutoff = max(OracleConfig.MIN_CUTOFF, math.floor(math.log(target) / math.log(lam_sq)) + 1)
    if cutoff > limit:
        raise InsufficientCutoffError(
            f"TMSV with mu={mu} needs cutoff {cutoff} > max_cutoff={limit}",
            cutoff=limit,
            achieved_tail=tmsv_tail(mu, limit),
        )
    return cutoff


def _check_tail(tail: float, cutoff: int, tolerance: Optional[float], what: str) -> None:
    tol = _resolve(tolerance, get_settings().oracle_tail_tolerance)
    if tail > tol:
        raise InsufficientCutoffError(
            f"{what}: truncation tail {tail:.3e} at cutoff {cutoff} exceeds {tol:.1e}",
            cutoff=cutoff,
            achieved_tail=tail,
        )
    if tail > 0.1 * tol:
        logger.warning("oracle_tail_near_tolerance", state=what, tail=tail, tolerance=tol)


# =============================================================================
# STATE CONSTRUCTION
# =============================================================================

def coherent_state_vector(
    alpha_magnitude: float,
    cutoff: Optional[int] = None,
    tolerance: Optional[float] = None,
) -> StateVector:
    """
    |α⟩ with real α >= 0: c_n = e^{-|α|²/2} αⁿ/√(n!) for n < cutoff.

    Example:
        coherent_state_vector(1.0, cutoff=30).tail   # < 1e-30
    """
    if not (math.isfinite(alpha_magnitude) and alpha_magnitude >= 0.0):
        raise DomainError(f"alpha magnitude must be >= 0, got {alpha_magnitude}")
    nbar = alpha_magnitude ** 2
    n_cut = coherent_cutoff(nbar) if cutoff is None else int(cutoff)
    if n_cut < 1:
        raise DomainError(f"cutoff must be >= 1, got {cutoff}")

    if nbar == 0.0:
        amps = np.zeros(n_cut)
        amps[0] = 1.0
    else:
        amps = np.sqrt(poisson.pmf(np.arange(n_cut), nbar))
    tail = coherent_tail(nbar, n_cut)
    _check_tail(tail, n_cut, tolerance, "coherent state")
    return StateVector(amplitudes=amps, cutoff=n_cut, modes=1, tail=tail)


def tmsv_state_vector(
    mu: float,
    cutoff: Optional[int] = None,
    tolerance: Optional[float] = None,
) -> StateVector:
    """
    Two-mode squeezed vacuum √(1 - λ²) Σ λⁿ |n, n⟩, λ = √((μ - 1)/(μ + 1)).

    Example:
        tmsv_state_vector(3.0, cutoff=60).tail   # 2**-60
    """
    if not (math.isfinite(mu) and mu >= 1.0):
        raise DomainError(f"unphysical squeeze parameter mu={mu}; need mu >= 1")
    n_cut = tmsv_cutoff(mu) if cutoff is None else int(cutoff)
    if n_cut < 1:
        raise DomainError(f"cutoff must be >= 1, got {cutoff}")

    lam_sq = (mu - 1.0) / (mu + 1.0)
    n = np.arange(n_cut)
    schmidt = np.sqrt(1.0 - lam_sq) * np.sqrt(lam_sq) ** n
    amps = np.zeros(n_cut * n_cut)
    amps[n * n_cut + n] = schmidt
    tail = tmsv_tail(mu, n_cut)
    _check_tail(tail, n_cut, tolerance, "TMSV state")
    return StateVector(amplitudes=amps, cutoff=n_cut, modes=2, tail=tail)


def density_from_vector(state: StateVector) -> FockDensity:
    """Projector |ψ⟩⟨ψ| (unnormalised, trace 1 - tail)."""
    column = sp.csr_matrix(state.amplitudes.reshape(-1, 1))
    return FockDensity(
        matrix=column @ column.conj().T,
        cutoff=state.cutoff,
        modes=state.modes,
        tail=state.tail,
    )


def reduced_state(state: StateVector, keep: Mode) -> FockDensity:
    """Single-mode marginal of a two-mode pure state."""
    if state.modes != 2:
        raise OracleConfigurationError("reduced_state needs a two-mode state")
    psi = state.amplitudes.reshape(state.cutoff, state.cutoff)
    if keep is Mode.SIGNAL:
        rho = psi @ psi.conj().T
    else:
        rho = psi.T @ psi.conj()
    return FockDensity(matrix=sp.csr_matrix(rho), cutoff=state.cutoff, modes=1, tail=state.tail)


def mean_photon_number(state: StateVector, mode: Mode = Mode.SIGNAL) -> float:
    """⟨n̂⟩ on one mode, normalised by the retained probability."""
    probs = np.abs(state.amplitudes) ** 2
    if state.modes == 2:
        grid = probs.reshape(state.cutoff, state.cutoff)
        probs = grid.sum(axis=1 if mode is Mode.SIGNAL else 0)
    return float(np.dot(np.arange(state.cutoff), probs) / probs.sum())


# =============================================================================
# PURE-LOSS CHANNEL
# =============================================================================

def loss_channel_kraus(r: float, max_loss: Optional[int], cutoff: int) -> list[sp.csr_matrix]:
    """
    Kraus operators of the pure-loss channel with reflectivity r:

        K_l = Σ_n √(C(n, l) (1-r)^l r^{n-l}) |n - l⟩⟨n|,   l = 0 .. max_loss

    Identically zero operators are dropped (r = 1 leaves only the identity).
    Σ K_l†K_l = I holds on every |n⟩ with n < min(cutoff, max_loss + 1).

    Example:
        loss_channel_kraus(1.0, None, 5)   # [identity]
    """
    if not (math.isfinite(r) and 0.0 <= r <= 1.0):
        raise DomainError(f"reflectivity r must lie in [0, 1], got {r}")
    if cutoff < 1:
        raise DomainError(f"cutoff must be >= 1, got {cutoff}")
    losses = cutoff if max_loss is None else int(max_loss)
    if losses < 0 or losses > cutoff:
        raise DomainError(f"max_loss must lie in [0, cutoff={cutoff}], got {max_loss}")

    n = np.arange(cutoff)
    operators: list[sp.csr_matrix] = []
    for l in range(min(losses, cutoff - 1) + 1):
        source = n[l:]
        weights = np.sqrt(comb(source, l) * (1.0 - r) ** l * r ** (source - l))
        if not np.any(weights > 0.0):
            continue
        operators.append(sp.diags(weights, offsets=l, shape=(cutoff, cutoff), format="csr"))

    protected = min(cutoff, losses + 1)
    completeness = np.zeros(cutoff)
    for op in operators:
        completeness += np.asarray(abs(op).power(2).sum(axis=0)).ravel()
    defect = float(np.max(np.abs(completeness[:protected] - 1.0)))
    if defect > OracleConfig.COMPLETENESS_TOLERANCE:
        raise OracleConfigurationError(
            f"Kraus set incomplete on n < {protected}: max |Σ K†K - I| = {defect:.3e}"
        )

    logger.debug("loss_kraus", r=r, cutoff=cutoff, max_loss=losses, operators=len(operators))
    return operators


def apply_loss_to_signal_fock(
    state: Union[StateVector, FockDensity],
    r: float,
    max_loss: Optional[int] = None,
) -> FockDensity:
    """
    σ = (E_r ⊗ I)(ρ) on a two-mode state given as a vector or a density.

    Example:
        sigma0 = apply_loss_to_signal_fock(tmsv_state_vector(3.0), 0.25)
    """
    if state.modes != 2:
        raise OracleConfigurationError("loss acts on the signal of a two-mode state")
    n_cut = state.cutoff
    identity = sp.identity(n_cut, dtype=np.complex128, format="csr")
    lifted = [sp.kron(k, identity, format="csr") for k in loss_channel_kraus(r, max_loss, n_cut)]

    dim = n_cut * n_cut
    sigma = sp.csr_matrix((dim, dim), dtype=np.complex128)
    if isinstance(state, StateVector):
        psi = sp.csr_matrix(state.amplitudes.reshape(-1, 1))
        for op in lifted:
            branch = op @ psi
            sigma = sigma + branch @ branch.conj().T
    else:
        for op in lifted:
            sigma = sigma + op @ state.matrix @ op.conj().T

    sigma.eliminate_zeros()
    return FockDensity(matrix=sigma.tocsr(), cutoff=n_cut, modes=2, tail=state.tail)


# =============================================================================
# HELSTROM BOUND
# =============================================================================

def _hermitian_blocks(matrix: sp.spmatrix) -> Iterator[NDArray[np.complex128]]:
    """Dense diagonal blocks of a Hermitian sparse matrix, one per connected component."""
    matrix = sp.csr_matrix(matrix)
    matrix.eliminate_zeros()
    pattern = abs(matrix) + abs(matrix).T
    support = np.flatnonzero(np.asarray(pattern.sum(axis=1)).ravel() > 0.0)
    if support.size == 0:
        return
    pruned = matrix[support][:, support]
    count, labels = connected_components(abs(pruned), directed=False)
    for label in range(count):
        idx = np.flatnonzero(labels == label)
        yield pruned[idx][:, idx].toarray()


def trace_norm_hermitian(matrix: sp.spmatrix) -> Tuple[float, int, int]:
    """‖M‖₁ = Σ|λ| over all blocks; returns (norm, blocks, support size)."""
    total = 0.0
    blocks = 0
    support = 0
    for block in _hermitian_blocks(matrix):
        eig = np.linalg.eigvalsh(block)
        eig = eig[np.abs(eig) >= OracleConfig.EIGENVALUE_FLOOR]
        total += float(np.sum(np.abs(eig)))
        blocks += 1
        support += block.shape[0]
    return total, blocks, support


def helstrom_exact(
    rho0: FockDensity,
    rho1: FockDensity,
    p0: float = 0.5,
    tolerance: Optional[float] = None,
) -> HelstromVerdict:
    """
    p̄ = (1 - ‖p₁ρ₁ - p₀ρ₀‖₁)/2 on the truncated space.

    The error bar is the combined truncation tail of both hypotheses.

    Example:
        rho = density_from_vector(coherent_state_vector(1.0))
        helstrom_exact(rho, rho)["p_bar"]   # 0.5
    """
    if rho0.modes != rho1.modes or rho0.cutoff != rho1.cutoff:
        raise OracleConfigurationError(
            f"dimension mismatch: ({rho0.modes} modes, N={rho0.cutoff}) vs "
            f"({rho1.modes} modes, N={rho1.cutoff})"
        )
    if not (math.isfinite(p0) and 0.0 <= p0 <= 1.0):
        raise DomainError(f"prior p0 must lie in [0, 1], got {p0}")
    _check_tail(rho0.tail, rho0.cutoff, tolerance, "hypothesis 0")
    _check_tail(rho1.tail, rho1.cutoff, tolerance, "hypothesis 1")

    gamma = (1.0 - p0) * rho1.matrix - p0 * rho0.matrix
    norm, blocks, support = trace_norm_hermitian(gamma)
    p_bar = min(max((1.0 - norm) / 2.0, 0.0), min(p0, 1.0 - p0))

    verdict = HelstromVerdict(
        p_bar=p_bar,
        error_bar=rho0.tail + rho1.tail,
        trace_norm=norm,
        blocks=blocks,
        support=support,
    )
    logger.info(
        "helstrom_exact",
        cutoff=rho0.cutoff,
        modes=rho0.modes,
        p_bar=f"{p_bar:.12f}",
        blocks=blocks,
        support=support,
    )
    return verdict


# =============================================================================
# MOMENTS AND FIDELITIES
# =============================================================================

def _quadratures(cutoff: int) -> Tuple[sp.csr_matrix, sp.csr_matrix]:
    annihilate = sp.diags(np.sqrt(np.arange(1, cutoff)), offsets=1, shape=(cutoff, cutoff), format="csr")
    create = annihilate.conj().T
    q = (annihilate + create).astype(np.complex128)
    p = 1j * (create - annihilate)
    return q.tocsr(), p.tocsr()


def _expectation(rho: sp.csr_matrix, op: sp.spmatrix) -> complex:
    """Tr(ρ·X) without forming the product."""
    return complex(rho.multiply(op.T).sum())


def moments_from_density(
    rho: FockDensity,
    tolerance: float = OracleConfig.STRUCTURE_TOLERANCE,
) -> CovarianceEstimate:
    """
    Quadrature covariance matrix of a two-mode density, read as (a, b, c).

    Expectations are divided by Tr ρ. The full 4×4 CM must have the
    (aI, bI, cZ) form and zero first moments within tolerance.

    Example:
        est = moments_from_density(density_from_vector(tmsv_state_vector(3.0, cutoff=60)))
        est.covariance   # ≈ (3, 3, √8)
    """
    if rho.modes != 2:
        raise OracleConfigurationError("moments_from_density needs a two-mode state")
    if rho.cutoff < OracleConfig.MIN_CUTOFF:
        raise OracleConfigurationError("moments need cutoff >= 2")
    n_cut = rho.cutoff
    q, p = _quadratures(n_cut)
    identity = sp.identity(n_cut, dtype=np.complex128, format="csr")
    ops = [
        sp.kron(q, identity, format="csr"),
        sp.kron(p, identity, format="csr"),
        sp.kron(identity, q, format="csr"),
        sp.kron(identity, p, format="csr"),
    ]

    norm = rho.trace
    means = np.array([_expectation(rho.matrix, op).real for op in ops]) / norm
    cm = np.empty((4, 4))
    for i in range(4):
        for j in range(i, 4):
            second = _expectation(rho.matrix, ops[i] @ ops[j]).real / norm
            cm[i, j] = cm[j, i] = second - means[i] * means[j]

    a = 0.5 * (cm[0, 0] + cm[1, 1])
    b = 0.5 * (cm[2, 2] + cm[3, 3])
    c = 0.5 * (cm[0, 2] - cm[1, 3])
    residual = max(
        abs(cm[0, 0] - cm[1, 1]),
        abs(cm[2, 2] - cm[3, 3]),
        abs(cm[0, 2] + cm[1, 3]),
        abs(cm[0, 1]),
        abs(cm[2, 3]),
        abs(cm[0, 3]),
        abs(cm[1, 2]),
    )
    first = float(np.max(np.abs(means)))
    if residual > tolerance or first > tolerance:
        raise OracleConfigurationError(
            f"covariance matrix departs from block form: residual={residual:.3e}, "
            f"first moments={first:.3e}"
        )
    return CovarianceEstimate(
        covariance=TwoModeCovariance(a=a, b=b, c=c),
        structure_residual=float(residual),
        first_moment=first,
        full_matrix=cm,
    )


def pure_state_fidelity(state: StateVector, rho: FockDensity) -> float:
    """⟨ψ|ρ|ψ⟩ with both sides normalised on the truncated space."""
    if state.cutoff != rho.cutoff or state.modes != rho.modes:
        raise OracleConfigurationError("state and density live on different truncated spaces")
    psi = state.amplitudes
    value = np.vdot(psi, rho.matrix @ psi).real
    return float(value / (state.norm_squared * rho.trace))


def overlap_fidelity(first: StateVector, second: StateVector) -> float:
    """|⟨φ₀|φ₁⟩|² for normalised truncated vectors."""
    if first.cutoff != second.cutoff or first.modes != second.modes:
        raise OracleConfigurationError("states live on different truncated spaces")
    inner = np.vdot(first.amplitudes, second.amplitudes)
    return float(abs(inner) ** 2 / (first.norm_squared * second.norm_squared))


# =============================================================================
# READOUT HYPOTHESES
# =============================================================================

def coherent_hypotheses(
    nbar: float,
    r: float,
    cutoff: Optional[int] = None,
) -> Tuple[StateVector, StateVector]:
    """Returned signals (|√r α⟩, |α⟩) for bit 0 and bit 1, α = √n̄."""
    if not (0.0 <= r <= 1.0):
        raise DomainError(f"reflectivity r must lie in [0, 1], got {r}")
    n_cut = coherent_cutoff(nbar) if cutoff is None else cutoff
    alpha = math.sqrt(nbar)
    return (
        coherent_state_vector(math.sqrt(r) * alpha, cutoff=n_cut),
        coherent_state_vector(alpha, cutoff=n_cut),
    )


def epr_hypotheses(
    nbar: float,
    r: float,
    cutoff: Optional[int] = None,
    max_loss: Optional[int] = None,
) -> Tuple[FockDensity, FockDensity, StateVector]:
    """(σ₀, σ₁, |ψ⟩): lossy and untouched TMSV with n̄ signal photons."""
    mu = 2.0 * nbar + 1.0
    psi = tmsv_state_vector(mu, cutoff=cutoff)
    sigma0 = apply_loss_to_signal_fock(psi, r, max_loss=max_loss)
    sigma1 = density_from_vector(psi)
    logger.debug("epr_hypotheses", nbar=nbar, r=r, cutoff=psi.cutoff, nnz=sigma0.matrix.nnz)
    return sigma0, sigma1, psi


__all__ = [
    "OracleConfig",
    "Mode",
    "StateVector",
    "FockDensity",
    "HelstromVerdict",
    "CovarianceEstimate",
    "coherent_tail",
    "tmsv_tail",
    "coherent_cutoff",
    "tmsv_cutoff",
    "coherent_state_vector",
    "tmsv_state_vector",
    "density_from_vector",
    "reduced_state",
    "mean_photon_number",
    "loss_channel_kraus",
    "apply_loss_to_signal_fock",
    "trace_norm_hermitian",
    "helstrom_exact",
    "moments_from_density",
    "pure_state_fidelity",
    "overlap_fidelity",
    "coherent_hypotheses",
    "epr_hypotheses",
]
