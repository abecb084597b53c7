"""
Quantum Reading V1.0.0 — Core Package
======================================
Closed-form Gaussian numerics for reading a classical digital memory with
coherent-state and EPR transmitters.

Modules:
- gaussian_core: two-mode covariance matrices, loss, fidelities
- discrimination: Helstrom / Chernoff bounds and readout information
- readout_model: classical vs quantum reader per cell and over grids
- secure_design: photon-budget-driven reflectivity choice
- errors: exception hierarchy shared with the oracle and the CLI
"""

from .discrimination import (
    BoundKind,
    DiscriminationResult,
    binary_entropy,
    discriminate_pure,
    discriminate_qcb,
    helstrom_pure,
    qcb_from_fidelity,
    readout_information,
)
from .errors import (
    DomainError,
    QuantumReadingError,
    UnreachableTargetError,
)
from .gaussian_core import (
    TwoModeCovariance,
    apply_loss_to_signal,
    epr_covariance,
    fidelity_coherent,
    fidelity_epr_closed,
    fidelity_pure_mixed_det,
    symplectic_eigenvalues,
)
from .readout_model import (
    MemoryCellSpec,
    TransmitterKind,
    TransmitterSpec,
    advantage_region,
    info_classical,
    info_gain_delta,
    info_quantum,
    readout,
)
from .secure_design import (
    DesignReport,
    DesignSpec,
    budget_for_target_quantum_info,
    design_report,
    reflectivity_for_budget,
)

__all__ = [
    "BoundKind",
    "DiscriminationResult",
    "binary_entropy",
    "discriminate_pure",
    "discriminate_qcb",
    "helstrom_pure",
    "qcb_from_fidelity",
    "readout_information",
    "DomainError",
    "QuantumReadingError",
    "UnreachableTargetError",
    "TwoModeCovariance",
    "apply_loss_to_signal",
    "epr_covariance",
    "fidelity_coherent",
    "fidelity_epr_closed",
    "fidelity_pure_mixed_det",
    "symplectic_eigenvalues",
    "MemoryCellSpec",
    "TransmitterKind",
    "TransmitterSpec",
    "advantage_region",
    "info_classical",
    "info_gain_delta",
    "info_quantum",
    "readout",
    "DesignReport",
    "DesignSpec",
    "budget_for_target_quantum_info",
    "design_report",
    "reflectivity_for_budget",
]
