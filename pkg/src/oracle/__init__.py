"""
Fock-basis oracle: exact states, loss channel and Helstrom bound at desk scale.
"""

from .fock_oracle import (
    FockDensity,
    HelstromVerdict,
    StateVector,
    apply_loss_to_signal_fock,
    coherent_hypotheses,
    coherent_state_vector,
    epr_hypotheses,
    helstrom_exact,
    loss_channel_kraus,
    moments_from_density,
    tmsv_state_vector,
)

__all__ = [
    "FockDensity",
    "HelstromVerdict",
    "StateVector",
    "apply_loss_to_signal_fock",
    "coherent_hypotheses",
    "coherent_state_vector",
    "epr_hypotheses",
    "helstrom_exact",
    "loss_channel_kraus",
    "moments_from_density",
    "tmsv_state_vector",
]
