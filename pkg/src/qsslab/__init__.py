"""Simulation lab for entanglement-swapping quantum secret sharing.

The package has two routes to every claim: a phase-free Bell-label algebra
(:mod:`qsslab.bell`) and a brute-force statevector simulator
(:mod:`qsslab.statevector`) that the protocol engines actually run on.  The
test suite checks the two against each other exhaustively.
"""
from .bell import (
    Basis,
    BellLabel,
    Correlation,
    PauliOp,
    detect_correlation_rule,
    encode_secret,
    infer_chain_labels,
    infer_link,
    pauli_action_on_bell,
    ring_reconstruct,
    swap_outcome,
)
from .statevector import (
    MAX_QUBITS,
    PureState,
    StateError,
    equal_up_to_global_phase,
    new_register,
)

__all__ = [
    "Basis",
    "BellLabel",
    "Correlation",
    "PauliOp",
    "detect_correlation_rule",
    "encode_secret",
    "infer_chain_labels",
    "infer_link",
    "pauli_action_on_bell",
    "ring_reconstruct",
    "swap_outcome",
    "MAX_QUBITS",
    "PureState",
    "StateError",
    "equal_up_to_global_phase",
    "new_register",
]
