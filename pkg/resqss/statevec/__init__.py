__all__ = [
    "PureState",
    "Gate",
    "GateKind",
    "SingleQubitBasis",
    "MeasurementResult",
    "JointMeasurementResult",
    "make_state",
    "tensor",
    "fidelity",
    "format_ket",
    "check_qubits",
    "apply_gate",
    "apply_gates",
    "apply_matrix",
    "is_unitary",
    "basis_from_angle",
    "select_outcome",
    "project",
    "measure",
    "measure_qubits",
    "outcome_distribution",
    "condition",
    "MAX_QUBITS",
    "NORM_ATOL",
    "ZERO_PROBABILITY",
]

from .state import (
    MAX_QUBITS,
    NORM_ATOL,
    ZERO_PROBABILITY,
    PureState,
    check_qubits,
    fidelity,
    format_ket,
    make_state,
    tensor,
)
from .gates import Gate, GateKind, apply_gate, apply_gates, apply_matrix, is_unitary
from .measurement import (
    JointMeasurementResult,
    MeasurementResult,
    SingleQubitBasis,
    basis_from_angle,
    condition,
    measure,
    measure_qubits,
    outcome_distribution,
    project,
    select_outcome,
)
