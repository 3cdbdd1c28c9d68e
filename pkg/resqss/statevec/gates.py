from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..exceptions import InvalidQubitError
from .state import PureState, check_qubits

UNITARY_ATOL = 1e-10

_SQRT_HALF = 1.0 / np.sqrt(2.0)

H_MATRIX = np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT_HALF
X_MATRIX = np.array([[0, 1], [1, 0]], dtype=np.complex128)
Y_MATRIX = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
Z_MATRIX = np.array([[1, 0], [0, -1]], dtype=np.complex128)
CNOT_MATRIX = np.eye(4, dtype=np.complex128)[[0, 1, 3, 2]]
TOFFOLI_MATRIX = np.eye(8, dtype=np.complex128)[[0, 1, 2, 3, 4, 5, 7, 6]]

for _matrix in (H_MATRIX, X_MATRIX, Y_MATRIX, Z_MATRIX, CNOT_MATRIX, TOFFOLI_MATRIX):
    _matrix.flags.writeable = False


class GateKind(Enum):
    H = "H"
    X = "X"
    Z = "Z"
    CNOT = "CNOT"
    TOFFOLI = "TOFFOLI"


_MATRICES = {
    GateKind.H: H_MATRIX,
    GateKind.X: X_MATRIX,
    GateKind.Z: Z_MATRIX,
    GateKind.CNOT: CNOT_MATRIX,
    GateKind.TOFFOLI: TOFFOLI_MATRIX,
}

_ARITY = {
    GateKind.H: 1,
    GateKind.X: 1,
    GateKind.Z: 1,
    GateKind.CNOT: 2,
    GateKind.TOFFOLI: 3,
}


@dataclass(frozen=True)
class Gate:
    """
    One gate of the protocol circuits.

    Qubits are listed controls first, target last: ``Gate.cnot(0, 1)``
    flips qubit 1 when qubit 0 is set, ``Gate.toffoli(1, 2, 0)`` flips
    qubit 0 when qubits 1 and 2 are both set.
    """

    kind: GateKind
    qubits: tuple

    def __post_init__(self):
        qubits = tuple(int(q) for q in self.qubits)
        if len(qubits) != _ARITY[self.kind]:
            raise InvalidQubitError(
                f"{self.kind.value} acts on {_ARITY[self.kind]} qubit(s). Received {qubits} instead.")
        if len(set(qubits)) != len(qubits):
            raise InvalidQubitError(
                f"{self.kind.value} needs distinct qubits. Received {qubits} instead.")
        object.__setattr__(self, "qubits", qubits)

    @property
    def matrix(self):
        return _MATRICES[self.kind]

    @classmethod
    def h(cls, qubit):
        return cls(GateKind.H, (qubit,))

    @classmethod
    def x(cls, qubit):
        return cls(GateKind.X, (qubit,))

    @classmethod
    def z(cls, qubit):
        return cls(GateKind.Z, (qubit,))

    @classmethod
    def cnot(cls, control, target):
        return cls(GateKind.CNOT, (control, target))

    @classmethod
    def toffoli(cls, control1, control2, target):
        return cls(GateKind.TOFFOLI, (control1, control2, target))

    def __str__(self):
        return f"{self.kind.value}{self.qubits}"


def is_unitary(matrix, atol=UNITARY_ATOL):
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    return np.allclose(matrix.conj().T @ matrix, np.eye(matrix.shape[0]), atol=atol)


def contract(amps, matrix, qubits, n_qubits):
    """
    Multiply ``matrix`` into the listed qubits of a raw amplitude vector.

    No unitarity or normalization is assumed, so projectors go through here
    too. Returns a fresh flat amplitude vector.
    """
    k = len(qubits)
    psi = np.asarray(amps).reshape((2,) * n_qubits)
    gate = np.asarray(matrix, dtype=np.complex128).reshape((2,) * (2 * k))
    product = np.tensordot(gate, psi, axes=(list(range(k, 2 * k)), list(qubits)))
    unused = [i for i in range(n_qubits) if i not in qubits]
    return np.transpose(product, np.argsort([*qubits, *unused])).reshape(-1)


def apply_matrix(state, matrix, qubits):
    """
    Apply a unitary matrix to the listed qubits of ``state``.

    Parameters
    ----------
    state : PureState

    matrix : array-like of shape (2**k, 2**k)
        Unitary written in the big-endian order of ``qubits``.

    qubits : sequence of int
        The k target qubits, most significant first.

    Returns
    -------
    PureState
        A fresh state; ``state`` is left untouched.

    Raises
    ------
    InvalidQubitError
        If an index is invalid or the matrix size does not match.
    ValueError
        If ``matrix`` is not unitary.
    """
    qubits = check_qubits(state.n_qubits, qubits)
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.shape != (2 ** len(qubits), 2 ** len(qubits)):
        raise InvalidQubitError(
            f"A matrix of shape {matrix.shape} cannot act on {len(qubits)} qubit(s).")
    if not is_unitary(matrix):
        raise ValueError("`matrix` has to be unitary.")
    return PureState(state.n_qubits, contract(state.amps, matrix, qubits, state.n_qubits))


def apply_gate(state, gate):
    """Return ``gate`` applied to ``state``."""
    return apply_matrix(state, gate.matrix, gate.qubits)


def apply_gates(state, gates):
    for gate in gates:
        state = apply_gate(state, gate)
    return state
