from dataclasses import dataclass
from typing import Optional

from ..protocol import Secret
from ..statevec import Gate, PureState, apply_gates, fidelity, make_state, tensor

N_PHYSICAL = 9

# Phase-flip code across the block leaders, then a bit-flip code inside each block.
ENCODING_GATES = (
    Gate.cnot(0, 3),
    Gate.cnot(0, 6),
    Gate.h(0),
    Gate.h(3),
    Gate.h(6),
    Gate.cnot(0, 1),
    Gate.cnot(3, 4),
    Gate.cnot(6, 7),
    Gate.cnot(0, 2),
    Gate.cnot(3, 5),
    Gate.cnot(6, 8),
)


@dataclass(frozen=True)
class ShorCodeword:
    """
    Nine physical qubits carrying one logical qubit.

    ``logical`` is the secret the codeword was built from, if known.
    ``measured_outcome`` records the basis index observed by the last
    measurement error injected, if any.
    """

    state: PureState
    logical: Optional[Secret] = None
    measured_outcome: Optional[int] = None


def shor_encode(secret):
    """
    Encode a secret into the nine-qubit Shor code.

    |0> becomes ((|000> + |111>)/sqrt(2))^3 and |1> becomes
    ((|000> - |111>)/sqrt(2))^3; the map is linear in (alpha, beta).
    """
    register = tensor(secret.state, make_state(N_PHYSICAL - 1, 0))
    return ShorCodeword(apply_gates(register, ENCODING_GATES), secret)


def logical_fidelity(cw, secret):
    """Fidelity between the codeword's physical state and the clean encoding of ``secret``."""
    return fidelity(cw.state, shor_encode(secret).state)
