import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..statevec import PureState, select_outcome
from ..statevec.gates import X_MATRIX, Z_MATRIX, contract
from .codeword import N_PHYSICAL, ShorCodeword

logger = logging.getLogger(__name__)

Z_PARITY_PAIRS = ((0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8))
X_PARITY_SUPPORTS = ((0, 1, 2, 3, 4, 5), (3, 4, 5, 6, 7, 8))

# Generators in syndrome bit order: six Z-parities, then two X-parities.
STABILIZERS = (
    tuple((Z_MATRIX, pair) for pair in Z_PARITY_PAIRS)
    + tuple((X_MATRIX, support) for support in X_PARITY_SUPPORTS)
)


@dataclass(frozen=True)
class Syndrome:
    """
    Eigenvalues of the eight stabilizer generators, 1 meaning -1.

    ``z_bits`` follow the Z-parity pairs (0,1), (1,2), (3,4), (4,5), (6,7),
    (7,8); ``x_bits`` the X-parities over blocks 0-1 and 1-2.
    """

    z_bits: Tuple[int, ...] = (0,) * 6
    x_bits: Tuple[int, ...] = (0, 0)

    def __post_init__(self):
        z_bits, x_bits = tuple(int(b) for b in self.z_bits), tuple(int(b) for b in self.x_bits)
        if len(z_bits) != 6 or len(x_bits) != 2 or not set(z_bits + x_bits) <= {0, 1}:
            raise ValueError(
                f"A syndrome needs 6 z bits and 2 x bits. Received {self.z_bits!r}, {self.x_bits!r} instead.")
        object.__setattr__(self, "z_bits", z_bits)
        object.__setattr__(self, "x_bits", x_bits)

    @property
    def is_trivial(self):
        return not any(self.z_bits + self.x_bits)

    def __str__(self):
        return "".join(map(str, self.z_bits)) + "/" + "".join(map(str, self.x_bits))


def _apply_stabilizer(amps, stabilizer):
    pauli, support = stabilizer
    for qubit in support:
        amps = contract(amps, pauli, (qubit,), N_PHYSICAL)
    return amps


def measure_syndrome(cw, draws=None):
    """
    Projectively measure the eight stabilizer generators on the nine data
    qubits, one after another, with the projectors (I + S)/2 and (I - S)/2.

    Parameters
    ----------
    cw : ShorCodeword

    draws : sequence of 8 floats, default=None
        Uniform draws selecting each parity outcome. Zeros when omitted,
        which picks the +1 eigenvalue whenever it can occur. After any
        single-qubit error only the first non-deterministic parity can
        split the state.

    Returns
    -------
    (Syndrome, ShorCodeword)
        The observed syndrome and the collapsed codeword.
    """
    draws = [0.0] * len(STABILIZERS) if draws is None else list(draws)
    if len(draws) != len(STABILIZERS):
        raise ValueError(f"`draws` needs {len(STABILIZERS)} values. Received {len(draws)} instead.")
    amps = cw.state.amps
    bits = []
    for stabilizer, draw in zip(STABILIZERS, draws):
        flipped = _apply_stabilizer(amps, stabilizer)
        branches = [(amps + flipped) / 2, (amps - flipped) / 2]
        weights = [float(np.vdot(b, b).real) for b in branches]
        bit = select_outcome(weights, draw)
        amps = branches[bit] / np.sqrt(weights[bit])
        bits.append(bit)
    syndrome = Syndrome(tuple(bits[:6]), tuple(bits[6:]))
    logger.debug("Measured syndrome %s", syndrome)
    return syndrome, ShorCodeword(PureState(N_PHYSICAL, amps), cw.logical, cw.measured_outcome)
