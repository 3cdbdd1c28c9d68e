import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from scipy.stats import unitary_group

from ..exceptions import InvalidQubitError
from ..statevec import SingleQubitBasis, apply_matrix, is_unitary, measure
from ..statevec.gates import X_MATRIX, Z_MATRIX
from .codeword import N_PHYSICAL, ShorCodeword

logger = logging.getLogger(__name__)

# Y is taken as the combined flip XZ; it differs from the Pauli Y by a global phase only.
XZ_MATRIX = X_MATRIX @ Z_MATRIX

PAULI_MATRICES = {"X": X_MATRIX, "Y": XZ_MATRIX, "Z": Z_MATRIX}


class ErrorKind(Enum):
    PAULI_X = "X"
    PAULI_Y = "Y"
    PAULI_Z = "Z"
    UNITARY = "unitary"
    MEASURE = "measure"


@dataclass(frozen=True, eq=False)
class ErrorSpec:
    """
    A single-qubit disturbance of a codeword.

    Parameters
    ----------
    kind : ErrorKind

    qubit : int
        Physical qubit in [0, 9).

    matrix : np.ndarray, optional
        The 2x2 unitary for ``ErrorKind.UNITARY``.

    basis : SingleQubitBasis, optional
        Measurement basis for ``ErrorKind.MEASURE``.

    draw : float, optional
        Uniform draw in [0, 1) selecting the measurement outcome.

    angle : float, optional
        The basis angle in degrees, kept for descriptions only.
    """

    kind: ErrorKind
    qubit: int
    matrix: Optional[np.ndarray] = None
    basis: Optional[SingleQubitBasis] = None
    draw: Optional[float] = None
    angle: Optional[float] = None

    def __post_init__(self):
        if not 0 <= self.qubit < N_PHYSICAL:
            raise InvalidQubitError(
                f"Error qubit must lie in [0, {N_PHYSICAL}). Received {self.qubit} instead.")
        if self.kind is ErrorKind.UNITARY:
            if self.matrix is None or np.shape(self.matrix) != (2, 2) or not is_unitary(self.matrix):
                raise ValueError("A unitary error needs a 2x2 unitary `matrix`.")
        if self.kind is ErrorKind.MEASURE:
            if self.basis is None:
                raise ValueError("A measurement error needs a `basis`.")
            if self.draw is None or not 0.0 <= self.draw < 1.0:
                raise ValueError(f"A measurement error needs a `draw` in [0, 1). Received {self.draw!r} instead.")

    @classmethod
    def pauli(cls, name, qubit):
        return cls(ErrorKind(name), qubit)

    @classmethod
    def unitary(cls, matrix, qubit):
        return cls(ErrorKind.UNITARY, qubit, matrix=np.asarray(matrix, dtype=np.complex128))

    @classmethod
    def measurement(cls, basis, qubit, draw, angle=None):
        return cls(ErrorKind.MEASURE, qubit, basis=basis, draw=draw, angle=angle)

    def operator(self):
        if self.kind is ErrorKind.UNITARY:
            return self.matrix
        return PAULI_MATRICES[self.kind.value]

    def describe(self):
        if self.kind is ErrorKind.MEASURE:
            angle = "" if self.angle is None else f":{self.angle:g}"
            return f"measure:{self.qubit}{angle}@{self.draw:g}"
        return f"{self.kind.value}:{self.qubit}"


def inject_error(cw, err):
    """
    Apply ``err`` to its physical qubit.

    Measurements collapse the codeword with the single-qubit ``measure``
    of the state-vector engine and leave the qubit in the observed basis
    vector; the observed index is kept on the returned codeword.
    """
    if err.kind is ErrorKind.MEASURE:
        result = measure(cw.state, err.qubit, err.basis, err.draw)
        logger.debug("Measurement on qubit %d observed %d (p=%.6g)", err.qubit, result.outcome, result.probability)
        return ShorCodeword(result.post_state, cw.logical, result.outcome)
    return ShorCodeword(apply_matrix(cw.state, err.operator(), (err.qubit,)), cw.logical)


def random_unitary_error(qubit, rng):
    """Haar-random single-qubit unitary on ``qubit``, drawn from a numpy Generator."""
    return ErrorSpec.unitary(unitary_group.rvs(2, random_state=rng), qubit)
