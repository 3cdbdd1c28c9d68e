from dataclasses import dataclass

import numpy as np

from ..exceptions import InvalidQubitError, NormalizationError

MAX_QUBITS = 12
NORM_ATOL = 1e-10
ZERO_PROBABILITY = 1e-14


@dataclass(frozen=True, eq=False)
class PureState:
    """
    A normalized pure state over ``n_qubits`` qubits.

    Amplitudes are stored as a read-only complex vector of length 2**n.
    Index ``i`` is read as a big-endian bit string, so qubit 0 is the
    leftmost symbol of the ket: for three qubits, index 6 is |110>.

    Parameters
    ----------
    n_qubits : int
        Register size, between 1 and ``MAX_QUBITS``.

    amps : np.ndarray
        Complex amplitudes. Copied on construction.

    Raises
    ------
    InvalidQubitError
        If the register size is outside [1, MAX_QUBITS] or does not match
        the amplitude count.
    NormalizationError
        If an amplitude is not finite or the norm differs from 1 by more
        than ``NORM_ATOL``.
    """

    n_qubits: int
    amps: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise InvalidQubitError(
                f"`n_qubits` must lie in [1, {MAX_QUBITS}]. Received {self.n_qubits} instead.")
        amps = np.array(self.amps, dtype=np.complex128).reshape(-1)
        if amps.shape != (2 ** self.n_qubits,):
            raise InvalidQubitError(
                f"A {self.n_qubits}-qubit state needs {2 ** self.n_qubits} amplitudes. "
                f"Received {amps.size} instead.")
        if not np.all(np.isfinite(amps)):
            raise NormalizationError("State amplitudes must be finite.")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_ATOL:
            raise NormalizationError(f"State norm must be 1. Received {norm!r} instead.")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @classmethod
    def from_amplitudes(cls, amps, normalize=False):
        """Build a state from raw amplitudes, optionally renormalizing them first."""
        amps = np.asarray(amps, dtype=np.complex128).reshape(-1)
        n_qubits = int(round(np.log2(amps.size))) if amps.size else 0
        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0.0:
                raise NormalizationError("Cannot normalize the zero vector.")
            amps = amps / norm
        return cls(n_qubits, amps)

    def as_tensor(self):
        """View the amplitudes as an n-dimensional (2, 2, ..., 2) tensor."""
        return self.amps.reshape((2,) * self.n_qubits)

    def probabilities(self):
        return np.abs(self.amps) ** 2

    def __repr__(self):
        return f"PureState(n_qubits={self.n_qubits}, {format_ket(self)})"


def check_qubits(n_qubits, qubits):
    """
    Validate a list of qubit indices against a register size.

    Raises
    ------
    InvalidQubitError
        If an index is out of range or appears twice.
    """
    qubits = tuple(int(q) for q in qubits)
    for q in qubits:
        if not 0 <= q < n_qubits:
            raise InvalidQubitError(
                f"Qubit index {q} is out of range for a {n_qubits}-qubit state.")
    if len(set(qubits)) != len(qubits):
        raise InvalidQubitError(f"Qubit indices must be distinct. Received {qubits} instead.")
    return qubits


def make_state(n_qubits, basis_index):
    """
    Computational basis state |basis_index> over ``n_qubits`` qubits.

    Examples
    --------
    >>> make_state(3, 6)
    PureState(n_qubits=3, |110>)
    """
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise InvalidQubitError(
            f"`n_qubits` must lie in [1, {MAX_QUBITS}]. Received {n_qubits} instead.")
    if not 0 <= basis_index < 2 ** n_qubits:
        raise InvalidQubitError(
            f"Basis index {basis_index} is out of range for {n_qubits} qubits.")
    amps = np.zeros(2 ** n_qubits, dtype=np.complex128)
    amps[basis_index] = 1.0
    return PureState(n_qubits, amps)


def tensor(s1, s2):
    """Kronecker product with the qubits of ``s1`` first."""
    n_qubits = s1.n_qubits + s2.n_qubits
    if n_qubits > MAX_QUBITS:
        raise InvalidQubitError(
            f"Combined register of {n_qubits} qubits exceeds the {MAX_QUBITS}-qubit cap.")
    return PureState(n_qubits, np.kron(s1.amps, s2.amps))


def fidelity(s1, s2):
    """
    Squared overlap |<s1|s2>|^2 of two pure states.

    Invariant under the global phase of either argument.

    Raises
    ------
    InvalidQubitError
        If the two states live on registers of different size.
    """
    if s1.n_qubits != s2.n_qubits:
        raise InvalidQubitError(
            f"Cannot compare a {s1.n_qubits}-qubit state with a {s2.n_qubits}-qubit state.")
    overlap = np.vdot(s1.amps, s2.amps)
    return float(min(1.0, abs(overlap) ** 2))


def _format_amplitude(amp):
    if abs(amp.imag) < 1e-12:
        return f"{amp.real:+.4g}"
    if abs(amp.real) < 1e-12:
        return f"{amp.imag:+.4g}j"
    return f"+({amp.real:.4g}{amp.imag:+.4g}j)"


def format_ket(state, atol=1e-12):
    """Render a state as a sum of labelled kets, skipping vanishing amplitudes."""
    amps = state.amps if isinstance(state, PureState) else np.asarray(state, dtype=np.complex128)
    n_qubits = int(round(np.log2(amps.size)))
    terms = []
    for index, amp in enumerate(amps):
        if abs(amp) <= atol:
            continue
        label = format(index, f"0{n_qubits}b")
        if abs(amp - 1.0) <= atol:
            terms.append(f"|{label}>")
        else:
            terms.append(f"{_format_amplitude(amp)}|{label}>")
    if not terms:
        return "0"
    return " ".join(terms).lstrip("+")
