import logging
from dataclasses import dataclass

import numpy as np

from ..exceptions import InvalidQubitError, NormalizationError, ZeroProbabilityBranchError
from .gates import contract
from .state import NORM_ATOL, ZERO_PROBABILITY, PureState, check_qubits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SingleQubitBasis:
    """
    Orthonormal single-qubit measurement basis {|gamma>, |gamma_perp>}.

    |gamma> = a|0> + b|1> and |gamma_perp> = b*|0> - a*|1>. The
    computational basis is a=1, b=0; a=b=1/sqrt(2) gives {|+>, |->}.

    Parameters
    ----------
    a : complex

    b : complex

    Raises
    ------
    NormalizationError
        If a or b is not finite or |a|^2 + |b|^2 differs from 1 by more
        than ``NORM_ATOL``.
    """

    a: complex
    b: complex

    def __post_init__(self):
        a, b = complex(self.a), complex(self.b)
        if not (np.isfinite(a) and np.isfinite(b)):
            raise NormalizationError("Basis coefficients must be finite.")
        norm2 = abs(a) ** 2 + abs(b) ** 2
        if abs(norm2 - 1.0) > NORM_ATOL:
            raise NormalizationError(
                f"Basis needs |a|^2 + |b|^2 = 1. Received {norm2!r} instead.")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def computational(cls):
        return cls(1.0, 0.0)

    @classmethod
    def hadamard(cls):
        return cls(1 / np.sqrt(2.0), 1 / np.sqrt(2.0))

    @property
    def gamma(self):
        return np.array([self.a, self.b], dtype=np.complex128)

    @property
    def gamma_perp(self):
        return np.array([np.conj(self.b), -np.conj(self.a)], dtype=np.complex128)

    def vector(self, outcome):
        if outcome == 0:
            return self.gamma
        if outcome == 1:
            return self.gamma_perp
        raise ValueError(f"Basis outcome must be 0 or 1. Received {outcome!r} instead.")

    def is_computational(self, atol=NORM_ATOL):
        return abs(self.b) <= atol


def basis_from_angle(degrees):
    """Real basis a = cos(t), b = sin(t) for an angle t in degrees."""
    t = np.deg2rad(degrees)
    return SingleQubitBasis(float(np.cos(t)), float(np.sin(t)))


@dataclass(frozen=True)
class MeasurementResult:
    """Outcome index (0 for |gamma>, 1 for |gamma_perp>), its Born weight and the collapsed state."""

    outcome: int
    probability: float
    post_state: PureState


@dataclass(frozen=True)
class JointMeasurementResult:
    outcome: str
    probability: float
    post_state: PureState


def select_outcome(probabilities, draw):
    """
    Pick an outcome index from a uniform draw in [0, 1).

    Outcomes are laid out as consecutive half-open intervals in order, and
    any weight at or below ``ZERO_PROBABILITY`` is treated as exactly zero,
    so ``draw = 0`` always picks the first outcome that can occur.

    Raises
    ------
    ValueError
        If ``draw`` is outside [0, 1).
    ZeroProbabilityBranchError
        If no outcome carries weight.
    """
    if not 0.0 <= draw < 1.0:
        raise ValueError(f"`draw` must lie in [0, 1). Received {draw!r} instead.")
    weights = np.asarray(probabilities, dtype=float)
    live = weights > ZERO_PROBABILITY
    weights = np.where(live, weights, 0.0)
    total = weights.sum()
    if total <= 0.0:
        raise ZeroProbabilityBranchError("No measurement outcome carries any weight.")
    cumulative = np.cumsum(weights) / total
    index = int(np.searchsorted(cumulative, draw, side="right"))
    if index >= len(weights) or not live[index]:
        # draw landed in rounding slack past the last interval
        index = int(np.flatnonzero(live)[-1])
        logger.debug("Draw %r fell past the cumulative weights; taking outcome %d", draw, index)
    return index


def project(state, qubit, basis, outcome):
    """
    Project one qubit onto a basis vector without sampling.

    Returns
    -------
    (float, PureState or None)
        The Born weight of the branch and the renormalized post-measurement
        state, or None when the weight is zero.
    """
    (qubit,) = check_qubits(state.n_qubits, (qubit,))
    vec = basis.vector(outcome)
    projector = np.outer(vec, vec.conj())
    raw = contract(state.amps, projector, (qubit,), state.n_qubits)
    probability = float(np.vdot(raw, raw).real)
    if probability <= ZERO_PROBABILITY:
        return probability, None
    return probability, PureState(state.n_qubits, raw / np.sqrt(probability))


def measure(state, qubit, basis, random_draw):
    """
    Projective measurement of one qubit in an arbitrary basis.

    The measured qubit is left in the observed basis vector and the rest of
    the register collapses accordingly. The engine holds no random state;
    the caller supplies ``random_draw``.

    Parameters
    ----------
    state : PureState

    qubit : int

    basis : SingleQubitBasis

    random_draw : float in [0, 1)

    Returns
    -------
    MeasurementResult
    """
    branches = [project(state, qubit, basis, outcome) for outcome in (0, 1)]
    outcome = select_outcome([p for p, _ in branches], random_draw)
    probability, post_state = branches[outcome]
    if post_state is None:
        raise ZeroProbabilityBranchError(
            f"Outcome {outcome} on qubit {qubit} was selected with zero weight.")
    return MeasurementResult(outcome, probability, post_state)


def outcome_distribution(state, qubits):
    """
    Exact Born probabilities of every computational outcome on ``qubits``.

    Keys are bit strings written in the order ``qubits`` is listed, and every
    one of the 2**k keys is present.
    """
    qubits = check_qubits(state.n_qubits, qubits)
    if not qubits:
        raise InvalidQubitError("`qubits` must name at least one qubit.")
    probs = np.abs(state.as_tensor()) ** 2
    others = tuple(i for i in range(state.n_qubits) if i not in qubits)
    marginal = probs.sum(axis=others) if others else probs
    ordered = sorted(qubits)
    marginal = np.transpose(marginal, [ordered.index(q) for q in qubits]).reshape(-1)
    width = len(qubits)
    return {format(i, f"0{width}b"): float(p) for i, p in enumerate(marginal)}


def _restrict(state, assignment):
    psi = np.array(state.as_tensor())
    mask = np.zeros_like(psi, dtype=bool)
    index = tuple(assignment.get(i, slice(None)) for i in range(state.n_qubits))
    mask[index] = True
    return np.where(mask, psi, 0.0).reshape(-1)


def measure_qubits(state, qubits, random_draw):
    """
    Joint computational-basis measurement of several qubits with one draw.

    Returns
    -------
    JointMeasurementResult
        The observed bit string, its probability and the collapsed state over
        the full register.
    """
    distribution = outcome_distribution(state, qubits)
    labels = list(distribution)
    index = select_outcome([distribution[label] for label in labels], random_draw)
    label = labels[index]
    assignment = {q: int(bit) for q, bit in zip(qubits, label)}
    raw = _restrict(state, assignment)
    probability = distribution[label]
    return JointMeasurementResult(label, probability, PureState(state.n_qubits, raw / np.sqrt(probability)))


def condition(state, assignment):
    """
    State of the unassigned qubits given computational values on the rest.

    Parameters
    ----------
    state : PureState

    assignment : dict of int -> int
        Qubit index to the bit it is fixed to.

    Returns
    -------
    PureState
        Renormalized state of the remaining qubits in ascending order.

    Raises
    ------
    ZeroProbabilityBranchError
        If the assignment has zero weight in ``state``.
    """
    qubits = check_qubits(state.n_qubits, assignment.keys())
    if len(qubits) >= state.n_qubits:
        raise InvalidQubitError("At least one qubit must remain unassigned.")
    for q in qubits:
        if assignment[q] not in (0, 1):
            raise ValueError(f"Qubit {q} must be fixed to 0 or 1. Received {assignment[q]!r} instead.")
    index = tuple(assignment.get(i, slice(None)) for i in range(state.n_qubits))
    sub = state.as_tensor()[index].reshape(-1)
    norm = np.linalg.norm(sub)
    if norm ** 2 <= ZERO_PROBABILITY:
        raise ZeroProbabilityBranchError(f"Assignment {assignment} has zero weight.")
    return PureState(state.n_qubits - len(qubits), sub / norm)
