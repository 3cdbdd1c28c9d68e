import logging
from dataclasses import dataclass

import numpy as np

from ..exceptions import InvalidQubitError, ZeroProbabilityBranchError
from ..statevec import (
    ZERO_PROBABILITY,
    Gate,
    apply_gate,
    apply_gates,
    condition,
    fidelity,
    make_state,
    outcome_distribution,
    project,
    select_outcome,
    tensor,
)
from .cheat_model import CheatModel
from .transcript import ProtocolTranscript
from .verdict import verdict_from_outcome

logger = logging.getLogger(__name__)

ALICE, BOB, CHARLIE = 0, 1, 2
ANCILLA_QUBITS = (BOB, CHARLIE)

# Circuit columns, each ending at the labelled snapshot.
ENCODING_STAGES = (
    ("psi1", (Gate.h(ALICE),)),
    ("psi2", (Gate.cnot(ALICE, BOB), Gate.cnot(ALICE, CHARLIE))),
    ("psi3", (Gate.h(ALICE), Gate.h(BOB), Gate.h(CHARLIE))),
)
PARTY_STAGES = (
    ("psi4", (Gate.h(ALICE), Gate.h(BOB), Gate.h(CHARLIE))),
)
RECONSTRUCTION_STAGES = (
    ("psi5", (Gate.cnot(ALICE, BOB), Gate.cnot(ALICE, CHARLIE))),
    ("psi6", (Gate.toffoli(BOB, CHARLIE, ALICE),)),
    ("psi7", (Gate.h(ALICE),)),
    ("psi8", (Gate.z(ALICE),)),
)

_MAX_KEY = 2 ** 128
_WORD_MASK = 2 ** 64 - 1


def _require_three_qubits(state, operation):
    if state.n_qubits != 3:
        raise InvalidQubitError(
            f"`{operation}` acts on the 3-qubit shared state. Received {state.n_qubits} qubit(s) instead.")


def _evolve(state, stages):
    snapshots = {}
    for label, gates in stages:
        state = apply_gates(state, gates)
        snapshots[label] = state
    return state, snapshots


def dealer_input(secret):
    """psi0: the secret on Alice's line followed by the two |1> ancillas."""
    return tensor(secret.state, make_state(2, 0b11))


def encode_with_snapshots(secret):
    psi0 = dealer_input(secret)
    psi3, snapshots = _evolve(psi0, ENCODING_STAGES)
    return psi3, {"psi0": psi0, **snapshots}


def encode(secret):
    """
    Dealer's encoding circuit up to the distributed state psi3.

    H on Alice's line, CNOTs from Alice to Bob and Charlie, then H on all
    three lines, starting from (alpha|0> + beta|1>)|1>|1>.
    """
    return encode_with_snapshots(secret)[0]


def party_hadamards(state):
    """Each share holder applies H to the qubit they received."""
    _require_three_qubits(state, "party_hadamards")
    return _evolve(state, PARTY_STAGES)[0]


def apply_cheat(state, cheat, draws):
    """
    Let the cheating parties measure their shares.

    Bob measures qubit 1, then Charlie measures qubit 2, each consuming one
    draw in that order. Measured qubits stay in the observed basis vector.

    Parameters
    ----------
    state : PureState
        The distributed state psi3.

    cheat : CheatModel

    draws : sequence of float
        One uniform draw in [0, 1) per cheating party.

    Returns
    -------
    (PureState, dict)
        The collapsed state and the basis index each cheater observed,
        keyed by "bob" / "charlie".
    """
    _require_three_qubits(state, "apply_cheat")
    return _walk_cheaters(state, cheat, draws, _project_both)


def _project_both(prefix, state, party, basis):
    return [project(state, party.qubit, basis, outcome) for outcome in (0, 1)]


def _walk_cheaters(state, cheat, draws, split):
    """
    Collapse the cheaters' shares in order, one draw each.

    ``split(prefix, state, party, basis)`` returns the (weight, post-state)
    pair of both basis outcomes; ``prefix`` holds the outcomes seen so far.
    """
    cheaters = cheat.cheaters()
    draws = list(draws)
    if len(draws) != len(cheaters):
        raise ValueError(
            f"`draws` needs one value per cheating party ({len(cheaters)}). Received {len(draws)} instead.")
    outcomes = {}
    for (party, basis), draw in zip(cheaters, draws):
        branches = split(tuple(outcomes.items()), state, party, basis)
        outcome = select_outcome([p for p, _ in branches], draw)
        state = branches[outcome][1]
        if state is None:
            raise ZeroProbabilityBranchError(
                f"{party.label} observed outcome {outcome}, which has zero weight.")
        outcomes[party.label] = outcome
    return state, outcomes


def reconstruct(state):
    """
    Alice's reconstruction circuit on the three returned shares.

    CNOTs from her qubit to Bob's and Charlie's, Toffoli controlled by Bob
    and Charlie onto her qubit, then H and Z on her qubit.

    Returns
    -------
    (PureState, dict)
        psi8 and the snapshots psi5 ... psi8.
    """
    _require_three_qubits(state, "reconstruct")
    return _evolve(state, RECONSTRUCTION_STAGES)


def corrective_phase(state):
    """Z on Alice's qubit (index 0)."""
    return apply_gate(state, Gate.z(ALICE))


def trial_seed(seed, trial):
    """
    Per-trial Philox key: the trial index in the high 64 bits, the run seed in
    the low 64 bits, so each trial's stream is independent of execution order.
    """
    if not 0 <= seed < 2 ** 64:
        raise ValueError(f"`seed` must be an unsigned 64-bit integer. Received {seed!r} instead.")
    if not 0 <= trial < 2 ** 64:
        raise ValueError(f"`trial` must lie in [0, 2**64). Received {trial!r} instead.")
    return (int(trial) << 64) | int(seed)


class TrialStream:
    """
    Uniform draws of a Philox stream keyed per trial.

    One bit generator is re-keyed through its state for every trial, which
    gives the same numbers as a fresh ``np.random.Philox(key=rng_seed)``
    without building a new generator each time.

    Examples
    --------
    >>> stream = TrialStream()
    >>> fresh = np.random.Generator(np.random.Philox(key=7)).random(3)
    >>> bool(np.array_equal(stream.draws(7), fresh))
    True
    """

    def __init__(self, n_draws=3) -> None:
        """Initialize."""
        self.n_draws = n_draws
        self._bit_generator = np.random.Philox(key=0)
        self._generator = np.random.Generator(self._bit_generator)

    def draws(self, rng_seed):
        if not 0 <= rng_seed < _MAX_KEY:
            raise ValueError(f"`rng_seed` must lie in [0, 2**128). Received {rng_seed!r} instead.")
        rng_seed = int(rng_seed)
        self._bit_generator.state = {
            "bit_generator": "Philox",
            "state": {
                "counter": np.zeros(4, dtype=np.uint64),
                "key": np.array([rng_seed & _WORD_MASK, rng_seed >> 64], dtype=np.uint64),
            },
            "buffer": np.zeros(4, dtype=np.uint64),
            "buffer_pos": 4,
            "has_uint32": 0,
            "uinteger": 0,
        }
        return self._generator.random(self.n_draws)


@dataclass(frozen=True)
class _AncillaBranch:
    probability: float
    before: object
    after: object
    fidelity_before: float
    fidelity_after: float


@dataclass(frozen=True)
class _AdversaryBranch:
    snapshots: dict
    ancilla: dict


class QSSProtocol:
    """
    The three-party sharing protocol for one secret and one cheat model.

    The circuit is deterministic once the adversary outcomes are fixed, so
    the evolution of every adversary branch is computed once and reused;
    repeated runs only consume random draws.

    Parameters
    ----------
    secret : Secret

    cheat : CheatModel, default=None
        Honest when omitted.

    Examples
    --------
    >>> protocol = QSSProtocol(Secret(0.6, 0.8), CheatModel.computational(Party.BOB))
    >>> protocol.run(7).verdict in (Verdict.NO_CHEAT, Verdict.BOB_CHEATED)
    True
    """

    def __init__(self, secret, cheat=None) -> None:
        """Initialize."""
        self.secret = secret
        self.cheat = cheat if cheat is not None else CheatModel.honest()
        self._encoded = None
        self._splits = {}
        self._branches = {}
        self._stream = TrialStream()

    def encoded(self):
        if self._encoded is None:
            self._encoded = encode_with_snapshots(self.secret)
        return self._encoded

    def _split(self, prefix, state, party, basis):
        if prefix not in self._splits:
            self._splits[prefix] = _project_both(prefix, state, party, basis)
        return self._splits[prefix]

    def _branch(self, outcomes, state):
        key = tuple(outcomes)
        if key not in self._branches:
            logger.debug("Evolving adversary branch %s for %s", key, self.cheat.describe())
            psi4 = party_hadamards(state)
            psi8, snapshots = reconstruct(psi4)
            ancilla = {}
            for label, probability in outcome_distribution(psi8, ANCILLA_QUBITS).items():
                if probability <= ZERO_PROBABILITY:
                    continue
                before = condition(psi8, {BOB: int(label[0]), CHARLIE: int(label[1])})
                after = corrective_phase(before) if verdict_from_outcome(label).needs_correction else before
                ancilla[label] = _AncillaBranch(
                    probability,
                    before,
                    after,
                    fidelity(before, self.secret.state),
                    fidelity(after, self.secret.state),
                )
            self._branches[key] = _AdversaryBranch({"psi4": psi4, **snapshots}, ancilla)
        return self._branches[key]

    def run(self, rng_seed):
        """
        Execute one seeded run.

        Three uniform draws are taken from a Philox stream keyed by
        ``rng_seed``: Bob's measurement, Charlie's measurement and Alice's
        ancilla measurement, always in that order whether or not the party
        cheats.

        Returns
        -------
        ProtocolTranscript
        """
        draws = self._stream.draws(rng_seed)

        psi3, snapshots = self.encoded()
        state, adversary_outcomes = _walk_cheaters(
            psi3,
            self.cheat,
            [draws[party.qubit - 1] for party, _ in self.cheat.cheaters()],
            self._split,
        )

        branch = self._branch(tuple(adversary_outcomes.items()), state)
        labels = list(branch.ancilla)
        label = labels[select_outcome([branch.ancilla[lab].probability for lab in labels], draws[2])]
        chosen = branch.ancilla[label]
        verdict = verdict_from_outcome(label)

        return ProtocolTranscript(
            secret=self.secret,
            cheat=self.cheat,
            snapshots={**snapshots, **branch.snapshots},
            adversary_outcomes=adversary_outcomes,
            ancilla_outcome=label,
            verdict=verdict,
            correction_applied=verdict.needs_correction,
            recovered=chosen.after,
            fidelity_before_correction=chosen.fidelity_before,
            fidelity_recovered=chosen.fidelity_after,
            rng_seed=int(rng_seed),
        )


def run_protocol(secret, cheat, rng_seed):
    """
    Encode, distribute, let the cheaters measure, reconstruct, read the
    ancillas, decide the verdict and correct. Deterministic in ``rng_seed``.
    """
    return QSSProtocol(secret, cheat).run(rng_seed)
