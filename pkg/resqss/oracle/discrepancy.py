import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..exceptions import InvalidQubitError
from ..protocol import CheatModel, Party, encode_with_snapshots, party_hadamards, reconstruct
from ..statevec import SingleQubitBasis, condition, project
from .distribution import branch_final_state
from .closed_forms import (
    arbitrary_basis_final_state,
    both_cheat_final_state,
    cheat_final_state,
    honest_states,
    post_measurement_states,
)

logger = logging.getLogger(__name__)

MATCH_ATOL = 1e-9


class MatchVerdict(Enum):
    MATCH = "match"
    MATCH_UP_TO_NORMALIZATION = "match-up-to-normalization"
    MISMATCH = "mismatch"


@dataclass(frozen=True)
class DiscrepancyReport:
    """
    How far a simulated state sits from a printed one.

    ``max_amp_delta`` is the largest elementwise gap between the printed
    vector and the simulated state after global-phase alignment;
    ``fidelity_after_renorm`` compares the simulated state with the printed
    vector scaled to unit norm.
    """

    label: str
    max_amp_delta: float
    fidelity_after_renorm: float
    verdict: MatchVerdict

    def as_dict(self):
        return {
            "label": self.label,
            "max_amp_delta": self.max_amp_delta,
            "fidelity_after_renorm": self.fidelity_after_renorm,
            "verdict": self.verdict.value,
        }


def compare(sim_state, closed_form):
    """
    Compare a simulated state with a printed one up to global phase.

    The verdict is "match" when the printed amplitudes agree within
    ``MATCH_ATOL`` as they stand, "match-up-to-normalization" when they only
    agree once the printed vector is rescaled to unit norm, and "mismatch"
    otherwise.

    Raises
    ------
    InvalidQubitError
        If the two states live on registers of different size.
    """
    raw = closed_form.amplitudes
    if raw.size != sim_state.amps.size:
        raise InvalidQubitError(
            f"{closed_form.label} has {raw.size} amplitudes, the simulated state {sim_state.amps.size}.")
    overlap = np.vdot(sim_state.amps, raw)
    aligned = sim_state.amps * (overlap / abs(overlap)) if abs(overlap) > 0 else sim_state.amps
    max_amp_delta = float(np.max(np.abs(raw - aligned)))

    norm = np.linalg.norm(raw)
    if norm > 0:
        renormalized = raw / norm
        renorm_delta = float(np.max(np.abs(renormalized - aligned)))
        fidelity_after_renorm = float(min(1.0, abs(np.vdot(sim_state.amps, renormalized)) ** 2))
    else:
        renorm_delta = np.inf
        fidelity_after_renorm = 0.0

    if max_amp_delta <= MATCH_ATOL:
        verdict = MatchVerdict.MATCH
    elif renorm_delta <= MATCH_ATOL:
        verdict = MatchVerdict.MATCH_UP_TO_NORMALIZATION
    else:
        verdict = MatchVerdict.MISMATCH
        logger.warning(
            "%s: simulated state differs from the printed one (max delta %.3g, fidelity %.6g)",
            closed_form.label, max_amp_delta, fidelity_after_renorm)
    return DiscrepancyReport(closed_form.label, max_amp_delta, fidelity_after_renorm, verdict)


def simulated_honest_snapshots(secret):
    """psi0 ... psi8 of an honest run, produced by the circuit."""
    psi3, snapshots = encode_with_snapshots(secret)
    psi4 = party_hadamards(psi3)
    _, tail = reconstruct(psi4)
    return {**snapshots, "psi4": psi4, **tail}


def _reduced_simulated_states(secret):
    psi3 = encode_with_snapshots(secret)[0]
    computational = SingleQubitBasis.computational()
    _, after_bob = project(psi3, Party.BOB.qubit, computational, 0)
    _, after_charlie = project(psi3, Party.CHARLIE.qubit, computational, 0)
    _, after_both = project(after_bob, Party.CHARLIE.qubit, computational, 0)
    return {
        "psi3_AC": condition(after_bob, {Party.BOB.qubit: 0}),
        "psi3_AB": condition(after_charlie, {Party.CHARLIE.qubit: 0}),
        "psi3_A": condition(after_both, {Party.BOB.qubit: 0, Party.CHARLIE.qubit: 0}),
    }


def comparison_pairs(secret, basis=None):
    """
    Every printed state with its simulated counterpart.

    Covers the honest snapshots, the states left after cheaters observe
    |0>, the four single-cheater final states, the final state when both
    observe |0>, and Bob's |gamma> branch for ``basis`` (the {|+>, |->}
    basis by default) when that branch can occur.

    Returns
    -------
    list of (PureState, ClosedFormState)
    """
    pairs = []
    simulated = simulated_honest_snapshots(secret)
    for closed in honest_states(secret):
        pairs.append((simulated[closed.label], closed))

    reduced = _reduced_simulated_states(secret)
    for closed in post_measurement_states(secret):
        pairs.append((reduced[closed.label], closed))

    for party in (Party.BOB, Party.CHARLIE):
        cheat = CheatModel.computational(party)
        for outcome in (0, 1):
            final = branch_final_state(secret, cheat, {party.label: outcome})
            pairs.append((final, cheat_final_state(secret, party, outcome)))

    both = branch_final_state(secret, CheatModel.computational(Party.BOB, Party.CHARLIE), {"bob": 0, "charlie": 0})
    pairs.append((both, both_cheat_final_state(secret)))

    basis = basis if basis is not None else SingleQubitBasis.hadamard()
    gamma_branch = branch_final_state(secret, CheatModel(bob=basis), {"bob": 0})
    if gamma_branch is not None:
        pairs.append((gamma_branch, arbitrary_basis_final_state(secret, basis).printed))
    return pairs


def comparison_table(secret, basis=None):
    """
    ``compare`` over every pair of ``comparison_pairs``.

    Returns
    -------
    list of DiscrepancyReport
    """
    return [compare(sim_state, closed) for sim_state, closed in comparison_pairs(secret, basis)]
