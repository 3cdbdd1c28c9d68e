import logging
from dataclasses import dataclass, field
from typing import Dict, List

from ..exceptions import NormalizationError
from ..protocol import ANCILLA_QUBITS, encode, party_hadamards, reconstruct, corrective_phase, verdict_from_outcome
from ..statevec import ZERO_PROBABILITY, condition, fidelity, outcome_distribution, project

logger = logging.getLogger(__name__)

ANCILLA_OUTCOMES = ("00", "01", "10", "11")
SUM_ATOL = 1e-10


@dataclass(frozen=True)
class BranchWeight:
    """One adversary branch: what the cheaters saw, its Born weight and the ancilla distribution it leads to."""

    adversary_outcomes: Dict[str, int]
    weight: float
    ancilla: Dict[str, float]


@dataclass(frozen=True)
class ExactDistribution:
    """
    Ancilla distribution accumulated over every adversary branch.

    Parameters
    ----------
    support : dict of str -> float
        Probability of each of "00", "01", "10", "11".

    conditioning : str
        How the adversary branches were weighted.

    adversary_marginals : dict of str -> dict of int -> float
        Probability that each cheater observes each basis index.

    expected_fidelity_before : float
        Mean fidelity of Alice's qubit with the secret before correction.

    expected_fidelity_after : float
        The same after the verdict-driven correction.

    branches : list of BranchWeight
    """

    support: Dict[str, float]
    conditioning: str
    adversary_marginals: Dict[str, Dict[int, float]] = field(default_factory=dict)
    expected_fidelity_before: float = 1.0
    expected_fidelity_after: float = 1.0
    branches: List[BranchWeight] = field(default_factory=list)

    def __post_init__(self):
        total = sum(self.support.values())
        if abs(total - 1.0) > SUM_ATOL:
            raise NormalizationError(f"Ancilla distribution sums to {total!r}, not 1.")


def adversary_branches(secret, cheat):
    """
    Every adversary outcome combination with its exact weight and the
    collapsed shared state, enumerated on psi3 in the order Bob, Charlie.

    Zero-weight branches are dropped.

    Returns
    -------
    list of (dict, float, PureState)
    """
    branches = [({}, 1.0, encode(secret))]
    for party, basis in cheat.cheaters():
        extended = []
        for outcomes, weight, state in branches:
            for outcome in (0, 1):
                probability, post = project(state, party.qubit, basis, outcome)
                if post is None:
                    continue
                extended.append(({**outcomes, party.label: outcome}, weight * probability, post))
        branches = extended
    return branches


def branch_final_state(secret, cheat, outcomes):
    """
    psi8 of the branch in which the cheaters observed ``outcomes``
    (e.g. ``{"bob": 0}``), or None if that branch cannot occur.
    """
    for observed, _, state in adversary_branches(secret, cheat):
        if observed == dict(outcomes):
            return reconstruct(party_hadamards(state))[0]
    return None


def exact_outcome_distribution(secret, cheat):
    """
    Exact ancilla distribution without sampling.

    Each adversary branch is weighted by its Born probability on psi3,
    pushed through the parties' Hadamards and Alice's reconstruction, and
    its ancilla probabilities are accumulated. Alice's fidelity with the
    secret is averaged over the same tree, before and after correction.

    Returns
    -------
    ExactDistribution
    """
    support = dict.fromkeys(ANCILLA_OUTCOMES, 0.0)
    marginals = {party.label: {0: 0.0, 1: 0.0} for party, _ in cheat.cheaters()}
    fidelity_before = 0.0
    fidelity_after = 0.0
    rows = []
    for outcomes, weight, state in adversary_branches(secret, cheat):
        psi8 = reconstruct(party_hadamards(state))[0]
        ancilla = outcome_distribution(psi8, ANCILLA_QUBITS)
        for name, outcome in outcomes.items():
            marginals[name][outcome] += weight
        for label, probability in ancilla.items():
            support[label] += weight * probability
            if probability <= ZERO_PROBABILITY:
                continue
            before = condition(psi8, dict(zip(ANCILLA_QUBITS, map(int, label))))
            after = corrective_phase(before) if verdict_from_outcome(label).needs_correction else before
            fidelity_before += weight * probability * fidelity(before, secret.state)
            fidelity_after += weight * probability * fidelity(after, secret.state)
        rows.append(BranchWeight(outcomes, weight, ancilla))
        logger.debug("Branch %s weight %.12g ancilla %s", outcomes, weight, ancilla)

    # outcomes the circuit cannot produce are exactly zero, not round-off
    support = {label: (p if p > ZERO_PROBABILITY else 0.0) for label, p in support.items()}
    conditioning = (
        "no adversary branches" if cheat.is_honest
        else f"{cheat.describe()}; branches weighted by exact Born probabilities on psi3"
    )
    return ExactDistribution(support, conditioning, marginals, fidelity_before, fidelity_after, rows)


def claimed_distribution(cheat):
    """
    The ancilla distribution the protocol description asserts for a cheat
    model, regardless of basis: 11 when honest, an even split between 11 and
    the cheater's flag for one cheater, a quarter each for two.
    """
    flags = {"bob": "01", "charlie": "10"}
    cheaters = [party.label for party, _ in cheat.cheaters()]
    claim = dict.fromkeys(ANCILLA_OUTCOMES, 0.0)
    if not cheaters:
        claim["11"] = 1.0
    elif len(cheaters) == 1:
        claim["11"] = 0.5
        claim[flags[cheaters[0]]] = 0.5
    else:
        claim = dict.fromkeys(ANCILLA_OUTCOMES, 0.25)
    return claim


def half_claim_deviation(distribution, cheat):
    """
    Largest absolute gap between the exact numbers and the asserted ones:
    the ancilla probabilities of ``claimed_distribution`` and an even split
    of every cheater's own measurement outcomes.
    """
    claim = claimed_distribution(cheat)
    gaps = [abs(distribution.support[label] - claim[label]) for label in ANCILLA_OUTCOMES]
    for marginal in distribution.adversary_marginals.values():
        gaps.extend(abs(p - 0.5) for p in marginal.values())
    return float(max(gaps))
