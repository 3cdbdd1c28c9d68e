import functools
import logging
from dataclasses import dataclass
from typing import Optional

from tqdm import tqdm

from ..exceptions import UncorrectableSyndromeError
from ..protocol import Secret
from ..statevec import SingleQubitBasis, apply_matrix
from .codeword import N_PHYSICAL, ShorCodeword, logical_fidelity, shor_encode
from .errors import PAULI_MATRICES, ErrorSpec, inject_error, random_unitary_error
from .syndrome import Syndrome, measure_syndrome

logger = logging.getLogger(__name__)

RECOVERY_ATOL = 1e-10
MEASUREMENT_BASES = (("computational", 0.0), ("hadamard", 45.0))
# Each physical qubit of a codeword reads 0 or 1 with probability 1/2 in
# both bases, so these draws force the two outcomes in turn.
OUTCOME_DRAWS = (0.25, 0.75)


@functools.lru_cache(maxsize=None)
def syndrome_table():
    """
    Syndrome to correcting Pauli, found by brute force.

    Every single-qubit X, Y and Z is injected into a clean codeword and its
    syndrome recorded. The first Pauli seen for a syndrome wins, so a Z
    error anywhere in a block is corrected on the block's first qubit.

    Returns
    -------
    dict of Syndrome -> (str, int) or None
        Pauli name and qubit, None for the trivial syndrome.
    """
    clean = shor_encode(Secret(1.0, 0.0))
    table = {Syndrome(): None}
    for name in PAULI_MATRICES:
        for qubit in range(N_PHYSICAL):
            syndrome, _ = measure_syndrome(inject_error(clean, ErrorSpec.pauli(name, qubit)))
            table.setdefault(syndrome, (name, qubit))
    logger.debug("Syndrome table holds %d entries", len(table))
    return table


def recover(cw, syn):
    """
    Apply the Pauli correction the syndrome calls for.

    Raises
    ------
    UncorrectableSyndromeError
        If no single-qubit error produces ``syn``.
    """
    table = syndrome_table()
    if syn not in table:
        raise UncorrectableSyndromeError(syn)
    correction = table[syn]
    if correction is None:
        return cw
    name, qubit = correction
    return ShorCodeword(apply_matrix(cw.state, PAULI_MATRICES[name], (qubit,)), cw.logical, cw.measured_outcome)


@dataclass(frozen=True)
class ShorTrial:
    """One inject, detect and recover cycle."""

    error: str
    syndrome: Syndrome
    correction: Optional[str]
    measured_outcome: Optional[int]
    fidelity_before: float
    fidelity_after: float

    @property
    def recovered(self):
        return self.fidelity_after >= 1.0 - RECOVERY_ATOL

    def as_dict(self):
        return {
            "error": self.error,
            "syndrome": str(self.syndrome),
            "correction": self.correction or "",
            "measured_outcome": "" if self.measured_outcome is None else self.measured_outcome,
            "fidelity_before": self.fidelity_before,
            "fidelity_after": self.fidelity_after,
            "recovered": self.recovered,
        }


def run_error_trial(secret, err=None, syndrome_draws=None):
    """
    Encode ``secret``, inject ``err`` (none when omitted), measure the
    syndrome, correct, and compare with the clean encoding.

    Returns
    -------
    ShorTrial
    """
    cw = shor_encode(secret)
    if err is not None:
        cw = inject_error(cw, err)
    fidelity_before = logical_fidelity(cw, secret)
    syndrome, collapsed = measure_syndrome(cw, syndrome_draws)
    correction = syndrome_table().get(syndrome)
    fixed = recover(collapsed, syndrome)
    trial = ShorTrial(
        error="none" if err is None else err.describe(),
        syndrome=syndrome,
        correction=None if correction is None else f"{correction[0]}:{correction[1]}",
        measured_outcome=fixed.measured_outcome,
        fidelity_before=fidelity_before,
        fidelity_after=logical_fidelity(fixed, secret),
    )
    if not trial.recovered:
        logger.warning("%s recovered only to fidelity %.12g", trial.error, trial.fidelity_after)
    return trial


def exhaustive_errors():
    """All 27 single-qubit Paulis, then both outcomes of a computational and a {|+>, |->} measurement on every qubit."""
    errors = [ErrorSpec.pauli(name, qubit) for name in PAULI_MATRICES for qubit in range(N_PHYSICAL)]
    for name, angle in MEASUREMENT_BASES:
        basis = getattr(SingleQubitBasis, name)()
        for qubit in range(N_PHYSICAL):
            errors.extend(ErrorSpec.measurement(basis, qubit, draw, angle) for draw in OUTCOME_DRAWS)
    return errors


def exhaustive_sweep(secret, progress=False):
    """
    Run ``run_error_trial`` over ``exhaustive_errors``.

    Returns
    -------
    list of ShorTrial
    """
    errors = exhaustive_errors()
    return [run_error_trial(secret, err) for err in tqdm(errors, desc="shor", disable=not progress)]


def random_unitary_sweep(secret, n_errors, rng, progress=False):
    """``n_errors`` Haar-random unitaries, each on a qubit drawn uniformly from ``rng``."""
    trials = []
    for _ in tqdm(range(n_errors), desc="unitaries", disable=not progress):
        qubit = int(rng.integers(N_PHYSICAL))
        trials.append(run_error_trial(secret, random_unitary_error(qubit, rng)))
    return trials
