import logging
import time

import numpy as np
from tqdm import tqdm

from ..oracle import (
    ANCILLA_OUTCOMES,
    comparison_pairs,
    compare,
    comparison_table,
    exact_outcome_distribution,
    half_claim_deviation,
)
from ..protocol import QSSProtocol, Verdict, trial_seed
from ..shor import exhaustive_sweep, random_unitary_sweep, run_error_trial
from ..statevec import basis_from_angle, format_ket
from .config import describe_secret, sweep_cheat
from .report import Report, TabularReport

logger = logging.getLogger(__name__)

SHOR_UNITARY_STREAM = 1


def _elapsed_ms(start):
    return (time.perf_counter() - start) * 1000.0


def _sampled_fidelities(protocol, trials, seed, progress, desc):
    """Run ``trials`` seeded executions; return outcome counts and summed fidelities."""
    counts = dict.fromkeys(ANCILLA_OUTCOMES, 0)
    before = after = 0.0
    for trial in tqdm(range(trials), desc=desc, disable=not progress):
        transcript = protocol.run(trial_seed(seed, trial))
        counts[transcript.ancilla_outcome] += 1
        before += transcript.fidelity_before_correction
        after += transcript.fidelity_recovered
    return counts, before, after


def cmd_run(config):
    """
    ``config.trials`` seeded runs of the protocol next to the exact
    enumeration of the same cheat model.

    Returns
    -------
    Report
    """
    start = time.perf_counter()
    protocol = QSSProtocol(config.secret, config.cheat)
    counts, before, after = _sampled_fidelities(protocol, config.trials, config.seed, config.progress, "trials")
    exact = exact_outcome_distribution(config.secret, config.cheat)
    verdicts = {verdict.label: counts[verdict.value] for verdict in Verdict}
    logger.debug("Sampled outcome counts %s", counts)
    return Report(
        config=config.as_dict(),
        exact_distribution=exact.support,
        empirical_distribution=counts,
        verdict_counts=verdicts,
        mean_fidelity_before_correction=before / config.trials,
        mean_fidelity_after_correction=after / config.trials,
        half_claim_max_deviation=half_claim_deviation(exact, config.cheat),
        paper_comparison=comparison_table(config.secret),
        wall_time_ms=_elapsed_ms(start),
    )


def cmd_oracle(secret, basis_angle=None):
    """Circuit and closed-form kets of every tabulated state, with their match verdicts."""
    start = time.perf_counter()
    basis = None if basis_angle is None else basis_from_angle(basis_angle)
    rows = []
    for sim_state, closed in comparison_pairs(secret, basis):
        report = compare(sim_state, closed)
        rows.append({
            "label": closed.label,
            "circuit": format_ket(sim_state),
            "closed_form": format_ket(closed.amplitudes),
            **{key: value for key, value in report.as_dict().items() if key != "label"},
        })
    verdicts = [row["verdict"] for row in rows]
    summary = {verdict: verdicts.count(verdict) for verdict in sorted(set(verdicts))}
    config = {"secret": describe_secret(secret), "basis_angle": basis_angle}
    return TabularReport("oracle", config, rows, summary, _elapsed_ms(start))


def cmd_sweep(secret, angles, who="bob", trials=0, seed=0, progress=False):
    """
    Exact ancilla probabilities over a grid of real measurement bases.

    The fidelity column is the exact expected post-correction fidelity when
    ``trials`` is 0, otherwise the mean over ``trials`` seeded runs per angle.
    """
    start = time.perf_counter()
    rows = []
    for angle in tqdm(angles, desc="sweep", disable=not progress):
        cheat = sweep_cheat(who, basis_from_angle(angle))
        exact = exact_outcome_distribution(secret, cheat)
        if trials:
            _, _, after = _sampled_fidelities(QSSProtocol(secret, cheat), trials, seed, False, "trials")
            fidelity_after = after / trials
        else:
            fidelity_after = exact.expected_fidelity_after
        rows.append({
            "angle_deg": angle,
            **{f"p{outcome}": exact.support[outcome] for outcome in ANCILLA_OUTCOMES},
            "fidelity_after_correction": fidelity_after,
            "half_claim_max_deviation": half_claim_deviation(exact, cheat),
        })
    config = {"secret": describe_secret(secret), "who": who, "trials": trials, "seed": seed}
    return TabularReport("sweep", config, rows, wall_time_ms=_elapsed_ms(start))


def cmd_shor(secret, error=None, seed=0, random_unitaries=0, progress=False):
    """
    Inject, detect and recover on the nine-qubit code.

    ``error`` is an ErrorSpec, "exhaustive" or None for a clean codeword.
    ``random_unitaries`` Haar-random unitary errors on seeded positions are
    appended.
    """
    start = time.perf_counter()
    if error == "exhaustive":
        trials = exhaustive_sweep(secret, progress)
    else:
        trials = [run_error_trial(secret, error)]
    if random_unitaries:
        rng = np.random.Generator(np.random.Philox(key=trial_seed(seed, SHOR_UNITARY_STREAM)))
        trials += random_unitary_sweep(secret, random_unitaries, rng, progress)
    rows = [trial.as_dict() for trial in trials]
    recovered = sum(trial.recovered for trial in trials)
    summary = {
        "recovered": f"{recovered}/{len(trials)}",
        "min_fidelity_after": min(trial.fidelity_after for trial in trials),
    }
    config = {
        "secret": describe_secret(secret),
        "error": error if error is None or isinstance(error, str) else error.describe(),
        "seed": seed,
        "random_unitaries": random_unitaries,
    }
    return TabularReport("shor", config, rows, summary, _elapsed_ms(start))
