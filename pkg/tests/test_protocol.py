import numpy as np
import pytest
from numpy.testing import assert_allclose

from resqss.exceptions import NormalizationError
from resqss.protocol import (
    CheatModel,
    Party,
    QSSProtocol,
    Secret,
    Verdict,
    apply_cheat,
    encode,
    party_hadamards,
    reconstruct,
    run_protocol,
    trial_seed,
    verdict_from_outcome,
)
from resqss.protocol.qss import TrialStream
from resqss.statevec import SingleQubitBasis, basis_from_angle, make_state


def test_secret_validation():
    with pytest.raises(NormalizationError):
        Secret(1.0, 1.0)
    secret, deviation = Secret.normalized(3.0, 4.0)
    assert secret.alpha == pytest.approx(0.6)
    assert deviation == pytest.approx(4.0)


def test_secret_from_polar():
    secret = Secret.from_polar(np.pi / 2, np.pi)
    assert secret.alpha == pytest.approx(1 / np.sqrt(2))
    assert secret.beta == pytest.approx(-1 / np.sqrt(2))


@pytest.mark.parametrize(
    "outcome, verdict",
    [("11", Verdict.NO_CHEAT), ("01", Verdict.BOB_CHEATED), ("10", Verdict.CHARLIE_CHEATED), ("00", Verdict.BOTH_CHEATED)],
)
def test_verdict_table(outcome, verdict):
    assert verdict_from_outcome(outcome) is verdict
    assert verdict.needs_correction == (outcome != "11")


@pytest.mark.parametrize("outcome", ["", "2", "111", "ab"])
def test_verdict_rejects_malformed(outcome):
    with pytest.raises(ValueError):
        verdict_from_outcome(outcome)


def test_encode_computational_secret():
    psi3 = encode(Secret(1.0, 0.0))
    expected = np.zeros(8)
    expected[[0b000, 0b011]] = 0.5
    expected[[0b110, 0b101]] = -0.5
    assert_allclose(psi3.amps, expected, atol=1e-12)


def test_honest_circuit_returns_dealer_input(random_secrets):
    for secret in random_secrets:
        psi8, snapshots = reconstruct(party_hadamards(encode(secret)))
        assert set(snapshots) == {"psi5", "psi6", "psi7", "psi8"}
        assert_allclose(psi8.amps[[0b011, 0b111]], [secret.alpha, secret.beta], atol=1e-10)


def test_honest_runs(many_secrets):
    for seed, secret in enumerate(many_secrets):
        transcript = run_protocol(secret, CheatModel.honest(), seed)
        assert transcript.ancilla_outcome == "11"
        assert transcript.verdict is Verdict.NO_CHEAT
        assert not transcript.correction_applied
        assert transcript.fidelity_recovered == pytest.approx(1.0, abs=1e-10)
        assert transcript.adversary_outcomes == {}
        assert set(transcript.snapshots) == {f"psi{i}" for i in range(9)}


@pytest.mark.parametrize(
    "party, flagged, verdict",
    [(Party.BOB, "01", Verdict.BOB_CHEATED), (Party.CHARLIE, "10", Verdict.CHARLIE_CHEATED)],
)
def test_single_cheater_recovers_in_both_verdicts(secret, party, flagged, verdict):
    protocol = QSSProtocol(secret, CheatModel.computational(party))
    verdicts = set()
    for trial in range(200):
        transcript = protocol.run(trial_seed(7, trial))
        assert transcript.adversary_outcomes[party.label] in (0, 1)
        assert transcript.ancilla_outcome in ("11", flagged)
        assert transcript.correction_applied == (transcript.ancilla_outcome == flagged)
        assert transcript.fidelity_recovered == pytest.approx(1.0, abs=1e-10)
        verdicts.add(transcript.verdict)
    assert verdicts == {Verdict.NO_CHEAT, verdict}


def test_both_cheat_recovers_every_branch(secret):
    protocol = QSSProtocol(secret, CheatModel.computational(Party.BOB, Party.CHARLIE))
    seen = set()
    for trial in range(400):
        transcript = protocol.run(trial_seed(3, trial))
        seen.add(transcript.verdict)
        assert transcript.fidelity_recovered == pytest.approx(1.0, abs=1e-10)
    assert seen == set(Verdict)


@pytest.mark.parametrize(
    "parties, expected",
    [
        ((Party.BOB,), {"00": 0.0, "01": 0.5, "10": 0.0, "11": 0.5}),
        ((Party.CHARLIE,), {"00": 0.0, "01": 0.0, "10": 0.5, "11": 0.5}),
        ((Party.BOB, Party.CHARLIE), {"00": 0.25, "01": 0.25, "10": 0.25, "11": 0.25}),
    ],
)
def test_frequencies_within_four_sigma(secret, parties, expected):
    trials = 100_000
    protocol = QSSProtocol(secret, CheatModel.computational(*parties))
    counts = dict.fromkeys(expected, 0)
    for t in range(trials):
        counts[protocol.run(trial_seed(11, t)).ancilla_outcome] += 1
    for outcome, p in expected.items():
        if p == 0.0:
            assert counts[outcome] == 0
        else:
            sigma = np.sqrt(p * (1 - p) / trials)
            assert abs(counts[outcome] / trials - p) <= 4 * sigma


def test_bob_cheat_over_many_secrets(many_secrets):
    for seed, secret in enumerate(many_secrets):
        protocol = QSSProtocol(secret, CheatModel.computational(Party.BOB))
        for trial in range(20):
            transcript = protocol.run(trial_seed(seed, trial))
            assert transcript.ancilla_outcome in ("11", "01")
            assert transcript.fidelity_recovered == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("rng_seed", [0, 7, trial_seed(3, 5), trial_seed(2 ** 64 - 1, 2 ** 64 - 1)])
def test_trial_stream_matches_a_fresh_philox(rng_seed):
    stream = TrialStream()
    stream.draws(12345)
    fresh = np.random.Generator(np.random.Philox(key=rng_seed)).random(3)
    assert_allclose(stream.draws(rng_seed), fresh, rtol=0, atol=0)


def test_trial_stream_rejects_wide_keys():
    with pytest.raises(ValueError):
        TrialStream().draws(2 ** 128)


@pytest.mark.parametrize(
    "cheat",
    [
        CheatModel.computational(Party.BOB),
        CheatModel.computational(Party.CHARLIE),
        CheatModel(bob=basis_from_angle(30.0), charlie=basis_from_angle(70.0)),
    ],
)
def test_run_collapses_like_apply_cheat(secret, cheat):
    protocol = QSSProtocol(secret, cheat)
    for trial in range(50):
        rng_seed = trial_seed(8, trial)
        draws = TrialStream().draws(rng_seed)
        state, outcomes = apply_cheat(encode(secret), cheat, [draws[party.qubit - 1] for party, _ in cheat.cheaters()])
        transcript = protocol.run(rng_seed)
        assert transcript.adversary_outcomes == outcomes
        assert_allclose(transcript.snapshots["psi4"].amps, party_hadamards(state).amps, atol=1e-12)


def test_hadamard_cheat_is_never_flagged(secret):
    protocol = QSSProtocol(secret, CheatModel(bob=SingleQubitBasis.hadamard()))
    fidelities = set()
    for trial in range(200):
        transcript = protocol.run(trial_seed(5, trial))
        assert transcript.verdict is Verdict.NO_CHEAT
        fidelities.add(round(transcript.fidelity_recovered, 9))
    assert max(fidelities) < 1.0


def test_runs_are_deterministic(secret):
    cheat = CheatModel(bob=basis_from_angle(30.0), charlie=basis_from_angle(60.0))
    first = [run_protocol(secret, cheat, trial_seed(42, t)) for t in range(50)]
    second = [QSSProtocol(secret, cheat).run(trial_seed(42, t)) for t in range(50)]
    for a, b in zip(first, second):
        assert a.ancilla_outcome == b.ancilla_outcome
        assert a.adversary_outcomes == b.adversary_outcomes
        assert_allclose(a.recovered.amps, b.recovered.amps)


def test_trial_seed_layout():
    assert trial_seed(5, 0) == 5
    assert trial_seed(5, 2) == (2 << 64) | 5
    with pytest.raises(ValueError):
        trial_seed(-1, 0)
    with pytest.raises(ValueError):
        trial_seed(2 ** 64, 0)


def test_apply_cheat_needs_one_draw_per_cheater(secret):
    with pytest.raises(ValueError):
        apply_cheat(encode(secret), CheatModel.computational(Party.BOB), [0.1, 0.2])


def test_apply_cheat_leaves_observed_vector(secret):
    state, outcomes = apply_cheat(encode(secret), CheatModel.computational(Party.BOB), [0.0])
    assert outcomes == {"bob": 0}
    probabilities = state.probabilities().reshape(2, 2, 2)
    assert probabilities[:, 1, :].sum() == pytest.approx(0.0, abs=1e-14)


def test_cheat_model_order_and_labels():
    cheat = CheatModel.computational(Party.CHARLIE, Party.BOB)
    assert [party for party, _ in cheat.cheaters()] == [Party.BOB, Party.CHARLIE]
    assert CheatModel.honest().describe() == "honest"
    with pytest.raises(ValueError):
        CheatModel(bob="computational")


def test_party_hadamards_need_three_qubits():
    with pytest.raises(ValueError):
        party_hadamards(make_state(2, 0))
