import numpy as np
import pytest
from numpy.testing import assert_allclose

from resqss.exceptions import NormalizationError
from resqss.oracle import (
    ANCILLA_OUTCOMES,
    MatchVerdict,
    ClosedFormState,
    arbitrary_basis_final_state,
    both_cheat_final_state,
    branch_final_state,
    cheat_final_state,
    claimed_distribution,
    compare,
    comparison_table,
    exact_outcome_distribution,
    half_claim_deviation,
    honest_states,
    shifted_coefficients,
)
from resqss.protocol import CheatModel, Party, Secret
from resqss.statevec import SingleQubitBasis, basis_from_angle, make_state


def _verdicts(secret, basis=None):
    return {report.label: report.verdict for report in comparison_table(secret, basis)}


def test_honest_states_match_the_circuit(random_secrets):
    for secret in random_secrets:
        verdicts = _verdicts(secret)
        for label in (f"psi{i}" for i in range(9)):
            assert verdicts[label] is MatchVerdict.MATCH


@pytest.mark.parametrize("label", ["psi3_AC", "psi3_AB", "psi3_A", "bob_0", "bob_1", "charlie_0", "charlie_1"])
def test_cheat_states_match_the_circuit(secret, label):
    assert _verdicts(secret)[label] is MatchVerdict.MATCH


def test_printed_state_for_both_cheaters_is_not_unit_norm(secret):
    printed = both_cheat_final_state(secret)
    assert not printed.normalized
    assert printed.norm == pytest.approx(np.sqrt(2.0))
    assert _verdicts(secret)["both_00"] is MatchVerdict.MATCH_UP_TO_NORMALIZATION


def test_psi3_for_computational_secret():
    psi3 = honest_states(Secret(1.0, 0.0))[3]
    expected = np.zeros(8)
    expected[[0b000, 0b011]] = 0.5
    expected[[0b110, 0b101]] = -0.5
    assert_allclose(psi3.amplitudes, expected)


def test_psi8_equals_psi0():
    states = honest_states(Secret(1 / np.sqrt(2), 1 / np.sqrt(2)))
    assert_allclose(states[8].amplitudes, states[0].amplitudes)


@pytest.mark.parametrize("who", ["alice", "bob"])
def test_cheat_final_state_validation(secret, who):
    with pytest.raises(ValueError):
        cheat_final_state(secret, who, 2 if who == "bob" else 0)


@pytest.mark.parametrize(
    "degrees, label",
    [(0.0, "bob_0"), (90.0, "bob_1")],
)
def test_arbitrary_basis_reduces_to_computational(random_secrets, degrees, label):
    outcome = 0 if label == "bob_0" else 1
    for secret in random_secrets:
        branch = arbitrary_basis_final_state(secret, basis_from_angle(degrees))
        expected = cheat_final_state(secret, Party.BOB, outcome)
        assert np.max(np.abs(branch.printed.amplitudes - expected.amplitudes)) <= 1e-9


def test_shifted_coefficients_for_hadamard_basis(secret):
    alpha_prime, beta_prime = shifted_coefficients(secret, SingleQubitBasis.hadamard())
    assert alpha_prime == pytest.approx(-0.2)
    assert beta_prime == pytest.approx(0.2)


def test_hadamard_branch_is_off_by_normalization(secret):
    branch = arbitrary_basis_final_state(secret, SingleQubitBasis.hadamard())
    assert not branch.printed.normalized
    assert branch.normalized.normalized
    assert _verdicts(secret)["bob_gamma"] is MatchVerdict.MATCH_UP_TO_NORMALIZATION


def test_vanishing_branch_is_left_out():
    # with alpha = beta Bob never observes |+>
    secret = Secret(1 / np.sqrt(2), 1 / np.sqrt(2))
    assert branch_final_state(secret, CheatModel(bob=SingleQubitBasis.hadamard()), {"bob": 0}) is None
    assert "bob_gamma" not in _verdicts(secret)


def test_compare_detects_mismatch():
    wrong = ClosedFormState("wrong", [0, 1], normalized=True)
    report = compare(make_state(1, 0), wrong)
    assert report.verdict is MatchVerdict.MISMATCH
    assert report.fidelity_after_renorm == 0.0


def test_closed_form_flag_is_checked():
    with pytest.raises(NormalizationError):
        ClosedFormState("bad", [1, 1], normalized=True)


def test_honest_distribution(random_secrets):
    for secret in random_secrets:
        exact = exact_outcome_distribution(secret, CheatModel.honest())
        assert exact.support["11"] == pytest.approx(1.0, abs=1e-10)
        assert exact.expected_fidelity_after == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize(
    "parties, expected",
    [
        ((Party.BOB,), {"00": 0.0, "01": 0.5, "10": 0.0, "11": 0.5}),
        ((Party.CHARLIE,), {"00": 0.0, "01": 0.0, "10": 0.5, "11": 0.5}),
        ((Party.BOB, Party.CHARLIE), {"00": 0.25, "01": 0.25, "10": 0.25, "11": 0.25}),
    ],
)
def test_computational_cheat_distribution(random_secrets, parties, expected):
    cheat = CheatModel.computational(*parties)
    for secret in random_secrets:
        exact = exact_outcome_distribution(secret, cheat)
        for outcome in ANCILLA_OUTCOMES:
            assert exact.support[outcome] == pytest.approx(expected[outcome], abs=1e-10)
        assert exact.expected_fidelity_after == pytest.approx(1.0, abs=1e-10)
        assert half_claim_deviation(exact, cheat) <= 1e-10


def test_hadamard_cheat_distribution(secret):
    cheat = CheatModel(bob=SingleQubitBasis.hadamard())
    exact = exact_outcome_distribution(secret, cheat)
    assert exact.support["11"] == pytest.approx(1.0, abs=1e-10)
    assert exact.adversary_marginals["bob"][0] == pytest.approx(0.02)
    assert exact.adversary_marginals["bob"][1] == pytest.approx(0.98)
    assert exact.expected_fidelity_after == pytest.approx(0.9608)
    assert half_claim_deviation(exact, cheat) == pytest.approx(0.5)


def test_claimed_distribution():
    assert claimed_distribution(CheatModel.honest())["11"] == 1.0
    assert claimed_distribution(CheatModel.computational(Party.CHARLIE)) == {
        "00": 0.0, "01": 0.0, "10": 0.5, "11": 0.5}


def test_branch_rows_carry_weights(secret):
    exact = exact_outcome_distribution(secret, CheatModel.computational(Party.BOB, Party.CHARLIE))
    assert len(exact.branches) == 4
    assert sum(row.weight for row in exact.branches) == pytest.approx(1.0)


@pytest.mark.parametrize(
    "parties",
    [(Party.BOB,), (Party.CHARLIE,), (Party.BOB, Party.CHARLIE)],
)
def test_distribution_sums_to_one_over_a_basis_grid(secret, parties):
    for degrees in np.linspace(0.0, 180.0, 37):
        basis = basis_from_angle(degrees)
        cheat = CheatModel(**{party.label: basis for party in parties})
        exact = exact_outcome_distribution(secret, cheat)
        assert sum(exact.support.values()) == pytest.approx(1.0, abs=1e-12)
        assert all(p >= 0.0 for p in exact.support.values())
        for marginal in exact.adversary_marginals.values():
            assert sum(marginal.values()) == pytest.approx(1.0, abs=1e-12)


def test_distribution_sums_to_one_over_complex_bases(rng, secret):
    for _ in range(25):
        a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
        norm = np.sqrt(abs(a) ** 2 + abs(b) ** 2)
        cheat = CheatModel(bob=SingleQubitBasis(a / norm, b / norm))
        assert sum(exact_outcome_distribution(secret, cheat).support.values()) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize(
    "parties, impossible",
    [((Party.BOB,), ("00", "10")), ((Party.CHARLIE,), ("00", "01"))],
)
def test_impossible_outcomes_are_exactly_zero(random_secrets, parties, impossible):
    cheat = CheatModel.computational(*parties)
    for secret in random_secrets:
        exact = exact_outcome_distribution(secret, cheat)
        for outcome in impossible:
            assert exact.support[outcome] == 0.0
