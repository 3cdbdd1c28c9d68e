import json

import pandas as pd
import pytest

from resqss.cli import RunConfig, cmd_run, main
from resqss.cli.config import parse_cheat, parse_error, parse_secret, sweep_angles
from resqss.cli.main import EXIT_IO, EXIT_OK, EXIT_USAGE
from resqss.cli.report import clean, rational
from resqss.protocol import CheatModel, Party
from resqss.shor import ErrorKind

SWEEP_COLUMNS = [
    "angle_deg", "p00", "p01", "p10", "p11", "fidelity_after_correction", "half_claim_max_deviation",
]


def _run_json(tmp_path, name, *args):
    out = tmp_path / name
    assert main([*args, "--format", "json", "--out", str(out)]) == EXIT_OK
    return json.loads(out.read_text())


def test_honest_run(tmp_path):
    report = _run_json(tmp_path, "honest.json", "run", "--secret", "0.6,0,0.8,0", "--trials", "1000")
    assert report["verdict_counts"]["NoCheat"] == 1000
    assert report["mean_fidelity_after_correction"] == 1.0
    assert report["exact_distribution"]["11"] == {"probability": 1.0, "rational": "1"}


def test_bob_run_matches_the_exact_split(tmp_path):
    report = _run_json(tmp_path, "bob.json", "run", "--cheat", "bob", "--trials", "4000", "--seed", "9")
    assert report["exact_distribution"]["01"]["rational"] == "1/2"
    counts = report["empirical_distribution"]
    assert counts["01"]["count"] + counts["11"]["count"] == 4000
    assert abs(counts["01"]["frequency"] - 0.5) <= 4 * (0.25 / 4000) ** 0.5
    assert report["mean_fidelity_after_correction"] == 1.0


def test_both_cheat_quarters(tmp_path):
    report = _run_json(tmp_path, "both.json", "run", "--cheat", "both", "--trials", "100")
    assert {entry["rational"] for entry in report["exact_distribution"].values()} == {"1/4"}


def test_run_is_deterministic(tmp_path):
    args = ("run", "--cheat", "both", "--bob-angle", "30", "--trials", "500", "--seed", "123")
    first = _run_json(tmp_path, "a.json", *args)
    second = _run_json(tmp_path, "b.json", *args)
    first.pop("wall_time_ms")
    second.pop("wall_time_ms")
    assert json.dumps(first) == json.dumps(second)


def test_json_and_csv_agree(tmp_path):
    args = ["run", "--cheat", "charlie", "--trials", "300", "--seed", "4"]
    report = _run_json(tmp_path, "c.json", *args)
    out = tmp_path / "c.csv"
    assert main([*args, "--format", "csv", "--out", str(out)]) == EXIT_OK
    frame = pd.read_csv(out, dtype={"outcome": str}, float_precision="round_trip")
    for row in frame.to_dict("records"):
        assert row["exact_probability"] == report["exact_distribution"][row["outcome"]]["probability"]
        assert row["count"] == report["empirical_distribution"][row["outcome"]]["count"]
        assert row["mean_fidelity_after_correction"] == report["mean_fidelity_after_correction"]


def test_oracle_table(capsys):
    assert main(["oracle", "--secret", "0.6,0,0.8,0"]) == EXIT_OK
    printed = capsys.readouterr().out
    assert "psi8" in printed
    assert "mismatch" not in printed


def test_oracle_json(tmp_path):
    report = _run_json(tmp_path, "oracle.json", "oracle", "--secret", "1,0,0,0")
    rows = {row["label"]: row for row in report["rows"]}
    assert rows["psi3"]["verdict"] == "match"
    assert "|011>" in rows["psi3"]["closed_form"]
    assert "|011>" in rows["psi3"]["circuit"]
    assert rows["both_00"]["verdict"] == "match-up-to-normalization"


def test_sweep_csv(tmp_path):
    out = tmp_path / "sweep.csv"
    code = main(["sweep", "--start", "0", "--stop", "90", "--step", "45", "--format", "csv", "--out", str(out)])
    assert code == EXIT_OK
    frame = pd.read_csv(out, float_precision="round_trip")
    assert list(frame.columns) == SWEEP_COLUMNS
    assert frame["angle_deg"].tolist() == [0.0, 45.0, 90.0]
    first, middle, last = frame.to_dict("records")
    assert first["p01"] == pytest.approx(0.5) and first["p11"] == pytest.approx(0.5)
    assert first["fidelity_after_correction"] == pytest.approx(1.0)
    assert last["p01"] == pytest.approx(0.5)
    assert middle["p11"] == pytest.approx(1.0)
    assert middle["fidelity_after_correction"] == pytest.approx(0.9608)
    assert middle["half_claim_max_deviation"] == pytest.approx(0.5)


def test_shor_exhaustive(tmp_path):
    report = _run_json(tmp_path, "shor.json", "shor", "--error", "exhaustive", "--random-unitaries", "5")
    assert report["summary"]["recovered"] == "68/68"
    assert all(row["recovered"] for row in report["rows"])


def test_shor_single_error(tmp_path):
    report = _run_json(tmp_path, "x4.json", "shor", "--error", "X:4")
    (row,) = report["rows"]
    assert row["error"] == "X:4"
    assert row["correction"] == "X:4"
    assert row["fidelity_after"] == 1.0


def test_shor_no_error(tmp_path):
    report = _run_json(tmp_path, "clean.json", "shor")
    (row,) = report["rows"]
    assert row["syndrome"] == "000000/00"
    assert row["fidelity_after"] == 1.0


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--cheat", "eve"],
        ["run", "--trials", "0"],
        ["run", "--secret", "1,2"],
        ["run", "--secret", "0,0,0,0"],
        ["run", "--seed", "-1"],
        ["sweep", "--start", "10", "--stop", "0"],
        ["sweep", "--step", "0"],
        ["shor", "--error", "X:9"],
        ["shor", "--error", "bogus"],
        ["launch"],
        [],
    ],
)
def test_invalid_flags_never_succeed(argv):
    assert main(argv) == EXIT_USAGE


def test_unwritable_output(tmp_path):
    out = tmp_path / "missing" / "report.json"
    assert main(["oracle", "--format", "json", "--out", str(out)]) == EXIT_IO


def test_secret_parsing_warns_on_renormalization(caplog):
    secret = parse_secret("3,0,4,0")
    assert secret.alpha == pytest.approx(0.6)
    assert "renormalized" in caplog.text


def test_parse_cheat():
    cheat = parse_cheat("both", angle=45.0, charlie_angle=0.0)
    assert not cheat.bob.is_computational()
    assert cheat.charlie.is_computational()
    assert parse_cheat("none").is_honest


def test_parse_error():
    assert parse_error("none") is None
    assert parse_error("exhaustive") == "exhaustive"
    assert parse_error("Y:2").kind is ErrorKind.PAULI_Y
    measured = parse_error("measure:3:45", seed=1)
    assert measured.kind is ErrorKind.MEASURE
    assert 0.0 <= measured.draw < 1.0


def test_sweep_angles_include_stop():
    assert sweep_angles(0, 90, 30) == [0.0, 30.0, 60.0, 90.0]
    assert sweep_angles(0, 10, 4) == [0.0, 4.0, 8.0]


def test_rational_annotations():
    assert rational(0.25) == "1/4"
    assert rational(0.5 + 1e-13) == "1/2"
    assert rational(0.9608) is None
    assert clean({"x": 1 / 3}) == {"x": 0.333333333333}


def test_cmd_run_counts_sum_to_trials(secret):
    config = RunConfig(secret, CheatModel.computational(Party.BOB), trials=250, seed=1)
    report = cmd_run(config)
    assert sum(report.empirical_distribution.values()) == 250
    assert sum(report.exact_distribution.values()) == pytest.approx(1.0, abs=1e-10)


def test_run_report_fields(tmp_path):
    report = _run_json(tmp_path, "fields.json", "run", "--cheat", "bob", "--trials", "10")
    assert list(report) == [
        "config",
        "exact_distribution",
        "empirical_distribution",
        "verdict_counts",
        "mean_fidelity_before_correction",
        "mean_fidelity_after_correction",
        "half_claim_max_deviation",
        "paper_comparison",
        "wall_time_ms",
    ]
    labels = {row["label"] for row in report["paper_comparison"]}
    assert {"psi3", "bob_0", "both_00"} <= labels


def test_impossible_outcomes_report_zero(tmp_path):
    report = _run_json(tmp_path, "zero.json", "run", "--cheat", "charlie", "--trials", "300", "--seed", "4")
    for outcome in ("00", "01"):
        assert report["exact_distribution"][outcome] == {"probability": 0.0, "rational": "0"}
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--who", "charlie", "--step", "30", "--format", "csv", "--out", str(out)]) == EXIT_OK
    frame = pd.read_csv(out, float_precision="round_trip")
    assert (frame["p00"] == 0.0).all()
