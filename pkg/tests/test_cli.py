"""
Tests for game configs, the commands and the exit codes of run_cli.py.
"""

import json

import pandas as pd
import pytest

from cli.commands import cmd_calibrate, cmd_compare, cmd_simulate, cmd_stability, read_trajectory_csv
from cli.config import ConfigError, GameConfig, load_config
from cli.main import EXIT_OK, EXIT_RUNTIME, EXIT_VALIDATION, EXIT_VERIFY_FAILED, comma_list, main


def write_config(tmp_path, payload, name="game.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


SOLO = {"players": [{"id": 0}], "strategies": {"0": {"name": "solo_single_paper"}}, "horizon": 10}
PAIR = {
    "players": [{"id": 0}, {"id": 1}],
    "strategies": {"0": "pair_single_joint{partner=1}", "1": {"name": "pair_single_joint", "params": {"partner": 0}}},
    "alternative": {"0": "pair_two_joint_even_split{partner=1}", "1": "pair_two_joint_even_split{partner=0}"},
    "horizon": 4,
}


def test_config_accepts_both_strategy_forms(tmp_path):
    config = load_config(write_config(tmp_path, PAIR))
    assert config.strategy_profile().labels() == {0: "pair_single_joint{partner=1}", 1: "pair_single_joint{partner=0}"}
    assert config.strategy_profile(alternative=True)[0].name == "pair_two_joint_even_split"


def test_config_missing_strategy(tmp_path):
    payload = dict(PAIR, strategies={"0": "pair_single_joint{partner=1}"})
    with pytest.raises(ConfigError) as info:
        load_config(write_config(tmp_path, payload))
    assert "no strategy for players [1]" in str(info.value)


def test_config_unknown_partner(tmp_path):
    payload = dict(SOLO, strategies={"0": "pair_single_joint{partner=4}"})
    with pytest.raises(ConfigError):
        load_config(write_config(tmp_path, payload))


def test_config_reports_field_paths(tmp_path):
    payload = dict(SOLO, players=[{"id": 0, "initial_profile": [1, -2]}])
    with pytest.raises(ConfigError) as info:
        load_config(write_config(tmp_path, payload))
    assert "players.0.initial_profile" in str(info.value)


def test_config_without_alternative():
    config = GameConfig.model_validate(SOLO)
    with pytest.raises(ConfigError):
        config.strategy_profile(alternative=True)


def test_simulate_solo(tmp_path):
    out = tmp_path / "runs" / "solo"
    cmd_simulate(write_config(tmp_path, SOLO), out)
    frame = pd.read_csv(out.with_suffix(".csv"))
    assert list(frame.columns) == ["year", "player", "h", "papers_published", "new_citations"]
    assert frame["h"].tolist() == [1, 1, 2, 2, 2, 3, 3, 3, 3, 4]
    assert frame["new_citations"].tolist() == [1, 2, 2, 3, 3, 3, 4, 4, 4, 4]
    sidecar = json.loads(out.with_suffix(".json").read_text())
    assert sidecar["final_profiles"][0] == [1, 2, 2, 3, 3, 3, 4, 4, 4, 4]
    meta = json.loads((tmp_path / "runs" / "solo.meta.json").read_text())
    assert len(meta["config_sha256"]) == 64


def test_simulate_pair_round_trip(tmp_path):
    out = tmp_path / "pair"
    trajectory = cmd_simulate(write_config(tmp_path, PAIR), out)
    series = read_trajectory_csv(out.with_suffix(".csv"))
    assert series == {0: [1, 2, 2, 3], 1: [1, 2, 2, 3]}
    assert series[0] == trajectory.utility_series(0)


def test_simulate_is_byte_identical(tmp_path):
    config = write_config(tmp_path, PAIR)
    cmd_simulate(config, tmp_path / "a", horizon=30)
    cmd_simulate(config, tmp_path / "b", horizon=30)
    for suffix in (".csv", ".json"):
        assert (tmp_path / "a").with_suffix(suffix).read_bytes() == (tmp_path / "b").with_suffix(suffix).read_bytes()


def test_compare_against_alternative(tmp_path):
    report = cmd_compare(write_config(tmp_path, PAIR), horizon=1000)
    assert {v["verdict"] for v in report["verdicts"].values()} == {"FirstOvertakesSecond"}


def test_compare_identical_configs(tmp_path):
    config = write_config(tmp_path, SOLO)
    report = cmd_compare(config, config, horizon=100)
    assert report["verdicts"]["0"]["verdict"] == "Inconclusive"


def test_compare_solo_against_split(tmp_path):
    split = dict(SOLO, strategies={"0": "solo_split{k=2}"})
    report = cmd_compare(write_config(tmp_path, SOLO), write_config(tmp_path, split, "split.json"), horizon=1000)
    assert report["verdicts"]["0"]["verdict"] == "FirstOvertakesSecond"


def test_compare_roster_mismatch(tmp_path):
    with pytest.raises(ConfigError):
        cmd_compare(write_config(tmp_path, SOLO), write_config(tmp_path, PAIR, "pair.json"), horizon=20)


def test_stability_command(tmp_path):
    out = tmp_path / "report.json"
    payload = dict(PAIR, strategies=PAIR["alternative"])
    report = cmd_stability(write_config(tmp_path, payload), ["pair_single_joint"], k=2, horizon=500, out=out)
    assert report["label"] == "unstable"
    assert json.loads(out.read_text())["witness"]["coalition"] == [0, 1]


def test_calibrate_hand_corpus(tmp_path):
    corpus = tmp_path / "c.csv"
    corpus.write_text(
        "paper_id,year,citations,authors\n"
        "a1,2000,2,a\n"
        "b1,2000,6,b\n"
        "a2,2001,3,a\n"
        "b2,2001,5,b\n"
        "ab,2002,9,a;b\n",
        encoding="utf-8",
    )
    summary = cmd_calibrate(corpus, "csv", None, tmp_path / "out")
    single = pd.read_csv(tmp_path / "out" / "single_author.csv")
    assert single.to_dict("records") == [
        {"group_key": 0, "median": 4.0, "count": 2},
        {"group_key": 1, "median": 4.0, "count": 2},
    ]
    double = pd.read_csv(tmp_path / "out" / "two_author.csv")
    assert double.to_dict("records") == [{"group_key": 4, "median": 9.0, "count": 1}]
    assert json.loads((tmp_path / "out" / "correlations.json").read_text())["papers"] == 4
    assert summary["rejects"] == 0
    assert not (tmp_path / "out" / "rejects.csv").exists()
    records = pd.read_csv(tmp_path / "out" / "records.csv", dtype={"paper_id": str})
    assert list(records.columns) == ["paper_id", "year", "citations", "authors"]
    assert records["paper_id"].tolist() == ["a1", "b1", "a2", "b2", "ab"]
    assert records["authors"].iloc[-1] == "a;b"


def test_calibrate_empty_corpus(tmp_path):
    corpus = tmp_path / "empty.jsonl"
    corpus.write_text("", encoding="utf-8")
    summary = cmd_calibrate(corpus, "jsonl", ["single_author"], tmp_path / "out")
    assert summary["records"] == 0
    assert pd.read_csv(tmp_path / "out" / "single_author.csv").empty


def test_comma_list_keeps_braces():
    assert comma_list("solo_split{k=2},pair_single_joint") == ["solo_split{k=2}", "pair_single_joint"]


def test_main_exit_codes(tmp_path):
    good = write_config(tmp_path, SOLO)
    bad = write_config(tmp_path, dict(SOLO, strategies={}), "bad.json")
    assert main(["simulate", "--config", str(good), "--out", str(tmp_path / "t")]) == EXIT_OK
    assert main(["simulate", "--config", str(bad)]) == EXIT_VALIDATION
    assert main(["stability", "--config", str(good), "--catalog", "nonsense", "--horizon", "20"]) == EXIT_VALIDATION
    assert main(["calibrate", "--corpus", str(tmp_path / "missing.csv"), "--out", str(tmp_path / "o")]) == EXIT_VALIDATION


def test_main_runtime_error(tmp_path, monkeypatch):
    from game.errors import SimulationError

    def explode(*args, **kwargs):
        raise SimulationError("boom", 3, 0)

    monkeypatch.setattr("cli.main.cmd_simulate", explode)
    assert main(["simulate", "--config", str(write_config(tmp_path, SOLO))]) == EXIT_RUNTIME


def test_main_verify_failure(monkeypatch):
    from cli.verify import CheckResult

    monkeypatch.setattr("cli.main.run_verification", lambda horizon=None: [CheckResult(name="x", passed=False, measured="")])
    assert main(["verify", "--horizon", "100"]) == EXIT_VERIFY_FAILED
