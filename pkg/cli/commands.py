"""
Command implementations behind run_cli.py.

Each command takes plain arguments, writes its artifacts and returns the
in-memory result so tests can assert on it without parsing files.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import pandas as pd

from analysis import DEFAULT_CATALOG, find_unstable_set, overtakes
from calibration import (
    load_corpus,
    predictor_correlations,
    reinvestment_curve,
    single_author_curve,
    two_author_curve,
)
from cli import __version__
from cli.config import ConfigError, GameConfig, config_digest, load_config
from game.engine import run_game
from game.models import Trajectory

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

TRAJECTORY_COLUMNS = ["year", "player", "h", "papers_published", "new_citations"]
CURVES = {
    "single_author": single_author_curve,
    "two_author": two_author_curve,
    "reinvestment": reinvestment_curve,
}


def _write_json(path: Path, payload: Any) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _output_base(out: Union[str, Path, None], config: GameConfig, default: str) -> Path:
    base = Path(out or config.outputs.path or default)
    return base.with_suffix("") if base.suffix in (".csv", ".json") else base


def trajectory_frame(trajectory: Trajectory) -> pd.DataFrame:
    """One row per (year, player)."""
    rows = [
        {
            "year": record.year,
            "player": player,
            "h": record.utilities[player],
            "papers_published": record.papers_published(player),
            "new_citations": record.new_citations(player),
        }
        for record in trajectory.records
        for player in range(trajectory.num_players)
    ]
    return pd.DataFrame(rows, columns=TRAJECTORY_COLUMNS)


def read_trajectory_csv(path: Union[str, Path]) -> Dict[int, List[int]]:
    """Utility series per player from a trajectory CSV."""
    frame = pd.read_csv(path)
    missing = [c for c in TRAJECTORY_COLUMNS if c not in frame.columns]
    if missing:
        raise ConfigError(f"{path} is not a trajectory file; missing columns {missing}")
    frame = frame.sort_values(["player", "year"])
    return {int(player): group["h"].astype(int).tolist() for player, group in frame.groupby("player")}


def cmd_simulate(config_path: Union[str, Path], out: Union[str, Path, None] = None, horizon: Optional[int] = None) -> Trajectory:
    """
    Simulate a config and write ``<out>.csv``, ``<out>.json`` (final profiles and
    every paper) and ``<out>.meta.json``.
    """
    config = load_config(config_path)
    horizon = horizon or config.horizon
    trajectory = run_game(config.initial_state(), config.strategy_profile(), horizon, record_profiles=False)

    base = _output_base(out, config, "trajectory")
    base.parent.mkdir(parents=True, exist_ok=True)
    trajectory_frame(trajectory).to_csv(base.with_suffix(".csv"), index=False, lineterminator="\n")
    _write_json(
        base.with_suffix(".json"),
        {
            "horizon": horizon,
            "initial_profiles": [list(p.counts) for p in trajectory.initial.profiles],
            "final_profiles": [list(p.counts) for p in trajectory.final.profiles],
            "papers": [paper.model_dump(mode="json") for paper in trajectory.papers()],
        },
    )
    _write_json(
        base.with_name(base.name + ".meta.json"),
        {"tool": "acgame", "version": __version__, "config_sha256": config_digest(config_path)},
    )
    logger.info(f"Simulated {config.num_players} players for {horizon} years -> {base.with_suffix('.csv')}")
    return trajectory


def cmd_compare(
    config_path: Union[str, Path],
    other_path: Union[str, Path, None] = None,
    horizon: Optional[int] = None,
    burn_in: Optional[float] = None,
    out: Union[str, Path, None] = None,
) -> Dict[str, Any]:
    """
    Per-player overtaking verdicts of the config's strategies against a second
    config, or against the config's own ``alternative`` assignment.
    """
    config = load_config(config_path)
    if other_path is None:
        other, other_profile = config, config.strategy_profile(alternative=True)
    else:
        other = load_config(other_path)
        other_profile = other.strategy_profile()
    if other.num_players != config.num_players or other.initial_state() != config.initial_state():
        raise ConfigError("Compared configs must share the same roster and initial profiles")

    horizon = horizon or config.horizon
    initial = config.initial_state()
    first = run_game(initial, config.strategy_profile(), horizon, record_profiles=False)
    second = run_game(initial, other_profile, horizon, record_profiles=False)

    verdicts = {
        str(player): overtakes(first.utility_series(player), second.utility_series(player), burn_in).model_dump(mode="json")
        for player in range(config.num_players)
    }
    report = {
        "horizon": horizon,
        "first": config.strategy_profile().labels(),
        "second": other_profile.labels(),
        "verdicts": verdicts,
    }
    if out:
        _write_json(Path(out), report)
    for player, verdict in verdicts.items():
        logger.info(f"Player {player}: {verdict['verdict']} (stable from year {verdict['stabilization_year']})")
    return report


def cmd_stability(
    config_path: Union[str, Path],
    catalog: Optional[Sequence[str]] = None,
    k: int = 2,
    horizon: Optional[int] = None,
    burn_in: Optional[float] = None,
    exhaustive: bool = False,
    out: Union[str, Path, None] = None,
) -> Dict[str, Any]:
    """Unstable-set search on the config's strategy profile."""
    config = load_config(config_path)
    report = find_unstable_set(
        config.strategy_profile(),
        list(catalog or DEFAULT_CATALOG),
        k=k,
        horizon=horizon or config.horizon,
        burn_in_fraction=burn_in,
        initial=config.initial_state(),
        exhaustive=exhaustive,
        show_progress=True,
    )
    payload = report.model_dump(mode="json")
    payload["label"] = report.label
    if out:
        _write_json(Path(out), payload)
    logger.info(f"Profile is {report.label} (k={k}, {report.candidates_checked} deviations checked)")
    return payload


def cmd_calibrate(
    corpus_path: Union[str, Path],
    format: str = "csv",
    analyses: Optional[Sequence[str]] = None,
    out: Union[str, Path] = "calibration_out",
) -> Dict[str, Any]:
    """
    Write ``<out>/<analysis>.csv`` curves (group_key, median, count),
    ``<out>/correlations.json``, ``<out>/records.csv`` with the accepted records
    and ``<out>/rejects.csv`` when rows were rejected.
    """
    selected = list(analyses or CURVES)
    unknown = [name for name in selected if name not in CURVES]
    if unknown:
        raise ConfigError(f"Unknown analyses {unknown}; expected some of {sorted(CURVES)}")

    corpus = load_corpus(corpus_path, format)
    if not len(corpus):
        logger.warning(f"Corpus {corpus_path} has no usable records; writing empty outputs")

    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    curves = {}
    for name in selected:
        curve = CURVES[name](corpus)
        curve.to_csv(out_dir / f"{name}.csv", index=False, lineterminator="\n")
        curves[name] = curve

    correlations = predictor_correlations(corpus)
    _write_json(out_dir / "correlations.json", correlations)
    corpus.to_frame().to_csv(out_dir / "records.csv", index=False, lineterminator="\n")
    if corpus.rejects:
        pd.DataFrame([r.model_dump() for r in corpus.rejects], columns=["line", "reason", "raw"]).to_csv(
            out_dir / "rejects.csv", index=False, lineterminator="\n"
        )
    logger.info(f"Calibrated {len(corpus)} records into {out_dir}")
    return {"records": len(corpus), "rejects": len(corpus.rejects), "curves": curves, "correlations": correlations}
