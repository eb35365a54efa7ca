"""
JSON game configuration.

Example::

    {
      "players": [{"id": 0, "initial_profile": []}, {"id": 1}],
      "strategies": {
        "0": {"name": "pair_single_joint", "params": {"partner": 1}},
        "1": "pair_single_joint{partner=0}"
      },
      "horizon": 1000,
      "alternative": {"0": "solo_single_paper", "1": "solo_single_paper"},
      "outputs": {"path": "runs/pair"}
    }
"""

import hashlib
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from game.models import GameState
from strategies import Strategy, StrategyProfile, build_strategy, parse_strategy_spec
from strategies.errors import StrategyError

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


class ConfigError(ValueError):
    """Config file is missing, unparsable or invalid."""


class PlayerConfig(BaseModel):
    id: int = Field(..., ge=0)
    initial_profile: List[int] = Field(default_factory=list, description="Citation counts held at year 0")

    @field_validator("initial_profile")
    @classmethod
    def _non_negative(cls, value: List[int]) -> List[int]:
        if any(v < 0 for v in value):
            raise ValueError("citation counts must be non-negative")
        return value


class StrategyConfig(BaseModel):
    name: str
    params: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="before")
    @classmethod
    def _from_spec_string(cls, value):
        if isinstance(value, str):
            try:
                strategy = parse_strategy_spec(value)
            except StrategyError as e:
                raise ValueError(str(e)) from e
            return {"name": strategy.name, "params": strategy.params}
        return value

    def build(self) -> Strategy:
        return build_strategy(self.name, self.params)


class OutputConfig(BaseModel):
    path: Optional[str] = Field(None, description="Output path without extension")


def _check_assignment(field: str, strategies: Dict[int, StrategyConfig], roster: List[int]) -> None:
    missing = [p for p in roster if p not in strategies]
    if missing:
        raise ValueError(f"{field}: no strategy for players {missing}")
    unknown = [p for p in strategies if p not in roster]
    if unknown:
        raise ValueError(f"{field}: strategies given for unknown players {unknown}")
    for player, spec in strategies.items():
        try:
            spec.build().check_owner(player, roster)
        except StrategyError as e:
            raise ValueError(f"{field}.{player}: {e}") from e


class GameConfig(BaseModel):
    players: List[PlayerConfig] = Field(..., min_length=1)
    strategies: Dict[int, StrategyConfig]
    horizon: int = Field(1000, ge=1)
    alternative: Optional[Dict[int, StrategyConfig]] = Field(
        None, description="Second strategy assignment for compare runs"
    )
    outputs: OutputConfig = Field(default_factory=OutputConfig)

    @model_validator(mode="after")
    def _check_roster(self) -> "GameConfig":
        ids = [p.id for p in self.players]
        if sorted(ids) != list(range(len(ids))):
            raise ValueError(f"players: ids must be 0..{len(ids) - 1} without gaps or duplicates, got {ids}")
        _check_assignment("strategies", self.strategies, ids)
        if self.alternative is not None:
            _check_assignment("alternative", self.alternative, ids)
        return self

    @property
    def num_players(self) -> int:
        return len(self.players)

    def initial_state(self) -> GameState:
        return GameState.initial(self.num_players, {p.id: p.initial_profile for p in self.players})

    def strategy_profile(self, alternative: bool = False) -> StrategyProfile:
        source = self.alternative if alternative else self.strategies
        if source is None:
            raise ConfigError("Config has no alternative strategy assignment")
        return StrategyProfile({p: spec.build() for p, spec in source.items()}, num_players=self.num_players)


def _format_validation(error: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(part) for part in item['loc']) or '<root>'}: {item['msg']}" for item in error.errors()
    )


def load_config(path: Union[str, Path]) -> GameConfig:
    """Load and validate a config file; errors name the offending field path."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"Cannot read config {path}: {e}") from e
    try:
        return GameConfig.model_validate_json(text)
    except ValidationError as e:
        raise ConfigError(f"Invalid config {path}: {_format_validation(e)}") from e


def config_digest(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
