"""
Name-based strategy addressing for configs and the command line.

Accepted forms: ``solo_single_paper``, ``solo_split{k=2}``,
``pair_single_joint{partner=1}``, or a name plus a parameter mapping.
"""

import re
from typing import Any, Dict, Mapping, Optional, Type

from strategies.base_strategy import Strategy
from strategies.deviation import CrossPairStrategy
from strategies.errors import StrategyParameterError, UnknownStrategyError
from strategies.pair import PairSingleJoint, PairTwoJointEvenSplit
from strategies.solo import SoloSinglePaper, SoloSplit

STRATEGY_REGISTRY: Dict[str, Type[Strategy]] = {
    cls.name: cls
    for cls in (SoloSinglePaper, SoloSplit, PairSingleJoint, PairTwoJointEvenSplit, CrossPairStrategy)
}

SPEC_PATTERN = re.compile(r"^\s*(?P<name>[a-z_][a-z0-9_]*)\s*(?:\{(?P<params>[^}]*)\})?\s*$")


def _coerce(value: Any) -> Any:
    if isinstance(value, str):
        text = value.strip()
        if re.fullmatch(r"-?\d+", text):
            return int(text)
        return text
    return value


def build_strategy(name: str, params: Optional[Mapping[str, Any]] = None) -> Strategy:
    """Instantiate a registered strategy."""
    cls = STRATEGY_REGISTRY.get(name)
    if cls is None:
        raise UnknownStrategyError(f"Unknown strategy '{name}'. Known: {sorted(STRATEGY_REGISTRY)}")
    kwargs = {k: _coerce(v) for k, v in (params or {}).items()}
    try:
        return cls(**kwargs)
    except TypeError as e:
        raise StrategyParameterError(f"Bad parameters for {name}: {kwargs} ({e})") from e


def parse_strategy_spec(spec: str) -> Strategy:
    """Parse ``name{k=v,...}`` into a strategy."""
    match = SPEC_PATTERN.match(spec)
    if not match:
        raise UnknownStrategyError(f"Cannot parse strategy spec '{spec}'")
    params: Dict[str, Any] = {}
    raw = match.group("params")
    if raw and raw.strip():
        for item in raw.split(","):
            if "=" not in item:
                raise StrategyParameterError(f"Parameter '{item.strip()}' in '{spec}' is not key=value")
            key, value = item.split("=", 1)
            params[key.strip()] = value
    return build_strategy(match.group("name"), params)
