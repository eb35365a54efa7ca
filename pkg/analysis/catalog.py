"""
Deviation families for the unstable-set search.

A family proposes, for one member of a candidate coalition, the strategies that
member may switch to. Families are addressed by the same ``name{k=v}`` syntax
as strategies; partner-based families expand over every other roster member.
"""

import re
from abc import ABC, abstractmethod
from typing import Dict, List, Sequence, Tuple

from analysis.errors import CatalogError
from strategies import (
    CrossPairStrategy,
    PairSingleJoint,
    PairTwoJointEvenSplit,
    SoloSinglePaper,
    SoloSplit,
    Strategy,
    StrategyProfile,
    matched_partner,
)
from strategies.errors import StrategyError


class DeviationFamily(ABC):
    """Source of alternative strategies for a coalition member."""

    label: str = "deviation"

    @abstractmethod
    def candidates(self, player: int, coalition: Tuple[int, ...], baseline: StrategyProfile) -> List[Strategy]:
        """
        Strategies `player` may adopt while `coalition` deviates from `baseline`.
        """
        pass

    def __repr__(self) -> str:
        return f"<{self.label}>"


class FixedDeviation(DeviationFamily):
    """A strategy with no partner, offered as-is."""

    def __init__(self, strategy: Strategy):
        self.strategy = strategy
        self.label = strategy.label

    def candidates(self, player, coalition, baseline):
        return [self.strategy]


class PartnerDeviation(DeviationFamily):
    """A partner strategy, offered once per other roster member."""

    def __init__(self, strategy_cls):
        self.strategy_cls = strategy_cls
        self.label = strategy_cls.name

    def candidates(self, player, coalition, baseline):
        return [self.strategy_cls(partner=other) for other in baseline.players if other != player]


class CrossPairDeviation(DeviationFamily):
    """
    Cross-pair schedule for two coalition members matched to other partners.
    Offers nothing unless both members are in matched pairs outside the coalition.
    """

    label = CrossPairStrategy.name

    def candidates(self, player, coalition, baseline):
        if len(coalition) != 2:
            return []
        other = coalition[1] if coalition[0] == player else coalition[0]
        former = matched_partner(baseline, player)
        other_former = matched_partner(baseline, other)
        if former is None or other_former is None or former == other or former in coalition:
            return []
        if len({player, other, former, other_former}) != 4:
            return []
        return [CrossPairStrategy(partner=other, former_partner=former)]


FAMILY_BUILDERS = {
    SoloSinglePaper.name: lambda params: FixedDeviation(SoloSinglePaper()),
    SoloSplit.name: lambda params: FixedDeviation(SoloSplit(**params)),
    PairSingleJoint.name: lambda params: PartnerDeviation(PairSingleJoint),
    PairTwoJointEvenSplit.name: lambda params: PartnerDeviation(PairTwoJointEvenSplit),
    CrossPairStrategy.name: lambda params: CrossPairDeviation(),
}

DEFAULT_CATALOG: Tuple[str, ...] = (
    "solo_single_paper",
    "solo_split{k=2}",
    "solo_split{k=3}",
    "pair_single_joint",
    "pair_two_joint_even_split",
    "cross_pair_deviation",
)

FAMILY_PATTERN = re.compile(r"^\s*(?P<name>[a-z_][a-z0-9_]*)\s*(?:\{(?P<params>[^}]*)\})?\s*$")


def parse_family(spec: str) -> DeviationFamily:
    """Build a deviation family from ``name`` or ``name{k=v}``."""
    match = FAMILY_PATTERN.match(spec)
    if not match or match.group("name") not in FAMILY_BUILDERS:
        raise CatalogError(f"Unknown deviation family '{spec}'. Known: {sorted(FAMILY_BUILDERS)}")
    params: Dict[str, int] = {}
    for item in filter(None, (match.group("params") or "").split(",")):
        key, _, value = item.partition("=")
        try:
            params[key.strip()] = int(value)
        except ValueError as e:
            raise CatalogError(f"Parameter '{item}' in '{spec}' must be an integer") from e
    try:
        return FAMILY_BUILDERS[match.group("name")](params)
    except (TypeError, StrategyError) as e:
        raise CatalogError(f"Cannot build deviation family '{spec}': {e}") from e


def build_catalog(specs: Sequence[str] = DEFAULT_CATALOG) -> List[DeviationFamily]:
    """Parse a list of family specs; the list must not be empty."""
    families = [parse_family(spec) for spec in specs if spec.strip()]
    if not families:
        raise CatalogError("Deviation catalog is empty")
    return families
