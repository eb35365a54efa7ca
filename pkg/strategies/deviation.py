"""
Time-scheduled cross-pair deviation.

Two players a1 and a2 who are matched elsewhere (to a1p and a2p) leave their
pairs for each other:
  - years 1-2: keep playing the single joint paper with the former partner;
  - years 3 and 7: one unit to the former partner's joint slot, the rest into
    a single joint paper with the new partner;
  - every other year: everything into the joint paper with the new partner.
Years count from 1; the plan for year y is computed from the state after y-1 years.
"""

from typing import Dict, FrozenSet

from game.models import ActionPlan, GameState
from strategies.base_strategy import Strategy
from strategies.errors import StrategyParameterError

LOYAL_YEARS = 2
BRIDGE_YEARS: FrozenSet[int] = frozenset({3, 7})


class CrossPairStrategy(Strategy):
    """One side of a cross-pair deviation."""

    name = "cross_pair_deviation"
    is_static = False
    partner_params = ("partner", "former_partner")

    def __init__(self, partner: int, former_partner: int):
        partner, former_partner = int(partner), int(former_partner)
        if partner == former_partner:
            raise StrategyParameterError("cross_pair_deviation needs a new partner distinct from the former one")
        super().__init__(partner=partner, former_partner=former_partner)
        self.partner = partner
        self.former_partner = former_partner

    def allocate(self, state: GameState, player: int, potential: int) -> ActionPlan:
        acting_year = state.year + 1
        if acting_year <= LOYAL_YEARS:
            return ActionPlan(joint={self.former_partner: (potential,)})
        if acting_year in BRIDGE_YEARS:
            return ActionPlan(joint={self.former_partner: (1,), self.partner: (potential - 1,)})
        return ActionPlan(joint={self.partner: (potential,)})


def cross_pair_deviation(a1: int, a2: int, a1p: int, a2p: int) -> Dict[int, CrossPairStrategy]:
    """Strategies for a1 and a2 deviating from their matched partners a1p and a2p."""
    players = (a1, a2, a1p, a2p)
    if len(set(players)) != 4:
        raise StrategyParameterError(f"cross_pair_deviation needs four distinct players, got {players}")
    return {
        a1: CrossPairStrategy(partner=a2, former_partner=a1p),
        a2: CrossPairStrategy(partner=a1, former_partner=a2p),
    }
