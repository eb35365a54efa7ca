"""
Two-author strategies toward a fixed partner.
"""

from game.models import ActionPlan, GameState
from strategies.base_strategy import Strategy


class PairSingleJoint(Strategy):
    """Invest all research potential into one joint paper with `partner`."""

    name = "pair_single_joint"
    partner_params = ("partner",)

    def __init__(self, partner: int):
        super().__init__(partner=int(partner))
        self.partner = int(partner)

    def allocate(self, state: GameState, player: int, potential: int) -> ActionPlan:
        return ActionPlan(joint={self.partner: (potential,)})


class PairTwoJointEvenSplit(Strategy):
    """
    Split research potential evenly between two joint papers with `partner`.

    The smaller id puts ceil(Q/2) in slot 0 and the larger id mirrors it, so
    with equal potentials each paper receives exactly Q citations.
    A single unit stays in one slot.
    """

    name = "pair_two_joint_even_split"
    partner_params = ("partner",)

    def __init__(self, partner: int):
        super().__init__(partner=int(partner))
        self.partner = int(partner)

    def allocate(self, state: GameState, player: int, potential: int) -> ActionPlan:
        if potential == 1:
            return ActionPlan(joint={self.partner: (1,)})
        high, low = (potential + 1) // 2, potential // 2
        slots = (high, low) if player < self.partner else (low, high)
        return ActionPlan(joint={self.partner: slots})


def pair_single_joint(partner: int) -> PairSingleJoint:
    return PairSingleJoint(partner=partner)


def pair_two_joint_even_split(partner: int) -> PairTwoJointEvenSplit:
    return PairTwoJointEvenSplit(partner=partner)
