"""
Social welfare of a roster.
"""

from enum import Enum

from bibliometrics import h_index
from game.models import GameState


class WelfareVariant(str, Enum):
    SUM_H = "sum_h"
    H_OF_H = "h_of_h"


def social_welfare(state: GameState, variant: WelfareVariant = WelfareVariant.SUM_H) -> int:
    """Sum of h-indices, or the h-index of the multiset of h-indices."""
    variant = WelfareVariant(variant)
    values = state.h_values()
    if variant is WelfareVariant.SUM_H:
        return sum(values)
    return h_index(values)
