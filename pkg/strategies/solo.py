"""
Single-author strategies.
"""

from game.models import ActionPlan, GameState
from strategies.base_strategy import Strategy
from strategies.errors import StrategyParameterError


class SoloSinglePaper(Strategy):
    """Invest all research potential into one single-author paper."""

    name = "solo_single_paper"

    def allocate(self, state: GameState, player: int, potential: int) -> ActionPlan:
        return ActionPlan(solo=(potential,))


class SoloSplit(Strategy):
    """Split research potential into k near-equal single-author papers."""

    name = "solo_split"

    def __init__(self, k: int = 2):
        k = int(k)
        if k < 2:
            raise StrategyParameterError(f"solo_split needs k >= 2, got {k}")
        super().__init__(k=k)
        self.k = k

    def allocate(self, state: GameState, player: int, potential: int) -> ActionPlan:
        parts = min(self.k, potential)
        base, extra = divmod(potential, parts)
        return ActionPlan(solo=tuple(base + 1 if i < extra else base for i in range(parts)))


def solo_single_paper() -> SoloSinglePaper:
    return SoloSinglePaper()


def solo_split(k: int) -> SoloSplit:
    return SoloSplit(k=k)
