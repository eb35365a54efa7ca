"""
Base strategy class with common functionality.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, ClassVar, Dict, Iterable, Optional, Tuple

from game.engine import research_potential
from game.models import ActionPlan, GameState
from strategies.errors import StrategyParameterError

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


class Strategy(ABC):
    """
    Deterministic rule mapping (state, player) to an action plan.

    Strategies are immutable once built; two strategies are equal when their
    name and parameters are equal.
    """

    name: ClassVar[str] = "strategy"
    is_static: ClassVar[bool] = True
    partner_params: ClassVar[Tuple[str, ...]] = ()

    def __init__(self, **params: Any):
        self._params: Tuple[Tuple[str, Any], ...] = tuple(sorted(params.items()))

    @property
    def params(self) -> Dict[str, Any]:
        return dict(self._params)

    @property
    def key(self) -> Tuple[str, Tuple[Tuple[str, Any], ...]]:
        return (self.name, self._params)

    @property
    def label(self) -> str:
        """Addressable form, e.g. ``solo_split{k=2}``."""
        if not self._params:
            return self.name
        inner = ",".join(f"{k}={v}" for k, v in self._params)
        return f"{self.name}{{{inner}}}"

    def partners(self) -> Tuple[int, ...]:
        """Player ids referenced by this strategy."""
        params = self.params
        return tuple(int(params[p]) for p in self.partner_params if p in params)

    def check_owner(self, player: int, roster: Optional[Iterable[int]] = None) -> None:
        """Raise if this strategy cannot be played by `player` on `roster`."""
        members = set(roster) if roster is not None else None
        for partner in self.partners():
            if partner == player:
                raise StrategyParameterError(f"{self.label}: player {player} cannot partner with themselves")
            if members is not None and partner not in members:
                raise StrategyParameterError(f"{self.label}: partner {partner} is not in the roster")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Strategy):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"<{self.label}>"

    def plan(self, state: GameState, player: int) -> ActionPlan:
        """Return this year's plan for `player`."""
        self.check_owner(player)
        return self.allocate(state, player, research_potential(state, player))

    @abstractmethod
    def allocate(self, state: GameState, player: int, potential: int) -> ActionPlan:
        """
        Split `potential` units for `player`.
        """
        pass
