"""
Strategy profiles: one strategy per player.
"""

import logging
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from game.engine import run_game
from game.models import ActionPlan, GameState
from strategies.base_strategy import Strategy
from strategies.errors import MatchingError, StrategyError
from strategies.pair import PairSingleJoint

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


class StrategyProfile:
    """Total assignment of strategies to the roster 0..n-1."""

    def __init__(self, assignment: Mapping[int, Strategy], num_players: Optional[int] = None):
        self._assignment: Dict[int, Strategy] = {int(p): s for p, s in assignment.items()}
        size = num_players if num_players is not None else len(self._assignment)
        roster = list(range(size))
        missing = [p for p in roster if p not in self._assignment]
        if missing:
            raise StrategyError(f"No strategy assigned to players {missing}")
        unknown = [p for p in self._assignment if p not in roster]
        if unknown:
            raise StrategyError(f"Strategies assigned to players outside the roster: {unknown}")
        for player, strategy in self._assignment.items():
            strategy.check_owner(player, roster)

    @property
    def players(self) -> List[int]:
        return sorted(self._assignment)

    def __len__(self) -> int:
        return len(self._assignment)

    def __getitem__(self, player: int) -> Strategy:
        return self._assignment[player]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StrategyProfile):
            return NotImplemented
        return self._assignment == other._assignment

    def __repr__(self) -> str:
        return f"StrategyProfile({self.labels()})"

    def items(self) -> List[Tuple[int, Strategy]]:
        return sorted(self._assignment.items())

    def labels(self) -> Dict[int, str]:
        return {p: s.label for p, s in self.items()}

    def plan_for(self, state: GameState, player: int) -> ActionPlan:
        return self._assignment[player].plan(state, player)

    def with_overrides(self, overrides: Mapping[int, Strategy]) -> "StrategyProfile":
        """Copy of this profile with some players' strategies replaced."""
        merged = dict(self._assignment)
        merged.update(overrides)
        return StrategyProfile(merged, num_players=len(self._assignment))

    def is_static(self) -> bool:
        return all(s.is_static for s in self._assignment.values())


def matching_profile(
    matching: Iterable[Tuple[int, int]],
    roster: Optional[Sequence[int]] = None,
) -> StrategyProfile:
    """Profile in which every matched pair writes a single joint paper each year."""
    pairs = [tuple(pair) for pair in matching]
    members = [p for pair in pairs for p in pair]
    roster = sorted(roster) if roster is not None else sorted(members)
    if len(roster) % 2:
        raise MatchingError(f"No perfect matching exists on an odd roster of {len(roster)} players")
    if any(len(pair) != 2 or pair[0] == pair[1] for pair in pairs):
        raise MatchingError(f"Matching entries must be pairs of distinct players: {pairs}")
    if len(set(members)) != len(members):
        raise MatchingError(f"Matching pairs overlap: {pairs}")
    if sorted(members) != roster:
        raise MatchingError(f"Matching {pairs} does not cover roster {roster} exactly")
    if roster != list(range(len(roster))):
        raise MatchingError(f"Roster must be the ids 0..{len(roster) - 1}, got {roster}")

    assignment: Dict[int, Strategy] = {}
    for a, b in pairs:
        assignment[a] = PairSingleJoint(partner=b)
        assignment[b] = PairSingleJoint(partner=a)
    return StrategyProfile(assignment, num_players=len(roster))


def matched_partner(profile: StrategyProfile, player: int) -> Optional[int]:
    """Partner of `player` when both play a single joint paper toward each other."""
    strategy = profile[player]
    if not isinstance(strategy, PairSingleJoint):
        return None
    partner = strategy.partner
    other = profile[partner]
    if isinstance(other, PairSingleJoint) and other.partner == player:
        return partner
    return None


def profiles_equivalent(initial: GameState, first: StrategyProfile, second: StrategyProfile, horizon: int) -> bool:
    """True when both profiles produce the same outcome in every simulated year."""
    a = run_game(initial, first, horizon, record_profiles=False)
    b = run_game(initial, second, horizon, record_profiles=False)
    for rec_a, rec_b in zip(a.records, b.records):
        if rec_a.utilities != rec_b.utilities:
            return False
        papers_a = sorted((p.citations, p.authors) for p in rec_a.papers)
        papers_b = sorted((p.citations, p.authors) for p in rec_b.papers)
        if papers_a != papers_b:
            return False
    return a.final.profiles == b.final.profiles
