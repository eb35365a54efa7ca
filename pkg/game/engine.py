"""
The repeated AC game engine.

Each year every player holds Q = h + 1 units of research potential and splits
it across solo papers and joint slots. A solo slot q > 0 yields a paper with q
citations; joint slot i between a and b yields a paper with
q[a->b][i] + q[b->a][i] citations authored by the positive investors.
Citations are received in full in the publication year.
"""

import logging
from typing import Dict, Iterable, List, Mapping, Optional, Protocol, Tuple

from bibliometrics import CitationProfile, h_index
from config.settings import get_settings
from game.errors import (
    ActionViolation,
    ConservationViolation,
    HorizonError,
    NegativeEntry,
    RosterError,
    SelfPartner,
    SimulationError,
    UnknownPartner,
    ZeroSoloSlot,
)
from game.models import ActionPlan, GameState, Paper, Trajectory, YearRecord

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


class PlanSource(Protocol):
    """Anything that can pick a plan for a player; satisfied by strategies.StrategyProfile."""

    def plan_for(self, state: GameState, player: int) -> ActionPlan:
        ...


def _check_player(state: GameState, player: int) -> None:
    if not 0 <= player < len(state.profiles):
        raise RosterError(f"Player {player} is not in the roster of {len(state.profiles)} players")


def research_potential(state: GameState, player: int) -> int:
    """Units of research potential available to `player` this year: h + 1."""
    _check_player(state, player)
    return h_index(state.profiles[player]) + 1


def validate_action(state: GameState, player: int, plan: ActionPlan) -> List[ActionViolation]:
    """
    Check a plan against the allocation rules.

    Returns an empty list when the plan is valid, otherwise one violation per
    broken rule (the violations carry the player id).
    """
    _check_player(state, player)
    violations: List[ActionViolation] = []

    for i, q in enumerate(plan.solo):
        if q < 0:
            violations.append(NegativeEntry(f"solo slot {i} holds {q}", player=player))
        elif q == 0:
            violations.append(ZeroSoloSlot(f"solo slot {i} holds no potential", player=player))

    for partner, slots in plan.joint.items():
        if partner == player:
            violations.append(SelfPartner("joint vector keyed to the acting player", player=player))
        elif not 0 <= partner < len(state.profiles):
            violations.append(UnknownPartner(f"partner {partner} is not in the roster", player=player))
        for i, q in enumerate(slots):
            if q < 0:
                violations.append(NegativeEntry(f"joint slot {i} with {partner} holds {q}", player=player))

    expected = research_potential(state, player)
    total = plan.total()
    if total != expected:
        violations.append(
            ConservationViolation(f"allocated {total} units but research potential is {expected}", player=player)
        )
    return violations


def _joint_pairs(plans: Mapping[int, ActionPlan]) -> List[Tuple[int, int]]:
    pairs = set()
    for player, plan in plans.items():
        for partner in plan.joint:
            pairs.add((min(player, partner), max(player, partner)))
    return sorted(pairs)


def resolve_year(
    state: GameState,
    plans: Mapping[int, ActionPlan],
    max_citations: Optional[int] = None,
) -> Tuple[GameState, List[Paper]]:
    """
    Resolve one year of play.

    Every plan is validated first; any failure aborts the year and the input
    state is left untouched.
    """
    year = state.year + 1
    missing = [p for p in state.players if p not in plans]
    if missing:
        raise RosterError(f"No action plan for players {missing} in year {year}")
    extra = [p for p in plans if not 0 <= p < len(state.profiles)]
    if extra:
        raise RosterError(f"Action plans given for unknown players {extra} in year {year}")

    for player in state.players:
        violations = validate_action(state, player, plans[player])
        if violations:
            first = violations[0]
            first.year = year
            raise first

    cap = max_citations or get_settings().max_citations
    papers: List[Paper] = []

    def publish(citations: int, authors: Iterable[int]) -> None:
        papers.append(Paper(id=f"y{year}-p{len(papers)}", year=year, citations=citations, authors=tuple(authors)))

    for player in state.players:
        for q in plans[player].solo:
            publish(q, (player,))

    for a, b in _joint_pairs(plans):
        slots_a = plans[a].joint.get(b, ())
        slots_b = plans[b].joint.get(a, ())
        for i in range(max(len(slots_a), len(slots_b))):
            qa = slots_a[i] if i < len(slots_a) else 0
            qb = slots_b[i] if i < len(slots_b) else 0
            if qa + qb > 0:
                publish(qa + qb, tuple(p for p, q in ((a, qa), (b, qb)) if q > 0))

    gained: Dict[int, List[int]] = {p: [] for p in state.players}
    for paper in papers:
        for author in paper.authors:
            gained[author].append(paper.citations)

    profiles = tuple(
        state.profiles[p].add(*gained[p], max_citations=cap) for p in state.players
    )
    return GameState(year=year, profiles=profiles), papers


def run_game(
    initial: GameState,
    profile: PlanSource,
    horizon: int,
    record_profiles: bool = True,
    max_citations: Optional[int] = None,
) -> Trajectory:
    """
    Play `horizon` years from `initial` under a strategy profile.

    The result is a pure function of its inputs. Failures are re-raised as
    SimulationError naming the year and player involved.
    """
    if horizon < 1:
        raise HorizonError(f"Horizon must be at least 1, got {horizon}")

    state = initial
    records: List[YearRecord] = []
    for _ in range(horizon):
        year = state.year + 1
        plans: Dict[int, ActionPlan] = {}
        for player in state.players:
            try:
                plans[player] = profile.plan_for(state, player)
            except (KeyError, ValueError) as e:
                raise SimulationError(f"Strategy failed in year {year} for player {player}: {e}", year, player) from e
        try:
            state, papers = resolve_year(state, plans, max_citations=max_citations)
        except ActionViolation as e:
            raise SimulationError(f"Invalid action: {e}", e.year, e.player) from e
        except ValueError as e:
            raise SimulationError(f"Year {year} failed: {e}", year) from e

        records.append(
            YearRecord(
                year=state.year,
                papers=tuple(papers),
                utilities=state.h_values(),
                profiles=state.profiles if record_profiles else None,
            )
        )
        logger.debug(f"Resolved year {state.year}: {len(papers)} papers, h={records[-1].utilities}")

    return Trajectory(initial=initial, records=tuple(records), final=state)
