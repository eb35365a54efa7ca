"""
Tests for research potential, action validation, year resolution and run_game.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bibliometrics import CitationProfile
from cli.verify import random_static_profile
from game import (
    ActionPlan,
    ConservationViolation,
    GameState,
    HorizonError,
    NegativeEntry,
    RosterError,
    SelfPartner,
    SimulationError,
    UnknownPartner,
    ZeroSoloSlot,
    research_potential,
    resolve_year,
    run_game,
    validate_action,
)
from strategies import SoloSinglePaper, StrategyProfile


def state_with(*profiles):
    return GameState(year=0, profiles=tuple(CitationProfile(p) for p in profiles))


@pytest.mark.parametrize("counts, expected", [([], 1), ([5, 4, 3, 2, 1], 4), ([3, 3, 3], 4)])
def test_research_potential(counts, expected):
    assert research_potential(state_with(counts), 0) == expected


def test_research_potential_unknown_player():
    with pytest.raises(RosterError):
        research_potential(state_with([]), 3)


def test_validate_action_ok():
    assert validate_action(state_with([]), 0, ActionPlan(solo=(1,))) == []
    assert validate_action(state_with([3, 3, 3], []), 0, ActionPlan(joint={1: (4,)})) == []


def test_validate_action_conservation():
    violations = validate_action(state_with([3, 3, 3], []), 0, ActionPlan(solo=(1,), joint={1: (2,)}))
    assert [type(v) for v in violations] == [ConservationViolation]


@pytest.mark.parametrize(
    "plan, kind",
    [
        (ActionPlan(solo=(2, -1)), NegativeEntry),
        (ActionPlan(solo=(1, 0)), ZeroSoloSlot),
        (ActionPlan(joint={0: (1,)}), SelfPartner),
        (ActionPlan(joint={7: (1,)}), UnknownPartner),
        (ActionPlan(joint={1: (2, -1)}), NegativeEntry),
    ],
)
def test_validate_action_violations(plan, kind):
    violations = validate_action(state_with([], []), 0, plan)
    assert any(isinstance(v, kind) for v in violations)
    assert all(v.player == 0 for v in violations)


def test_resolve_year_joint_paper():
    state = state_with([], [])
    new_state, papers = resolve_year(state, {0: ActionPlan(joint={1: (1,)}), 1: ActionPlan(joint={0: (1,)})})
    assert len(papers) == 1
    assert papers[0].citations == 2
    assert papers[0].authors == (0, 1)
    assert new_state.year == 1
    assert new_state.profiles == (CitationProfile([2]), CitationProfile([2]))


def test_resolve_year_solo_paper():
    new_state, papers = resolve_year(state_with([]), {0: ActionPlan(solo=(1,))})
    assert [(p.citations, p.authors) for p in papers] == [(1, (0,))]
    assert new_state.h_values() == (1,)


def test_resolve_year_one_sided_joint_slot():
    # player 0 has Q=2 and invests it toward 1; player 1 works alone
    state = state_with([1], [])
    plans = {0: ActionPlan(joint={1: (2,)}), 1: ActionPlan(solo=(1,))}
    _, papers = resolve_year(state, plans)
    assert sorted((p.citations, p.authors) for p in papers) == [(1, (1,)), (2, (0,))]


def test_resolve_year_aligns_slots_positionally():
    state = state_with([2, 2], [2, 2])  # Q = 3 each
    plans = {0: ActionPlan(joint={1: (2, 1)}), 1: ActionPlan(joint={0: (1, 1, 1)})}
    _, papers = resolve_year(state, plans)
    assert [p.citations for p in papers] == [3, 2, 1]
    assert [p.authors for p in papers] == [(0, 1), (0, 1), (1,)]


def test_resolve_year_invalid_plan_leaves_state():
    state = state_with([], [])
    with pytest.raises(ConservationViolation) as info:
        resolve_year(state, {0: ActionPlan(solo=(2,)), 1: ActionPlan(solo=(1,))})
    assert info.value.year == 1
    assert info.value.player == 0
    assert state.year == 0
    assert state.profiles == (CitationProfile(), CitationProfile())


def test_resolve_year_missing_plan():
    with pytest.raises(RosterError):
        resolve_year(state_with([], []), {0: ActionPlan(solo=(1,))})


def test_run_game_solo(solo_profile):
    trajectory = run_game(GameState.initial(1), solo_profile, 3)
    assert trajectory.utility_series(0) == [1, 1, 2]
    # profile {1, 2} after year 2 still has h=1, so Q=2
    assert [p.citations for p in trajectory.papers()] == [1, 2, 2]


def test_run_game_pair(joint_pair, empty_pair_state):
    trajectory = run_game(empty_pair_state, joint_pair, 4)
    assert trajectory.utility_series(0) == [1, 2, 2, 3]
    assert trajectory.utility_series(1) == [1, 2, 2, 3]
    assert trajectory.final.profiles[0] == CitationProfile([2, 4, 6, 6])
    assert trajectory.records[-1].profiles == trajectory.final.profiles


def test_run_game_rejects_non_positive_horizon(solo_profile):
    with pytest.raises(HorizonError):
        run_game(GameState.initial(1), solo_profile, 0)


def test_run_game_reports_year_and_player():
    class Greedy:
        def plan_for(self, state, player):
            return ActionPlan(solo=(state.year + 1,))  # matches Q only while h tracks the year

    with pytest.raises(SimulationError) as info:
        run_game(GameState.initial(1), Greedy(), 10)
    assert info.value.year == 3
    assert info.value.player == 0


def test_run_game_is_deterministic(split_pair, empty_pair_state):
    first = run_game(empty_pair_state, split_pair, 40)
    second = run_game(empty_pair_state, split_pair, 40)
    assert first == second


def test_initial_profiles_are_used():
    state = GameState.initial(1, {0: [5, 5, 5]})
    trajectory = run_game(state, StrategyProfile({0: SoloSinglePaper()}), 1)
    assert trajectory.papers()[0].citations == 4


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=2**32 - 1))
def test_conservation_and_monotone_utility(num_players, seed):
    rng = np.random.default_rng(seed)
    initial = GameState.initial(num_players)
    trajectory = run_game(initial, random_static_profile(rng, num_players), 30)
    before = initial.h_values()
    for record in trajectory.records:
        assert sum(p.citations for p in record.papers) == sum(h + 1 for h in before)
        assert all(a >= b for a, b in zip(record.utilities, before))
        assert all(1 <= len(p.authors) <= 2 for p in record.papers)
        before = record.utilities
    # immediate citation: every earlier profile is contained in the later one
    for earlier, later in zip(trajectory.records, trajectory.records[1:]):
        for p in range(num_players):
            assert earlier.profiles[p].is_submultiset_of(later.profiles[p])
