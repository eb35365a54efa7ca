"""
Tests for the strategy catalog, profiles and name-based addressing.
"""

import pytest

from bibliometrics import CitationProfile
from game import ActionPlan, GameState, run_game, validate_action
from strategies import (
    CrossPairStrategy,
    MatchingError,
    PairSingleJoint,
    PairTwoJointEvenSplit,
    SoloSinglePaper,
    SoloSplit,
    StrategyError,
    StrategyParameterError,
    StrategyProfile,
    UnknownStrategyError,
    build_strategy,
    cross_pair_deviation,
    matched_partner,
    matching_profile,
    pair_single_joint,
    pair_two_joint_even_split,
    parse_strategy_spec,
    profiles_equivalent,
    solo_single_paper,
    solo_split,
)


def state_with_h(h, players=4, year=0):
    # h papers of h citations give h-index exactly h
    return GameState(year=year, profiles=tuple(CitationProfile([h] * h) for _ in range(players)))


@pytest.mark.parametrize("h, expected", [(0, (1,)), (3, (4,)), (10, (11,))])
def test_solo_single_paper(h, expected):
    assert solo_single_paper().plan(state_with_h(h), 0) == ActionPlan(solo=expected)


@pytest.mark.parametrize("k, h, expected", [(2, 3, (2, 2)), (2, 4, (3, 2)), (3, 1, (1, 1)), (3, 6, (3, 2, 2))])
def test_solo_split(k, h, expected):
    assert solo_split(k).plan(state_with_h(h), 0).solo == expected


def test_solo_split_needs_two_parts():
    with pytest.raises(StrategyParameterError):
        solo_split(1)


@pytest.mark.parametrize("h, expected", [(0, (1,)), (2, (3,))])
def test_pair_single_joint(h, expected):
    plan = pair_single_joint(1).plan(state_with_h(h), 0)
    assert plan.solo == ()
    assert plan.joint == {1: expected}


def test_pair_strategies_reject_self_partner():
    with pytest.raises(StrategyParameterError):
        pair_single_joint(0).plan(state_with_h(0), 0)
    with pytest.raises(StrategyParameterError):
        pair_two_joint_even_split(2).plan(state_with_h(0), 2)


@pytest.mark.parametrize("h, smaller, larger", [(3, (2, 2), (2, 2)), (2, (2, 1), (1, 2)), (0, (1,), (1,))])
def test_pair_two_joint_even_split(h, smaller, larger):
    state = state_with_h(h)
    assert pair_two_joint_even_split(1).plan(state, 0).joint == {1: smaller}
    assert pair_two_joint_even_split(0).plan(state, 1).joint == {0: larger}


def test_catalog_plans_are_valid():
    state = state_with_h(5)
    for player, strategy in [
        (0, SoloSinglePaper()),
        (0, SoloSplit(k=2)),
        (0, SoloSplit(k=4)),
        (0, PairSingleJoint(partner=1)),
        (0, PairTwoJointEvenSplit(partner=1)),
        (0, CrossPairStrategy(partner=2, former_partner=1)),
    ]:
        plan = strategy.plan(state, player)
        assert validate_action(state, player, plan) == []
        assert strategy.plan(state, player) == plan


def test_matching_profile_pairs_players():
    profile = matching_profile([(0, 1), (2, 3)])
    assert profile[0] == PairSingleJoint(partner=1)
    assert profile[3] == PairSingleJoint(partner=2)
    assert matched_partner(profile, 2) == 3
    assert profile.is_static()


@pytest.mark.parametrize(
    "matching, roster",
    [
        ([(0, 1)], [0, 1, 2]),
        ([(0, 1), (1, 2)], None),
        ([(0, 1)], [0, 1, 2, 3]),
        ([(0, 0)], None),
    ],
)
def test_matching_profile_rejects_non_perfect(matching, roster):
    with pytest.raises(MatchingError):
        matching_profile(matching, roster)


def test_cross_pair_schedule():
    strategies = cross_pair_deviation(0, 2, 1, 3)
    a1 = strategies[0]
    # year 2 is planned from the state after year 1
    assert a1.plan(state_with_h(1, year=1), 0).joint == {1: (2,)}
    assert a1.plan(state_with_h(2, year=2), 0).joint == {1: (1,), 2: (2,)}
    assert a1.plan(state_with_h(4, year=4), 0).joint == {2: (5,)}
    assert a1.plan(state_with_h(4, year=6), 0).joint == {1: (1,), 2: (4,)}
    assert not a1.is_static


def test_cross_pair_needs_four_players():
    with pytest.raises(StrategyParameterError):
        cross_pair_deviation(0, 1, 1, 3)


def test_strategy_profile_must_be_total():
    with pytest.raises(StrategyError):
        StrategyProfile({0: SoloSinglePaper()}, num_players=2)
    with pytest.raises(StrategyError):
        StrategyProfile({0: PairSingleJoint(partner=5)})


def test_with_overrides_keeps_original():
    base = matching_profile([(0, 1)])
    changed = base.with_overrides({0: SoloSinglePaper()})
    assert base[0] == PairSingleJoint(partner=1)
    assert changed[0] == SoloSinglePaper()
    assert changed.labels() == {0: "solo_single_paper", 1: "pair_single_joint{partner=0}"}


def test_registry_round_trips_labels():
    for label in ["solo_single_paper", "solo_split{k=3}", "pair_single_joint{partner=1}",
                  "cross_pair_deviation{former_partner=1,partner=2}"]:
        assert parse_strategy_spec(label).label == label
    assert build_strategy("solo_split", {"k": "2"}) == SoloSplit(k=2)


def test_registry_errors():
    with pytest.raises(UnknownStrategyError):
        parse_strategy_spec("best_response")
    with pytest.raises(StrategyParameterError):
        build_strategy("pair_single_joint", {})
    with pytest.raises(StrategyParameterError):
        parse_strategy_spec("solo_split{k}")


def test_profiles_equivalent():
    initial = GameState.initial(2)
    joint = matching_profile([(0, 1)])
    # one side investing in a slot the other never fills still pays like a solo paper
    lonely = StrategyProfile({0: PairSingleJoint(partner=1), 1: SoloSinglePaper()})
    solos = StrategyProfile({0: SoloSinglePaper(), 1: SoloSinglePaper()})
    assert profiles_equivalent(initial, joint, joint, 20)
    assert profiles_equivalent(initial, lonely, solos, 20)
    assert not profiles_equivalent(initial, joint, solos, 20)


def test_split_pair_is_symmetric(split_pair, empty_pair_state):
    trajectory = run_game(empty_pair_state, split_pair, 50)
    assert trajectory.utility_series(0) == trajectory.utility_series(1)
