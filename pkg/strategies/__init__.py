"""
Deterministic strategy catalog for the AC game.
"""

from strategies.base_strategy import Strategy
from strategies.deviation import CrossPairStrategy, cross_pair_deviation
from strategies.errors import MatchingError, StrategyError, StrategyParameterError, UnknownStrategyError
from strategies.pair import PairSingleJoint, PairTwoJointEvenSplit, pair_single_joint, pair_two_joint_even_split
from strategies.profile import StrategyProfile, matched_partner, matching_profile, profiles_equivalent
from strategies.registry import STRATEGY_REGISTRY, build_strategy, parse_strategy_spec
from strategies.solo import SoloSinglePaper, SoloSplit, solo_single_paper, solo_split

__all__ = [
    'Strategy',
    'SoloSinglePaper',
    'SoloSplit',
    'PairSingleJoint',
    'PairTwoJointEvenSplit',
    'CrossPairStrategy',
    'solo_single_paper',
    'solo_split',
    'pair_single_joint',
    'pair_two_joint_even_split',
    'cross_pair_deviation',
    'StrategyProfile',
    'matching_profile',
    'matched_partner',
    'profiles_equivalent',
    'STRATEGY_REGISTRY',
    'build_strategy',
    'parse_strategy_spec',
    'StrategyError',
    'StrategyParameterError',
    'UnknownStrategyError',
    'MatchingError'
]
