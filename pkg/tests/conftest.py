"""
Shared pytest setup: repository root on sys.path and small game fixtures.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest

from config.settings import get_settings
from game.models import GameState
from strategies import PairSingleJoint, PairTwoJointEvenSplit, SoloSinglePaper, StrategyProfile


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Settings are re-read per test so monkeypatched env vars take effect."""
    monkeypatch.delenv("ACGAME_BURN_IN_FRACTION", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def solo_profile():
    return StrategyProfile({0: SoloSinglePaper()})


@pytest.fixture
def joint_pair():
    return StrategyProfile({0: PairSingleJoint(partner=1), 1: PairSingleJoint(partner=0)})


@pytest.fixture
def split_pair():
    return StrategyProfile({0: PairTwoJointEvenSplit(partner=1), 1: PairTwoJointEvenSplit(partner=0)})


@pytest.fixture
def empty_pair_state():
    return GameState.initial(2)
