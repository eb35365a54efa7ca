"""
The repeated Academic Collaboration game: state, actions and yearly resolution.
"""

from game.engine import research_potential, resolve_year, run_game, validate_action
from game.errors import (
    ActionViolation,
    ConservationViolation,
    GameError,
    HorizonError,
    NegativeEntry,
    RosterError,
    SelfPartner,
    SimulationError,
    UnknownPartner,
    ZeroSoloSlot,
)
from game.models import ActionPlan, GameState, Paper, Trajectory, YearRecord

__all__ = [
    'ActionPlan',
    'GameState',
    'Paper',
    'Trajectory',
    'YearRecord',
    'research_potential',
    'validate_action',
    'resolve_year',
    'run_game',
    'GameError',
    'RosterError',
    'HorizonError',
    'ActionViolation',
    'ConservationViolation',
    'NegativeEntry',
    'ZeroSoloSlot',
    'SelfPartner',
    'UnknownPartner',
    'SimulationError'
]
