"""
Errors raised by the AC game engine.
"""

from typing import Optional


class GameError(ValueError):
    """Base class for invalid game input."""


class RosterError(GameError):
    """A player id is not part of the roster, or a roster entry is missing."""


class HorizonError(GameError):
    """The requested number of years is not positive."""


class ActionViolation(GameError):
    """An action plan breaks the allocation rules for the year."""

    kind = "action"

    def __init__(self, message: str, player: Optional[int] = None, year: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.player = player
        self.year = year

    def __str__(self) -> str:
        where = []
        if self.year is not None:
            where.append(f"year {self.year}")
        if self.player is not None:
            where.append(f"player {self.player}")
        prefix = f"[{', '.join(where)}] " if where else ""
        return f"{prefix}{self.kind}: {self.message}"


class ConservationViolation(ActionViolation):
    """Allocated potential differs from the research potential."""

    kind = "conservation"


class NegativeEntry(ActionViolation):
    """A slot holds a negative amount of potential."""

    kind = "negative_entry"


class ZeroSoloSlot(ActionViolation):
    """A solo slot holds no potential and would produce nothing."""

    kind = "zero_solo_slot"


class SelfPartner(ActionViolation):
    """A joint vector is keyed to the acting player."""

    kind = "self_partner"


class UnknownPartner(ActionViolation):
    """A joint vector is keyed to a player outside the roster."""

    kind = "unknown_partner"


class SimulationError(RuntimeError):
    """A simulated year failed; carries the offending year and player."""

    def __init__(self, message: str, year: Optional[int] = None, player: Optional[int] = None):
        super().__init__(message)
        self.year = year
        self.player = player
