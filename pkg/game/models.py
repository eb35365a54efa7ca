"""
Pydantic models for game state, actions and simulation output.
"""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from bibliometrics import CitationProfile, h_index


class GameState(BaseModel):
    """Year index plus one citation profile per player (ids 0..n-1)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    year: int = Field(0, ge=0, description="Number of resolved years")
    profiles: Tuple[CitationProfile, ...] = Field(..., description="Citation profile per player id")

    @classmethod
    def initial(cls, num_players: int, profiles: Optional[Dict[int, List[int]]] = None) -> "GameState":
        """Build a year-0 state; players without an entry start with an empty profile."""
        profiles = profiles or {}
        return cls(
            year=0,
            profiles=tuple(CitationProfile(profiles.get(pid, ())) for pid in range(num_players)),
        )

    @property
    def players(self) -> range:
        return range(len(self.profiles))

    def h(self, player: int) -> int:
        return h_index(self.profiles[player])

    def h_values(self) -> Tuple[int, ...]:
        return tuple(h_index(p) for p in self.profiles)


class ActionPlan(BaseModel):
    """A player's split of research potential across solo and joint slots."""

    model_config = ConfigDict(frozen=True)

    solo: Tuple[int, ...] = Field(default=(), description="Potential per single-author paper")
    joint: Dict[int, Tuple[int, ...]] = Field(
        default_factory=dict, description="Potential per joint slot, keyed by partner id"
    )

    def total(self) -> int:
        return sum(self.solo) + sum(sum(slots) for slots in self.joint.values())


class Paper(BaseModel):
    """A paper produced in a resolved year."""

    model_config = ConfigDict(frozen=True)

    id: str
    year: int = Field(..., ge=1)
    citations: int = Field(..., gt=0)
    authors: Tuple[int, ...] = Field(..., min_length=1, max_length=2)


class YearRecord(BaseModel):
    """Outcome of one resolved year."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    year: int
    papers: Tuple[Paper, ...]
    utilities: Tuple[int, ...]
    profiles: Optional[Tuple[CitationProfile, ...]] = None

    def new_citations(self, player: int) -> int:
        return sum(p.citations for p in self.papers if player in p.authors)

    def papers_published(self, player: int) -> int:
        return sum(1 for p in self.papers if player in p.authors)


class Trajectory(BaseModel):
    """Per-year records of a simulated game."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    initial: GameState
    records: Tuple[YearRecord, ...]
    final: GameState

    @property
    def horizon(self) -> int:
        return len(self.records)

    @property
    def num_players(self) -> int:
        return len(self.initial.profiles)

    def utility_series(self, player: int) -> List[int]:
        """h-index of `player` at the end of years 1..horizon."""
        return [record.utilities[player] for record in self.records]

    def papers(self) -> List[Paper]:
        return [paper for record in self.records for paper in record.papers]
