"""
Corpora generated by simulating the game.
"""

from typing import List, Optional

from calibration.corpus import Corpus, PublicationRecord
from calibration.errors import CorpusError
from config.settings import get_settings
from game.models import Trajectory


def author_token(player: int) -> str:
    return f"a{player}"


def synthetic_corpus(trajectory: Trajectory, start_year: Optional[int] = None) -> Corpus:
    """
    Corpus of every paper in a trajectory.

    Initial profile entries become papers in `start_year` (default: the
    earliest accepted year); game year y is published in start_year + y.
    """
    settings = get_settings()
    base = settings.min_year if start_year is None else start_year
    if base < settings.min_year or base + trajectory.horizon > settings.max_year:
        raise CorpusError(
            f"A {trajectory.horizon}-year game starting in {base} does not fit "
            f"[{settings.min_year}, {settings.max_year}]"
        )

    records: List[PublicationRecord] = []
    for player, profile in enumerate(trajectory.initial.profiles):
        for i, citations in enumerate(profile):
            records.append(
                PublicationRecord(
                    paper_id=f"init-{player}-{i}", year=base, citations=citations, authors=(author_token(player),)
                )
            )
    for paper in trajectory.papers():
        records.append(
            PublicationRecord(
                paper_id=paper.id,
                year=base + paper.year,
                citations=paper.citations,
                authors=tuple(author_token(a) for a in paper.authors),
            )
        )
    return Corpus(records)
