"""
Finite-horizon overtaking verdicts between utility series.

f overtakes g when limsup(f - g) > 0 and liminf(f - g) >= 0. With a finite
series the limits are read off the tail n > burn_in * N.
"""

import logging
from enum import Enum
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from analysis.errors import SeriesLengthError
from config.settings import get_settings

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

MIN_SERIES_LENGTH = 10


class Verdict(str, Enum):
    FIRST_OVERTAKES_SECOND = "FirstOvertakesSecond"
    SECOND_OVERTAKES_FIRST = "SecondOvertakesFirst"
    NEITHER = "Neither"
    INCONCLUSIVE = "Inconclusive"

    def mirrored(self) -> "Verdict":
        if self is Verdict.FIRST_OVERTAKES_SECOND:
            return Verdict.SECOND_OVERTAKES_FIRST
        if self is Verdict.SECOND_OVERTAKES_FIRST:
            return Verdict.FIRST_OVERTAKES_SECOND
        return self


class OvertakeVerdict(BaseModel):
    """Verdict plus the evidence it was read from."""

    verdict: Verdict
    stabilization_year: int = Field(..., ge=1, description="Year from which the tail condition holds")
    tail_start: int = Field(..., ge=1, description="First year of the tail window")
    tail_min: int
    tail_max: int
    horizon: int

    @property
    def overtakes(self) -> bool:
        return self.verdict is Verdict.FIRST_OVERTAKES_SECOND


def overtakes(
    f: Sequence[int],
    g: Sequence[int],
    burn_in_fraction: Optional[float] = None,
) -> OvertakeVerdict:
    """Compare two utility series indexed by years 1..N."""
    burn_in = get_settings().burn_in_fraction if burn_in_fraction is None else float(burn_in_fraction)
    if not 0 < burn_in < 1:
        raise SeriesLengthError(f"burn_in_fraction must be in (0, 1), got {burn_in}")
    fa = np.asarray(f, dtype=np.int64)
    ga = np.asarray(g, dtype=np.int64)
    if fa.shape != ga.shape:
        raise SeriesLengthError(f"Series lengths differ: {fa.size} vs {ga.size}")
    n = int(fa.size)
    if n < MIN_SERIES_LENGTH:
        raise SeriesLengthError(f"Series need at least {MIN_SERIES_LENGTH} years, got {n}")

    d = fa - ga
    start = int(np.floor(burn_in * n))  # zero-based index of year floor(b*N)+1
    tail = d[start:]
    tail_min, tail_max = int(tail.min()), int(tail.max())

    if tail_min >= 0 and tail_max > 0:
        verdict = Verdict.FIRST_OVERTAKES_SECOND
        bad = np.nonzero(d < 0)[0]
    elif tail_max <= 0 and tail_min < 0:
        verdict = Verdict.SECOND_OVERTAKES_FIRST
        bad = np.nonzero(d > 0)[0]
    elif tail_min < 0 < tail_max:
        verdict = Verdict.NEITHER
        bad = None
    elif np.any(d != 0):
        # tail identically zero, but the series differed earlier
        verdict = Verdict.NEITHER
        bad = None
    else:
        verdict = Verdict.INCONCLUSIVE
        bad = None

    if bad is None:
        stabilization = start + 1
    else:
        stabilization = int(bad[-1]) + 2 if bad.size else 1

    return OvertakeVerdict(
        verdict=verdict,
        stabilization_year=stabilization,
        tail_start=start + 1,
        tail_min=tail_min,
        tail_max=tail_max,
        horizon=n,
    )
