"""
Growth-law fits for utility series.
"""

from enum import Enum
from typing import Sequence

import numpy as np
from pydantic import BaseModel

from analysis.errors import DegenerateFitError, SeriesLengthError

MIN_FIT_LENGTH = 100


class GrowthModel(str, Enum):
    POWER = "power"  # c * n^p
    SQRT = "sqrt"  # c * sqrt(n)
    LINEAR = "linear"  # c * n


class GrowthFit(BaseModel):
    model: GrowthModel
    coefficient: float
    exponent: float
    max_relative_residual: float
    tail_start: int


def fit_growth(series: Sequence[int], model: GrowthModel = GrowthModel.POWER) -> GrowthFit:
    """
    Fit the tail half (n > N/2) of a series indexed by years 1..N.

    The power model regresses log(s) on log(n); the fixed-exponent models are
    least squares through the origin.
    """
    model = GrowthModel(model)
    s = np.asarray(series, dtype=np.float64)
    n_total = int(s.size)
    if n_total < MIN_FIT_LENGTH:
        raise SeriesLengthError(f"Growth fits need at least {MIN_FIT_LENGTH} years, got {n_total}")

    start = n_total // 2
    years = np.arange(start + 1, n_total + 1, dtype=np.float64)
    tail = s[start:]
    if np.any(tail <= 0):
        raise DegenerateFitError("Series has non-positive values in the fitted tail")

    if model is GrowthModel.POWER:
        exponent, intercept = np.polyfit(np.log(years), np.log(tail), 1)
        coefficient = float(np.exp(intercept))
    else:
        exponent = 0.5 if model is GrowthModel.SQRT else 1.0
        basis = years ** exponent
        coefficient = float(np.dot(tail, basis) / np.dot(basis, basis))

    fitted = coefficient * years ** exponent
    residual = float(np.max(np.abs(tail - fitted) / tail))
    return GrowthFit(
        model=model,
        coefficient=coefficient,
        exponent=float(exponent),
        max_relative_residual=residual,
        tail_start=start + 1,
    )
