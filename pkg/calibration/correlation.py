"""
Spearman rank correlation and the predictor comparison over a corpus.
"""

import logging
from typing import Dict, Optional, Sequence

import numpy as np
import pandas as pd

from calibration.corpus import Corpus
from calibration.curves import qualifying_single_author
from calibration.errors import CorrelationError

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


def spearman(x: Sequence[float], y: Sequence[float]) -> float:
    """Pearson correlation of average ranks (tie-corrected Spearman)."""
    if len(x) != len(y):
        raise CorrelationError(f"Length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 2:
        raise CorrelationError(f"Need at least 2 observations, got {len(x)}")
    rx = pd.Series(x, dtype="float64").rank(method="average").to_numpy()
    ry = pd.Series(y, dtype="float64").rank(method="average").to_numpy()
    if np.all(rx == rx[0]) or np.all(ry == ry[0]):
        raise CorrelationError("Rank correlation is undefined for constant input")
    value = float(np.corrcoef(rx, ry)[0, 1])
    return max(-1.0, min(1.0, value))


def predictor_correlations(corpus: Corpus) -> Dict[str, Optional[float]]:
    """
    Correlate citations of qualifying single-author papers with three
    predictors known at publication time: the author's prior paper count,
    prior citation total and prior h-index. Undefined correlations are None.
    """
    rows = []
    for record in qualifying_single_author(corpus):
        author = record.authors[0]
        prior = corpus.prior_papers(author, record.year)
        rows.append(
            {
                "citations": record.citations,
                "prior_papers": len(prior),
                "prior_citations": sum(prior),
                "prior_h": corpus.author_h_at_year(author, record.year),
            }
        )

    summary: Dict[str, Optional[float]] = {"papers": len(rows)}
    frame = pd.DataFrame(rows, columns=["citations", "prior_papers", "prior_citations", "prior_h"])
    for predictor in ("prior_papers", "prior_citations", "prior_h"):
        try:
            summary[predictor] = spearman(frame[predictor].tolist(), frame["citations"].tolist())
        except CorrelationError as e:
            logger.warning(f"No correlation for {predictor}: {e}")
            summary[predictor] = None
    return summary
