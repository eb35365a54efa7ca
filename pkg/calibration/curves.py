"""
Median-citation curves over a corpus.

Every curve is a DataFrame with columns ``group_key, median, count`` sorted by
group_key. Author h-indices are taken over strictly earlier years.
"""

from typing import Iterable, List, Optional, Tuple

import pandas as pd

from calibration.corpus import Corpus, PublicationRecord
from config.settings import get_settings

CURVE_COLUMNS = ["group_key", "median", "count"]


def _aggregate(pairs: Iterable[Tuple[int, float]], min_group_size: Optional[int]) -> pd.DataFrame:
    minimum = get_settings().min_group_size if min_group_size is None else min_group_size
    frame = pd.DataFrame(list(pairs), columns=["group_key", "value"])
    if frame.empty:
        return pd.DataFrame(columns=CURVE_COLUMNS)
    grouped = frame.groupby("group_key")["value"].agg(["median", "count"]).reset_index()
    grouped = grouped[grouped["count"] >= minimum].astype({"median": "float64", "count": "int64"})
    return grouped[CURVE_COLUMNS].sort_values("group_key").reset_index(drop=True)


def qualifying_single_author(corpus: Corpus) -> List[PublicationRecord]:
    """Single-author papers whose author published nothing else that year."""
    return [
        r for r in corpus
        if len(r.authors) == 1 and corpus.papers_count_in_year(r.authors[0], r.year) == 1
    ]


def single_author_curve(corpus: Corpus, min_group_size: Optional[int] = None) -> pd.DataFrame:
    """Median citations per author h-index."""
    pairs = [
        (corpus.author_h_at_year(r.authors[0], r.year), r.citations)
        for r in qualifying_single_author(corpus)
    ]
    return _aggregate(pairs, min_group_size)


def two_author_curve(corpus: Corpus, min_group_size: Optional[int] = None) -> pd.DataFrame:
    """Median citations per sum of the two coauthors' h-indices."""
    pairs = []
    for r in corpus:
        if len(r.authors) != 2:
            continue
        if any(corpus.papers_count_in_year(a, r.year) != 1 for a in r.authors):
            continue
        pairs.append((sum(corpus.author_h_at_year(a, r.year) for a in r.authors), r.citations))
    return _aggregate(pairs, min_group_size)


def reinvestment_curve(corpus: Corpus, min_group_size: Optional[int] = None) -> pd.DataFrame:
    """
    Median yearly residual per author h-index.

    For author a in year y the residual is the sum over a's papers that year of
    cit(p) minus the coauthors' h-indices. Author-years where some coauthor
    published anything else that year are skipped.
    """
    pairs = []
    for author, year in corpus.author_years():
        papers = corpus.papers_in_year(author, year)
        coauthors = [[b for b in p.authors if b != author] for p in papers]
        if any(corpus.papers_count_in_year(b, year) != 1 for group in coauthors for b in group):
            continue
        residual = sum(
            p.citations - sum(corpus.author_h_at_year(b, year) for b in group)
            for p, group in zip(papers, coauthors)
        )
        pairs.append((corpus.author_h_at_year(author, year), residual))
    return _aggregate(pairs, min_group_size)


def curve_as_map(curve: pd.DataFrame) -> dict:
    """``{group_key: median}`` view of a curve."""
    return {int(k): float(m) for k, m in zip(curve["group_key"], curve["median"])}
