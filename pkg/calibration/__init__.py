"""
Empirical calibration against publication corpora.
Corpus ingestion, median-citation curves and rank correlations.
"""

from calibration.corpus import Corpus, PublicationRecord, RejectedRow, load_corpus
from calibration.correlation import predictor_correlations, spearman
from calibration.curves import curve_as_map, reinvestment_curve, single_author_curve, two_author_curve
from calibration.errors import CorpusError, CorpusFormatError, CorrelationError, TooManyRejectsError, UnknownAuthorError
from calibration.synthetic import synthetic_corpus

__all__ = [
    'PublicationRecord',
    'RejectedRow',
    'Corpus',
    'load_corpus',
    'spearman',
    'predictor_correlations',
    'single_author_curve',
    'two_author_curve',
    'reinvestment_curve',
    'curve_as_map',
    'synthetic_corpus',
    'CorpusError',
    'CorpusFormatError',
    'TooManyRejectsError',
    'UnknownAuthorError',
    'CorrelationError'
]
