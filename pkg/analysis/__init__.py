"""
Decision procedures over trajectories.
Overtaking verdicts, growth fits, social welfare and the unstable-set search.
"""

from analysis.catalog import DEFAULT_CATALOG, DeviationFamily, build_catalog, parse_family
from analysis.errors import AnalysisError, CatalogError, DegenerateFitError, SeriesLengthError
from analysis.growth import GrowthFit, GrowthModel, fit_growth
from analysis.overtaking import OvertakeVerdict, Verdict, overtakes
from analysis.stability import DeviationWitness, StabilityReport, enumerate_deviations, find_unstable_set
from analysis.welfare import WelfareVariant, social_welfare

__all__ = [
    'Verdict',
    'OvertakeVerdict',
    'overtakes',
    'GrowthModel',
    'GrowthFit',
    'fit_growth',
    'WelfareVariant',
    'social_welfare',
    'DeviationFamily',
    'DEFAULT_CATALOG',
    'build_catalog',
    'parse_family',
    'DeviationWitness',
    'StabilityReport',
    'enumerate_deviations',
    'find_unstable_set',
    'AnalysisError',
    'SeriesLengthError',
    'DegenerateFitError',
    'CatalogError'
]
