"""
Errors raised by the analysis layer.
"""


class AnalysisError(ValueError):
    """Base class for analysis input problems."""


class SeriesLengthError(AnalysisError):
    """Series are too short or of different lengths."""


class DegenerateFitError(AnalysisError):
    """A growth fit cannot be computed for the given series."""


class CatalogError(AnalysisError):
    """A deviation catalog is empty or names unknown families."""
