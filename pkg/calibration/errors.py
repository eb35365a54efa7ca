"""
Errors raised while ingesting and analysing publication corpora.
"""


class CorpusError(ValueError):
    """Base class for corpus problems (unreadable files included)."""


class CorpusFormatError(CorpusError):
    """Unknown format or missing required columns."""


class TooManyRejectsError(CorpusError):
    """Too many malformed rows; ingestion was aborted."""

    def __init__(self, message: str, rejects=None):
        super().__init__(message)
        self.rejects = list(rejects or [])


class UnknownAuthorError(CorpusError, KeyError):
    """Author token does not appear in the corpus."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class CorrelationError(ValueError):
    """Rank correlation inputs are mismatched or degenerate."""
