"""
Errors raised while building citation profiles.
"""


class ProfileError(ValueError):
    """Base class for invalid citation profiles."""


class NegativeCitationError(ProfileError):
    """A citation count below zero was supplied."""


class CitationOverflowError(ProfileError):
    """A citation count exceeded the configured maximum."""
