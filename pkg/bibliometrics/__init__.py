"""
Bibliometric indices over citation profiles.
Includes the h-index, h-profile, h-augmenting profile and h-preference orders.
"""

from bibliometrics.errors import CitationOverflowError, NegativeCitationError, ProfileError
from bibliometrics.preference import strongly_h_preferable, weakly_h_preferable
from bibliometrics.profile import (
    DEFAULT_MAX_CITATIONS,
    CitationProfile,
    as_profile,
    h_augmenting_profile,
    h_index,
    h_profile,
)

__all__ = [
    'DEFAULT_MAX_CITATIONS',
    'CitationProfile',
    'as_profile',
    'h_index',
    'h_profile',
    'h_augmenting_profile',
    'weakly_h_preferable',
    'strongly_h_preferable',
    'ProfileError',
    'NegativeCitationError',
    'CitationOverflowError'
]
