"""
Citation profiles and the h-index family.

A profile is a multiset of per-paper citation counts, stored as an ascending
tuple so equality and threshold counting never depend on insertion order.
"""

import logging
from bisect import bisect_left, bisect_right, insort
from typing import Iterable, Iterator, Optional, Tuple

from bibliometrics.errors import CitationOverflowError, NegativeCitationError, ProfileError

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

DEFAULT_MAX_CITATIONS = 2**31 - 1


def _check_count(value: int, max_citations: int) -> int:
    try:
        count = int(value)
    except (TypeError, ValueError) as e:
        raise ProfileError(f"Citation count must be an integer, got {value!r}") from e
    if count != value:
        raise ProfileError(f"Citation count must be an integer, got {value!r}")
    if count < 0:
        raise NegativeCitationError(f"Citation count must be non-negative, got {count}")
    if count > max_citations:
        raise CitationOverflowError(f"Citation count {count} exceeds maximum {max_citations}")
    return count


class CitationProfile:
    """Immutable multiset of citation counts."""

    __slots__ = ("_counts",)

    def __init__(self, counts: Iterable[int] = (), max_citations: int = DEFAULT_MAX_CITATIONS):
        self._counts: Tuple[int, ...] = tuple(sorted(_check_count(c, max_citations) for c in counts))

    @classmethod
    def _from_sorted(cls, counts: Tuple[int, ...]) -> "CitationProfile":
        profile = cls.__new__(cls)
        profile._counts = counts
        return profile

    @property
    def counts(self) -> Tuple[int, ...]:
        """Citation counts in ascending order."""
        return self._counts

    def __len__(self) -> int:
        return len(self._counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CitationProfile):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(self._counts)

    def __repr__(self) -> str:
        return f"CitationProfile({list(self._counts)})"

    def count_at_least(self, threshold: int) -> int:
        """Number of papers with at least `threshold` citations."""
        return len(self._counts) - bisect_left(self._counts, threshold)

    def add(self, *values: int, max_citations: int = DEFAULT_MAX_CITATIONS) -> "CitationProfile":
        """Return a new profile with `values` appended."""
        if not values:
            return self
        counts = list(self._counts)
        for value in values:
            insort(counts, _check_count(value, max_citations))
        return CitationProfile._from_sorted(tuple(counts))

    def is_submultiset_of(self, other: "CitationProfile") -> bool:
        """True when every count appears in `other` at least as often."""
        remaining = list(other.counts)
        for value in self._counts:
            idx = bisect_left(remaining, value)
            if idx == len(remaining) or remaining[idx] != value:
                return False
            remaining.pop(idx)
        return True


def as_profile(values: "CitationProfile | Iterable[int]", max_citations: Optional[int] = None) -> CitationProfile:
    """Coerce an iterable of counts into a CitationProfile."""
    if isinstance(values, CitationProfile):
        return values
    return CitationProfile(values, max_citations=max_citations or DEFAULT_MAX_CITATIONS)


def h_index(profile: "CitationProfile | Iterable[int]") -> int:
    """Largest h such that at least h papers have h or more citations."""
    profile = as_profile(profile)
    lo, hi = 0, len(profile)
    # count_at_least(h) - h is non-increasing in h
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if profile.count_at_least(mid) >= mid:
            lo = mid
        else:
            hi = mid - 1
    return lo


def h_profile(profile: "CitationProfile | Iterable[int]") -> CitationProfile:
    """Sub-multiset of counts greater than or equal to the h-index."""
    profile = as_profile(profile)
    h = h_index(profile)
    return CitationProfile._from_sorted(profile.counts[bisect_left(profile.counts, h):])


def h_augmenting_profile(profile: "CitationProfile | Iterable[int]") -> CitationProfile:
    """Sub-multiset of counts strictly greater than the h-index."""
    profile = as_profile(profile)
    h = h_index(profile)
    return CitationProfile._from_sorted(profile.counts[bisect_right(profile.counts, h):])
