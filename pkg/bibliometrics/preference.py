"""
Weak and strong h-preference between citation profiles.

Z is weakly h-preferable to Z' when h(Z) >= h(Z') and, for every threshold
z0 > h(Z), Z has at least as many papers with z0 or more citations as Z'.
"""

from typing import Iterable, List

from bibliometrics.profile import CitationProfile, as_profile, h_index


def _thresholds(z: CitationProfile, zp: CitationProfile, floor: int) -> List[int]:
    # Count differences only change at values present in either profile.
    return sorted({v for v in z if v > floor} | {v for v in zp if v > floor})


def weakly_h_preferable(z: "CitationProfile | Iterable[int]", zp: "CitationProfile | Iterable[int]") -> bool:
    """Return True if `z` is weakly h-preferable to `zp`."""
    z, zp = as_profile(z), as_profile(zp)
    hz = h_index(z)
    if hz < h_index(zp):
        return False
    return all(z.count_at_least(t) >= zp.count_at_least(t) for t in _thresholds(z, zp, hz))


def strongly_h_preferable(z: "CitationProfile | Iterable[int]", zp: "CitationProfile | Iterable[int]") -> bool:
    """Return True if `z` is strongly h-preferable to `zp`."""
    z, zp = as_profile(z), as_profile(zp)
    if not weakly_h_preferable(z, zp):
        return False
    hz = h_index(z)
    if hz > h_index(zp):
        return True
    return any(z.count_at_least(t) > zp.count_at_least(t) for t in _thresholds(z, zp, hz))
