"""Palindrome pattern matching with an FM-index.

Texts and patterns are byte strings (``str`` is UTF-8 encoded).  Infinite
lengths and the INF symbol come back as ``math.inf``; the end marker ``$``
of the F/L columns is 0.
"""

from ._palfm import (
    BuildLimitError,
    FormatError,
    PalFmIndex,
    group_counts,
    lpal,
    lpal_second,
    naive_search,
    pal_match,
    pi,
    spp,
    ssp,
    sspg,
)

__all__ = [
    "BuildLimitError",
    "FormatError",
    "PalFmIndex",
    "group_counts",
    "lpal",
    "lpal_second",
    "naive_search",
    "pal_match",
    "pi",
    "spp",
    "ssp",
    "sspg",
]
