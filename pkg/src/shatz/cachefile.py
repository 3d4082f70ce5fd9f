"""Persistence for semistable-series caches: the ``shatz-cache/1`` format.

A cache file holds series for exactly one (genus, truncation) pair::

    shatz-cache/1
    genus 2
    truncation 4
    1:0 1 4 7 8 8
    2:1 1 4 8 16 32

Line 1 is the format tag, then the genus and truncation headers, then one
line per entry: the key ``r:d`` followed by the truncation+1 coefficients as
decimal strings (coefficients routinely exceed 64 bits, so text is the only
safe encoding).  Entries are written sorted by (r, d).

Loading never raises: a missing file yields a cold cache silently, and any
mismatch (format tag, genus, truncation) or malformed content yields a cold
cache with a ``CacheFileWarning`` -- stale data is never silently mixed into
a run.
"""

from __future__ import annotations

import os
import warnings

from .hn import CurveContext
from .moduli import SsCache, SsKey
from .series import TruncatedSeries

FORMAT_TAG = "shatz-cache/1"


class CacheFileWarning(UserWarning):
    """A cache file was ignored (wrong version, context, or malformed)."""


def _ignore(path, reason) -> SsCache:
    warnings.warn(f"ignoring cache {path}: {reason}", CacheFileWarning, stacklevel=3)
    return SsCache()


def cache_load(path: str, ctx: CurveContext, truncation: int) -> SsCache:
    """Load a cache for the given run context; cold on any mismatch."""
    if not os.path.exists(path):
        return SsCache()
    try:
        with open(path, encoding="ascii") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        return _ignore(path, f"unreadable ({exc})")

    if not lines or lines[0].strip() != FORMAT_TAG:
        return _ignore(path, "unsupported format tag")
    try:
        header = dict(line.split() for line in lines[1:3])
        genus = int(header["genus"])
        file_trunc = int(header["truncation"])
    except (ValueError, KeyError):
        return _ignore(path, "malformed header")
    if genus != ctx.genus:
        return _ignore(path, f"genus {genus} does not match run genus {ctx.genus}")
    if file_trunc != truncation:
        return _ignore(
            path, f"truncation {file_trunc} does not match run truncation {truncation}"
        )

    cache = SsCache()
    for line in lines[3:]:
        if not line.strip():
            continue
        try:
            key_part, *coeff_part = line.split()
            r_str, d_str = key_part.split(":")
            key = SsKey(int(r_str), int(d_str), genus, truncation)
            coeffs = [int(c) for c in coeff_part]
            if len(coeffs) != truncation + 1:
                raise ValueError("coefficient count")
        except ValueError:
            return _ignore(path, f"malformed entry line {line!r}")
        cache.poincare[key] = TruncatedSeries(truncation, tuple(coeffs))
    return cache


def cache_store(path: str, cache: SsCache, ctx: CurveContext, truncation: int) -> None:
    """Write the entries matching (genus, truncation) in the canonical layout."""
    entries = sorted(
        (
            (key, series)
            for key, series in cache.poincare.items()
            if key.genus == ctx.genus and key.truncation == truncation
        ),
        key=lambda kv: (kv[0].rank, kv[0].degree),
    )
    lines = [FORMAT_TAG, f"genus {ctx.genus}", f"truncation {truncation}"]
    for key, series in entries:
        coeffs = " ".join(str(c) for c in series.coeffs)
        lines.append(f"{key.rank}:{key.degree} {coeffs}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")
