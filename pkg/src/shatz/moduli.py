"""Poincare and Hodge-Poincare series of the moduli stack and its strata.

The full stack of rank-r bundles has the closed product formula

    P(t) = prod_{j=1..r} (1+t^(2j-1))^(2g)
           / [ (1-t^(2r)) * prod_{j=1..r-1} (1-t^(2j))^2 ]

independent of the degree.  Its two-variable refinement replaces each factor
(1+t^(2j-1))^(2g) by (1+x^j y^(j-1))^g (1+x^(j-1) y^j)^g and each (1-t^(2j))
by (1-x^j y^j); specializing x = y = t recovers P(t) exactly (the cohomology
is pure, so this diagonal identity is a hard internal check, not a heuristic).

The stack is stratified by instability type.  The stratum of type P is a
product of semistable pieces, one per segment, and sits in codimension d_P,
which shifts its contribution into degree 2*d_P:

    P(t) = sum over Shatz polygons P of  t^(2 d_P) * prod_i ss(r'_i, d'_i)(t)

Solving for the trivial stratum gives the recursion computing the semistable
series ss(r, d).  Truncation at order N is what makes the sum finite: a
stratum with 2*d_P > N contributes nothing below the truncation and is
dropped entirely -- this is the only finiteness mechanism, and it is exact,
not an approximation, because the stratum's contribution starts in degree
2*d_P.  On the two-variable side the codimension shift is the twist (xy)^d_P,
the unique choice compatible with the diagonal specialization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hn import BundleClass, CurveContext, HNType, enumerate_hn_types
from .series import (
    HodgeSeries,
    TruncatedSeries,
    hodge_binomial_power,
    hodge_geometric_inverse,
    hodge_mul,
    hodge_one,
    hodge_sub,
    hodge_twist,
    series_binomial_power,
    series_geometric_inverse,
    series_mul,
    series_one,
    series_shift,
    series_sub,
)


@dataclass(frozen=True)
class SsKey:
    """Cache key for a semistable series: class, genus and truncation order."""

    rank: int
    degree: int
    genus: int
    truncation: int


class SsCache:
    """Memo for semistable series, one- and two-variable sides keyed alike.

    Entries are deterministic functions of their key, so concurrent callers
    may race benignly; ``setdefault`` keeps a single canonical value per key.
    """

    def __init__(self):
        self.poincare: dict[SsKey, TruncatedSeries] = {}
        self.hodge: dict[SsKey, HodgeSeries] = {}


@dataclass(frozen=True)
class StrataReport:
    """Outcome of reassembling the stratum sum against the closed formula."""

    passed: bool
    residual: TruncatedSeries


def bun_poincare(rank: int, ctx: CurveContext, truncation: int) -> TruncatedSeries:
    """Poincare series of the full moduli stack, truncated at the given order."""
    if rank < 1:
        raise ValueError("rank must be positive")
    g = ctx.genus
    out = series_one(truncation)
    for j in range(1, rank + 1):
        out = series_mul(out, series_binomial_power(2 * j - 1, 2 * g, truncation))
    out = series_mul(out, series_geometric_inverse(2 * rank, truncation))
    for j in range(1, rank):
        inv = series_geometric_inverse(2 * j, truncation)
        out = series_mul(series_mul(out, inv), inv)
    return out


def bun_hodge_poincare(rank: int, ctx: CurveContext, truncation: int) -> HodgeSeries:
    """Hodge-Poincare series of the full stack, truncated by total degree."""
    if rank < 1:
        raise ValueError("rank must be positive")
    g = ctx.genus
    out = hodge_one(truncation)
    for j in range(1, rank + 1):
        out = hodge_mul(out, hodge_binomial_power(j, j - 1, g, truncation))
        out = hodge_mul(out, hodge_binomial_power(j - 1, j, g, truncation))
    out = hodge_mul(out, hodge_geometric_inverse(rank, rank, truncation))
    for i in range(1, rank):
        inv = hodge_geometric_inverse(i, i, truncation)
        out = hodge_mul(hodge_mul(out, inv), inv)
    return out


def ss_poincare(
    bundle: BundleClass,
    ctx: CurveContext,
    truncation: int,
    cache: SsCache | None = None,
    normalize_degree: bool = False,
) -> TruncatedSeries:
    """Poincare series of the semistable stratum of (rank, degree).

    Recursion: the full-stack series minus, for every non-trivial type with
    2*d_P <= N, the shifted product of the semistable series of its segments.
    Rank 1 is the base case (every line bundle is semistable).

    ``normalize_degree`` folds d to d mod r before computing; the series is
    invariant under d -> d + r (tested, not assumed), but raw evaluation is
    the default.
    """
    if cache is None:
        cache = SsCache()
    degree = bundle.degree % bundle.rank if normalize_degree else bundle.degree
    return _ss_poincare(bundle.rank, degree, ctx, truncation, cache)


def _ss_poincare(rank, degree, ctx, truncation, cache) -> TruncatedSeries:
    key = SsKey(rank, degree, ctx.genus, truncation)
    hit = cache.poincare.get(key)
    if hit is not None:
        return hit
    if rank == 1:
        value = bun_poincare(1, ctx, truncation)
    else:
        value = bun_poincare(rank, ctx, truncation)
        strata = enumerate_hn_types(
            BundleClass(rank, degree), ctx, truncation // 2
        )
        for hn_type, d_p in strata:
            piece = series_one(truncation)
            for r, d in hn_type.segments:
                piece = series_mul(piece, _ss_poincare(r, d, ctx, truncation, cache))
            value = series_sub(value, series_shift(piece, 2 * d_p))
    return cache.poincare.setdefault(key, value)


def ss_hodge_poincare(
    bundle: BundleClass,
    ctx: CurveContext,
    truncation: int,
    cache: SsCache | None = None,
    normalize_degree: bool = False,
) -> HodgeSeries:
    """Two-variable analogue of ss_poincare; the shift becomes a twist by (xy)^d_P."""
    if cache is None:
        cache = SsCache()
    degree = bundle.degree % bundle.rank if normalize_degree else bundle.degree
    return _ss_hodge(bundle.rank, degree, ctx, truncation, cache)


def _ss_hodge(rank, degree, ctx, truncation, cache) -> HodgeSeries:
    key = SsKey(rank, degree, ctx.genus, truncation)
    hit = cache.hodge.get(key)
    if hit is not None:
        return hit
    if rank == 1:
        value = bun_hodge_poincare(1, ctx, truncation)
    else:
        value = bun_hodge_poincare(rank, ctx, truncation)
        strata = enumerate_hn_types(
            BundleClass(rank, degree), ctx, truncation // 2
        )
        for hn_type, d_p in strata:
            piece = hodge_one(truncation)
            for r, d in hn_type.segments:
                piece = hodge_mul(piece, _ss_hodge(r, d, ctx, truncation, cache))
            value = hodge_sub(value, hodge_twist(piece, d_p))
    return cache.hodge.setdefault(key, value)


def stratum_series(
    hn_type: HNType,
    ctx: CurveContext,
    truncation: int,
    cache: SsCache | None = None,
) -> TruncatedSeries:
    """Poincare series of one stratum: the product of its segments' semistable
    series, without the codimension shift (the shift belongs to the assembly)."""
    if cache is None:
        cache = SsCache()
    out = series_one(truncation)
    for r, d in hn_type.segments:
        out = series_mul(out, _ss_poincare(r, d, ctx, truncation, cache))
    return out


def verify_strata_identity(
    bundle: BundleClass,
    ctx: CurveContext,
    truncation: int,
    cache: SsCache | None = None,
    strata: list[tuple[HNType, int]] | None = None,
) -> StrataReport:
    """Reassemble sum_P t^(2 d_P) * stratum_series(P) and compare with the
    closed formula for the full stack.

    A non-zero residual is reported, never raised.  ``strata`` overrides the
    enumerated (type, codim) list, which lets tests check that a perturbed
    codimension is detected.
    """
    if cache is None:
        cache = SsCache()
    if strata is None:
        strata = enumerate_hn_types(bundle, ctx, truncation // 2)
    total = ss_poincare(bundle, ctx, truncation, cache)
    for hn_type, d_p in strata:
        if 2 * d_p > truncation:
            continue
        piece = stratum_series(hn_type, ctx, truncation, cache)
        total = total + series_shift(piece, 2 * d_p)
    residual = series_sub(bun_poincare(bundle.rank, ctx, truncation), total)
    return StrataReport(passed=residual.is_zero(), residual=residual)
