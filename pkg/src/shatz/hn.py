"""Shatz polygons: instability types of bundles and their stratum codimensions.

A bundle of rank r and degree d on a curve of genus g >= 2 has a canonical
filtration whose subquotients have strictly decreasing slopes.  The rank and
degree data of that filtration is a concave lattice path from (0, 0) to
(r, d) -- a Shatz polygon -- stored here by its segments (r'_i, d'_i).  This
module validates polygons, computes the codimension of the corresponding
stratum of the moduli problem, enumerates all polygons up to a codimension
bound, and compares polygons in the dominance partial order.

All slope comparisons are done by cross-multiplication; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class BadVertices(ValueError):
    """Vertex list does not start at (0,0) with strictly increasing ranks."""


class NonDecreasingSlopes(ValueError):
    """Segment slopes fail to strictly decrease."""


@dataclass(frozen=True)
class CurveContext:
    """Genus of the base curve.  Everything here assumes genus >= 2."""

    genus: int

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError(f"genus must be at least 2, got {self.genus}")


@dataclass(frozen=True)
class BundleClass:
    """A (rank, degree) pair labelling a moduli problem."""

    rank: int
    degree: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")


@dataclass(frozen=True)
class HNType:
    """Shatz polygon stored as segments (r'_i, d'_i) with strictly decreasing slopes."""

    segments: tuple[tuple[int, int], ...]

    def __post_init__(self):
        segs = tuple((int(r), int(d)) for r, d in self.segments)
        object.__setattr__(self, "segments", segs)
        if not segs:
            raise ValueError("need at least one segment")
        if any(r < 1 for r, _ in segs):
            raise ValueError("segment ranks must be positive")
        for (r1, d1), (r2, d2) in zip(segs, segs[1:]):
            # d1/r1 > d2/r2  <=>  d1*r2 > d2*r1  (ranks positive)
            if d1 * r2 <= d2 * r1:
                raise NonDecreasingSlopes(
                    f"slope of ({r1},{d1}) not above slope of ({r2},{d2})"
                )

    @property
    def rank(self) -> int:
        return sum(r for r, _ in self.segments)

    @property
    def degree(self) -> int:
        return sum(d for _, d in self.segments)

    @property
    def bundle_class(self) -> BundleClass:
        return BundleClass(self.rank, self.degree)

    @property
    def is_trivial(self) -> bool:
        """Single segment: the semistable stratum."""
        return len(self.segments) == 1

    def vertices(self) -> list[tuple[int, int]]:
        """Cumulative (rank, degree) breakpoints, starting at (0, 0)."""
        out = [(0, 0)]
        r = d = 0
        for dr, dd in self.segments:
            r += dr
            d += dd
            out.append((r, d))
        return out


def make_hn_type(vertices) -> HNType:
    """Build an HNType from cumulative vertices [(0,0), (r_1,d_1), ..., (r,d)]."""
    vertices = [(int(r), int(d)) for r, d in vertices]
    if len(vertices) < 2:
        raise BadVertices("need the origin and at least one further vertex")
    if vertices[0] != (0, 0):
        raise BadVertices(f"first vertex must be (0, 0), got {vertices[0]}")
    ranks = [r for r, _ in vertices]
    if any(a >= b for a, b in zip(ranks, ranks[1:])):
        raise BadVertices("ranks must strictly increase along the polygon")
    segments = [
        (r2 - r1, d2 - d1) for (r1, d1), (r2, d2) in zip(vertices, vertices[1:])
    ]
    return HNType(tuple(segments))


def codim(hn_type: HNType, ctx: CurveContext) -> int:
    """Codimension of the stratum with the given instability type.

    Over segment data the formula is

        sum_{i<j} [ (r'_j d'_i - r'_i d'_j) + (g-1) r'_i r'_j ]

    i.e. sum over segment pairs of r'_i r'_j (mu'_i - mu'_j + g - 1) with
    mu' the segment slopes.  Strict slope descent makes every pairwise term
    a positive integer, so the codimension of a non-trivial type is >= 1
    (and 0 exactly for the trivial single-segment type).
    """
    g = ctx.genus
    segs = hn_type.segments
    total = 0
    for i in range(len(segs)):
        ri, di = segs[i]
        for j in range(i + 1, len(segs)):
            rj, dj = segs[j]
            total += (rj * di - ri * dj) + (g - 1) * ri * rj
    return total


def _leading_cost(r1: int, d1: int, rank: int, degree: int, g: int) -> int:
    # Codimension contribution of a leading segment (r1, d1) against the
    # whole remainder (rank - r1, degree - d1), independent of how the
    # remainder later splits.
    return rank * d1 - r1 * degree + (g - 1) * r1 * (rank - r1)


def _split_tails(rank, degree, num, den, budget, g):
    """Yield segment tuples decomposing (rank, degree) with slopes strictly
    below num/den, strictly decreasing, and total pairwise codimension within
    budget."""
    # stop here: one remaining segment, costing nothing further
    if degree * den < num * rank:
        yield ((rank, degree),)
    for r1 in range(1, rank):
        # slope above the average of what remains: rank*d1 - r1*degree >= 1
        lo = -((-(r1 * degree + 1)) // rank)
        # leading cost within budget
        hi_budget = (budget - (g - 1) * r1 * (rank - r1) + r1 * degree) // rank
        # slope strictly below the previous segment: d1*den < num*r1
        hi_slope = -((-num * r1) // den) - 1
        for d1 in range(lo, min(hi_budget, hi_slope) + 1):
            spent = _leading_cost(r1, d1, rank, degree, g)
            for tail in _split_tails(
                rank - r1, degree - d1, d1, r1, budget - spent, g
            ):
                yield ((r1, d1),) + tail


def enumerate_hn_types(
    bundle: BundleClass, ctx: CurveContext, max_codim: int
) -> list[tuple[HNType, int]]:
    """All non-trivial Shatz polygons for (r, d) of codimension <= max_codim.

    The polygon set is infinite, but with genus >= 2 every segment pair
    costs at least g in codimension (a positive slope gap plus g - 1), so
    the bound cuts the search to a finite tree: pick the leading segment
    (its slope must sit strictly above the running average of the
    remainder), charge its pairwise cost against the budget, and recurse on
    the remainder.  The trivial type is excluded; callers handle the
    semistable stratum separately.

    Returns (type, codim) pairs sorted by (codim, segments).
    """
    if max_codim < 0:
        raise ValueError("max_codim must be non-negative")
    g = ctx.genus
    rank, degree = bundle.rank, bundle.degree
    found = []
    for r1 in range(1, rank):
        lo = -((-(r1 * degree + 1)) // rank)
        hi = (max_codim - (g - 1) * r1 * (rank - r1) + r1 * degree) // rank
        for d1 in range(lo, hi + 1):
            spent = _leading_cost(r1, d1, rank, degree, g)
            for tail in _split_tails(
                rank - r1, degree - d1, d1, r1, max_codim - spent, g
            ):
                hn = HNType(((r1, d1),) + tail)
                found.append((hn, codim(hn, ctx)))
    found.sort(key=lambda pair: (pair[1], pair[0].segments))
    return found


def polygon_leq(p: HNType, q: HNType) -> bool:
    """Dominance order: the polygon of p lies on or below that of q.

    Both polygons are piecewise linear with breakpoints at integer ranks,
    so comparing exact rational values at the integer abscissae 0..r is
    sufficient.
    """
    if (p.rank, p.degree) != (q.rank, q.degree):
        raise ValueError(
            f"cannot compare polygons of classes ({p.rank},{p.degree}) "
            f"and ({q.rank},{q.degree})"
        )

    def heights(t: HNType) -> list[Fraction]:
        vals = []
        verts = t.vertices()
        k = 0
        for x in range(t.rank + 1):
            while verts[k + 1][0] < x:
                k += 1
            (r0, d0), (r1, d1) = verts[k], verts[k + 1]
            vals.append(Fraction(d0) + Fraction(d1 - d0, r1 - r0) * (x - r0))
        return vals

    return all(a <= b for a, b in zip(heights(p), heights(q)))
