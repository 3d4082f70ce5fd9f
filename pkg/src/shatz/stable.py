"""Betti and Hodge numbers of the coarse moduli space of stable bundles.

The stable locus sits inside the full moduli problem with complement of
codimension at least (g-1)(r-1), so in low degrees the cohomology of the
stack and of its stable open substack agree.  Passing from the stack to the
coarse space strips a classifying-stack factor whose series is 1/(1-t^2)
(two-variable: 1/(1-xy)); multiplying by (1-t^2) therefore converts stack
coefficients into coarse-space Betti numbers:

    b_i(M) = c_i - c_{i-2},        h^{p,q}(M) = H_{p,q} - H_{p-1,q-1}

valid for i = p+q strictly below the range bound.  The default bound is
2(r-1)(g-1); a conservative variant, one degree lower, is the textbook
isomorphism range for a complement of that codimension.  Both are reported.

The degree range rests on a dimension count for the loci of strictly
semistable bundles admitting a stable filtration, bounded via Euler
characteristics of the tangent-space pieces; those counts are exposed here
too.  The dimension bound holds for large twisting degree; the formula is
reported as-is for any positive degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hn import BundleClass, CurveContext
from .moduli import bun_hodge_poincare, bun_poincare


@dataclass(frozen=True)
class RangeBound:
    """Valid-degree bounds for reading off coarse-space cohomology."""

    paper_bound: int
    conservative_bound: int


@dataclass(frozen=True)
class ModuliNumbers:
    """Betti / Hodge numbers of the stable coarse space below ``bound_used``.

    Only non-zero entries are stored.  ``weight_equals_degree`` records that
    each degree-i group is pure of weight i, so row sums of the Hodge table
    are the Betti numbers.
    """

    betti: dict[int, int] = field(default_factory=dict)
    hodge: dict[tuple[int, int], int] = field(default_factory=dict)
    bound_used: int = 0
    weight_equals_degree: bool = True


def stable_range_bound(rank: int, ctx: CurveContext) -> RangeBound:
    """Degree bounds: cohomology is computed for i < 2(r-1)(g-1)."""
    if rank < 1:
        raise ValueError("rank must be positive")
    paper = max(0, 2 * (rank - 1) * (ctx.genus - 1))
    return RangeBound(paper_bound=paper, conservative_bound=max(0, paper - 1))


def _bound(bundle: BundleClass, ctx: CurveContext, conservative: bool) -> int:
    bounds = stable_range_bound(bundle.rank, ctx)
    return bounds.conservative_bound if conservative else bounds.paper_bound


def moduli_betti(
    bundle: BundleClass, ctx: CurveContext, conservative: bool = False
) -> ModuliNumbers:
    """Betti numbers b_i of the stable coarse space for i below the bound.

    b_i = c_i - c_{i-2} where c is the full-stack series; the full series
    (not the semistable one) is the correct comparison object, and the two
    agree in range anyway.  Rank 1 has an empty range and returns an empty
    table, not an error.
    """
    bound = _bound(bundle, ctx, conservative)
    if bound <= 0:
        return ModuliNumbers(bound_used=bound)
    c = bun_poincare(bundle.rank, ctx, bound - 1).coeffs
    betti = {}
    for i in range(bound):
        b = c[i] - (c[i - 2] if i >= 2 else 0)
        if b:
            betti[i] = b
    return ModuliNumbers(betti=betti, bound_used=bound)


def moduli_hodge(
    bundle: BundleClass, ctx: CurveContext, conservative: bool = False
) -> ModuliNumbers:
    """Hodge numbers h^{p,q} for p+q below the bound, with Betti row sums."""
    bound = _bound(bundle, ctx, conservative)
    if bound <= 0:
        return ModuliNumbers(bound_used=bound)
    full = bun_hodge_poincare(bundle.rank, ctx, bound - 1)
    hodge = {}
    betti = {}
    for (p, q), c in full.terms.items():
        h = c - full.coefficient(p - 1, q - 1)
        if h:
            hodge[(p, q)] = h
            betti[p + q] = betti.get(p + q, 0) + h
    return ModuliNumbers(betti=betti, hodge=hodge, bound_used=bound)


def div_dimension(bundle: BundleClass, deg_twist: int) -> int:
    """Dimension r^2 * deg(D) - r*d of the matrix-divisor parameter space."""
    return bundle.rank**2 * deg_twist - bundle.rank * bundle.degree


def jh_dim_bound(bundle: BundleClass, ctx: CurveContext, deg_twist: int) -> int:
    """Upper bound r^2 deg(D) - rd - (g-1)(r-1) for the dimension of the locus
    of semistable flags with stable subquotients.  Valid for deg(D) large."""
    if deg_twist < 1:
        raise ValueError("twisting degree must be positive")
    return div_dimension(bundle, deg_twist) - (ctx.genus - 1) * (bundle.rank - 1)


def complement_codim_bound(bundle: BundleClass, ctx: CurveContext) -> int:
    """Codimension bound (g-1)(r-1) for the unstable-plus-strictly-semistable
    complement; independent of degree and twist."""
    return (ctx.genus - 1) * (bundle.rank - 1)


def jh_tangent_chi(
    bundle: BundleClass, ctx: CurveContext, leading_rank: int, deg_twist: int
) -> tuple[int, int]:
    """Euler characteristics of the two tangent-space pieces for a two-step
    filtration with sub of rank ``leading_rank``.

    First piece:  chi = r1 (r - r1)(1 - g) + r1 r deg(D) - r1 d.
    Second piece: chi = (r - r1) r deg(D) + (r - r)(r - r1)(1 - g) + (r1 - r) d,
    the generic step formula evaluated at the final step r_i = r1, r_{i+1} = r.
    Their sum equals jh_dim_bound for the two-step filtration.
    """
    r, d, g = bundle.rank, bundle.degree, ctx.genus
    r1 = leading_rank
    if not 0 < r1 < r:
        raise ValueError(f"leading rank must satisfy 0 < r1 < {r}, got {r1}")
    chi_sub = r1 * (r - r1) * (1 - g) + r1 * r * deg_twist - r1 * d
    chi_step = (
        (r - r1) * r * deg_twist + (r - r) * (r - r1) * (1 - g) + (r1 - r) * d
    )
    return chi_sub, chi_step
