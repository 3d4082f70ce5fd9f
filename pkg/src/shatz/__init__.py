"""Exact cohomology series for moduli of vector bundles on a curve.

Everything is computed in exact integer arithmetic on truncated power
series: the closed product formulas for the full moduli stack, the
recursion over the instability stratification for the semistable series,
and the Betti/Hodge numbers of the stable coarse moduli space in their
valid degree range.
"""

from .hn import (
    BadVertices,
    BundleClass,
    CurveContext,
    HNType,
    NonDecreasingSlopes,
    codim,
    enumerate_hn_types,
    make_hn_type,
    polygon_leq,
)
from .moduli import (
    SsCache,
    SsKey,
    StrataReport,
    bun_hodge_poincare,
    bun_poincare,
    ss_hodge_poincare,
    ss_poincare,
    stratum_series,
    verify_strata_identity,
)
from .series import (
    HodgeSeries,
    TruncatedSeries,
    TruncationMismatch,
    hodge_add,
    hodge_binomial_power,
    hodge_diagonal,
    hodge_geometric_inverse,
    hodge_mul,
    hodge_one,
    hodge_sub,
    hodge_twist,
    series_add,
    series_binomial_power,
    series_coefficient,
    series_geometric_inverse,
    series_mul,
    series_one,
    series_shift,
    series_sub,
    series_zero,
)
from .stable import (
    ModuliNumbers,
    RangeBound,
    complement_codim_bound,
    div_dimension,
    jh_dim_bound,
    jh_tangent_chi,
    moduli_betti,
    moduli_hodge,
    stable_range_bound,
)
from .cachefile import CacheFileWarning, cache_load, cache_store

__version__ = "0.1.0"
