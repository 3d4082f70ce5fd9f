"""Truncated power series with exact integer coefficients.

One-variable series in t are stored densely (a coefficient for every degree
up to the truncation order), two-variable series in (x, y) sparsely (a map
from exponent pairs to coefficients, truncated by total degree p+q).  All
coefficients are Python ints, so there is no overflow and no floating point
anywhere.  Values are immutable after construction; operations mixing
different truncation orders raise instead of silently re-truncating.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb


class TruncationMismatch(ValueError):
    """Operands were truncated at different orders."""


def _check_same_truncation(lhs, rhs) -> int:
    if lhs.truncation != rhs.truncation:
        raise TruncationMismatch(
            f"truncation mismatch: {lhs.truncation} vs {rhs.truncation}"
        )
    return lhs.truncation


@dataclass(frozen=True)
class TruncatedSeries:
    """Series a_0 + a_1 t + ... + a_N t^N, exact up to and including t^N."""

    truncation: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.truncation < 0:
            raise ValueError("truncation must be non-negative")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != self.truncation + 1:
            raise ValueError(
                f"need {self.truncation + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs, truncation: int | None = None) -> "TruncatedSeries":
        """Build a series from a coefficient list, zero-padding up to the order."""
        coeffs = list(coeffs)
        if truncation is None:
            truncation = len(coeffs) - 1
        if len(coeffs) > truncation + 1:
            raise ValueError("more coefficients than the truncation allows")
        coeffs += [0] * (truncation + 1 - len(coeffs))
        return cls(truncation, tuple(coeffs))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_sub(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries(N={self.truncation}, {list(self.coeffs)})"


def series_zero(truncation: int) -> TruncatedSeries:
    return TruncatedSeries(truncation, (0,) * (truncation + 1))


def series_one(truncation: int) -> TruncatedSeries:
    return TruncatedSeries(truncation, (1,) + (0,) * truncation)


def series_binomial_power(a: int, m: int, truncation: int) -> TruncatedSeries:
    """(1 + t^a)^m truncated: coefficient binomial(m, k) at t^(a*k)."""
    if a < 1:
        raise ValueError("exponent a must be positive")
    if m < 0:
        raise ValueError("power m must be non-negative")
    coeffs = [0] * (truncation + 1)
    k = 0
    while a * k <= truncation and k <= m:
        coeffs[a * k] = comb(m, k)
        k += 1
    return TruncatedSeries(truncation, tuple(coeffs))


def series_geometric_inverse(a: int, truncation: int) -> TruncatedSeries:
    """1/(1 - t^a) truncated: coefficient 1 at every multiple of a."""
    if a < 1:
        raise ValueError("exponent a must be positive")
    coeffs = [0] * (truncation + 1)
    for i in range(0, truncation + 1, a):
        coeffs[i] = 1
    return TruncatedSeries(truncation, tuple(coeffs))


def series_add(lhs: TruncatedSeries, rhs: TruncatedSeries) -> TruncatedSeries:
    n = _check_same_truncation(lhs, rhs)
    return TruncatedSeries(n, tuple(a + b for a, b in zip(lhs.coeffs, rhs.coeffs)))


def series_sub(lhs: TruncatedSeries, rhs: TruncatedSeries) -> TruncatedSeries:
    n = _check_same_truncation(lhs, rhs)
    return TruncatedSeries(n, tuple(a - b for a, b in zip(lhs.coeffs, rhs.coeffs)))


def series_mul(lhs: TruncatedSeries, rhs: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the (common) order."""
    n = _check_same_truncation(lhs, rhs)
    out = [0] * (n + 1)
    for i, a in enumerate(lhs.coeffs):
        if a == 0:
            continue
        for j in range(n + 1 - i):
            b = rhs.coeffs[j]
            if b:
                out[i + j] += a * b
    return TruncatedSeries(n, tuple(out))


def series_shift(s: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by t^k; terms pushed past the truncation order are dropped."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    n = s.truncation
    return TruncatedSeries(n, (0,) * min(k, n + 1) + s.coeffs[: max(0, n + 1 - k)])


def series_coefficient(s: TruncatedSeries, i: int) -> int:
    if not 0 <= i <= s.truncation:
        raise IndexError(f"degree {i} outside truncation order {s.truncation}")
    return s.coeffs[i]


@dataclass(frozen=True)
class HodgeSeries:
    """Series in x, y truncated by total degree; terms maps (p, q) -> coefficient.

    Keys with zero coefficient are dropped and the remaining keys stored in
    (p+q, p) order, so equal series compare equal and iteration order is
    deterministic.
    """

    truncation: int
    terms: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.truncation < 0:
            raise ValueError("truncation must be non-negative")
        clean = {}
        for (p, q), c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0][0])):
            if p < 0 or q < 0:
                raise ValueError(f"negative exponents {(p, q)}")
            if p + q > self.truncation:
                raise ValueError(f"term {(p, q)} exceeds total degree {self.truncation}")
            if c:
                clean[(p, q)] = int(c)
        object.__setattr__(self, "terms", clean)

    def coefficient(self, p: int, q: int) -> int:
        return self.terms.get((p, q), 0)

    def __add__(self, other: "HodgeSeries") -> "HodgeSeries":
        return hodge_add(self, other)

    def __sub__(self, other: "HodgeSeries") -> "HodgeSeries":
        return hodge_sub(self, other)

    def __mul__(self, other: "HodgeSeries") -> "HodgeSeries":
        return hodge_mul(self, other)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"HodgeSeries(N={self.truncation}, {self.terms})"


def hodge_one(truncation: int) -> HodgeSeries:
    return HodgeSeries(truncation, {(0, 0): 1})


def hodge_binomial_power(p: int, q: int, m: int, truncation: int) -> HodgeSeries:
    """(1 + x^p y^q)^m truncated by total degree."""
    if p < 0 or q < 0 or p + q == 0:
        raise ValueError("monomial exponents must be non-negative, not both zero")
    terms = {}
    k = 0
    while k * (p + q) <= truncation and k <= m:
        terms[(p * k, q * k)] = comb(m, k)
        k += 1
    return HodgeSeries(truncation, terms)


def hodge_geometric_inverse(p: int, q: int, truncation: int) -> HodgeSeries:
    """1/(1 - x^p y^q) truncated by total degree."""
    if p < 0 or q < 0 or p + q == 0:
        raise ValueError("monomial exponents must be non-negative, not both zero")
    terms = {}
    k = 0
    while k * (p + q) <= truncation:
        terms[(p * k, q * k)] = 1
        k += 1
    return HodgeSeries(truncation, terms)


def hodge_add(lhs: HodgeSeries, rhs: HodgeSeries) -> HodgeSeries:
    n = _check_same_truncation(lhs, rhs)
    out = dict(lhs.terms)
    for key, c in rhs.terms.items():
        out[key] = out.get(key, 0) + c
    return HodgeSeries(n, out)


def hodge_sub(lhs: HodgeSeries, rhs: HodgeSeries) -> HodgeSeries:
    n = _check_same_truncation(lhs, rhs)
    out = dict(lhs.terms)
    for key, c in rhs.terms.items():
        out[key] = out.get(key, 0) - c
    return HodgeSeries(n, out)


def hodge_mul(lhs: HodgeSeries, rhs: HodgeSeries) -> HodgeSeries:
    """Product discarding every term of total degree above the truncation."""
    n = _check_same_truncation(lhs, rhs)
    out: dict[tuple[int, int], int] = {}
    for (p, q), a in lhs.terms.items():
        rest = n - p - q
        for (u, v), b in rhs.terms.items():
            if u + v <= rest:
                key = (p + u, q + v)
                out[key] = out.get(key, 0) + a * b
    return HodgeSeries(n, out)


def hodge_twist(s: HodgeSeries, k: int) -> HodgeSeries:
    """Multiply by (xy)^k, dropping terms pushed past the truncation."""
    if k < 0:
        raise ValueError("twist must be non-negative")
    n = s.truncation
    out = {
        (p + k, q + k): c for (p, q), c in s.terms.items() if p + q + 2 * k <= n
    }
    return HodgeSeries(n, out)


def hodge_diagonal(s: HodgeSeries) -> TruncatedSeries:
    """Specialize x = y = t: the coefficient of t^n collects all (p, q) with p+q = n."""
    coeffs = [0] * (s.truncation + 1)
    for (p, q), c in s.terms.items():
        coeffs[p + q] += c
    return TruncatedSeries(s.truncation, tuple(coeffs))
