"""Independent brute-force implementations used as test oracles.

Everything here is deliberately primitive: plain coefficient lists,
schoolbook convolution, exhaustive searches.  Nothing imports from the
package under test.
"""

import itertools
from math import comb


def poly_mul(a, b, n):
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def poly_pow(a, m, n):
    out = [1] + [0] * n
    for _ in range(m):
        out = poly_mul(out, a, n)
    return out


def one_plus_tpow(a, m, n):
    """(1 + t^a)^m expanded by repeated multiplication."""
    base = [0] * (n + 1)
    base[0] = 1
    if a <= n:
        base[a] = 1
    return poly_pow(base, m, n)


def geometric(a, n):
    """1/(1 - t^a) as the explicit sum of powers."""
    out = [0] * (n + 1)
    k = 0
    while a * k <= n:
        out[a * k] = 1
        k += 1
    return out


def stack_series(r, g, n):
    """Brute-force expansion of the closed product formula for the full stack."""
    out = [1] + [0] * n
    for j in range(1, r + 1):
        out = poly_mul(out, one_plus_tpow(2 * j - 1, 2 * g, n), n)
    out = poly_mul(out, geometric(2 * r, n), n)
    for j in range(1, r):
        out = poly_mul(out, poly_mul(geometric(2 * j, n), geometric(2 * j, n), n), n)
    return out


def coprime_rank2_oracle(g, n):
    """(1+t)^2g [ (1+t^3)^2g - t^2g (1+t)^2g ] / [ (1-t^2)(1-t^4) ]."""
    a = one_plus_tpow(1, 2 * g, n)
    b = one_plus_tpow(3, 2 * g, n)
    shifted = [0] * (n + 1)
    for i, x in enumerate(a):
        if i + 2 * g <= n:
            shifted[i + 2 * g] = x
    num = poly_mul(a, [x - y for x, y in zip(b, shifted)], n)
    return poly_mul(poly_mul(num, geometric(2, n), n), geometric(4, n), n)


def compositions(total):
    """Ordered tuples of positive integers summing to ``total``."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def slopes_strictly_decrease(ranks, degrees):
    return all(
        degrees[i] * ranks[i + 1] > degrees[i + 1] * ranks[i]
        for i in range(len(ranks) - 1)
    )


def pairwise_codim(ranks, degrees, g):
    total = 0
    for i in range(len(ranks)):
        for j in range(i + 1, len(ranks)):
            total += ranks[j] * degrees[i] - ranks[i] * degrees[j]
            total += (g - 1) * ranks[i] * ranks[j]
    return total


def brute_force_hn_types(r, d, g, cmax):
    """Exhaustive search over segment decompositions, degrees in the window
    |d'_i| <= |d| + cmax.  Returns sorted (segments, codim) pairs, non-trivial
    types only."""
    window = abs(d) + cmax
    found = []
    for ranks in compositions(r):
        if len(ranks) < 2:
            continue
        for degrees in itertools.product(
            range(-window, window + 1), repeat=len(ranks)
        ):
            if sum(degrees) != d:
                continue
            if not slopes_strictly_decrease(ranks, degrees):
                continue
            c = pairwise_codim(ranks, degrees, g)
            if c <= cmax:
                found.append((tuple(zip(ranks, degrees)), c))
    return sorted(found, key=lambda pair: (pair[1], pair[0]))


def binomial(m, k):
    return comb(m, k)
