import itertools

import pytest

from oracles import stack_series
from shatz.hn import BundleClass, CurveContext, HNType
from shatz.moduli import (
    SsCache,
    SsKey,
    bun_hodge_poincare,
    bun_poincare,
    ss_hodge_poincare,
    ss_poincare,
    stratum_series,
    verify_strata_identity,
)
from shatz.series import hodge_diagonal

G2 = CurveContext(2)
G3 = CurveContext(3)


class TestBunPoincare:
    @pytest.mark.parametrize(
        "r, ctx, n, expected",
        [
            (1, G2, 4, (1, 4, 7, 8, 8)),
            (2, G2, 4, (1, 4, 8, 16, 33)),
            (2, G3, 3, (1, 6, 17, 38)),
        ],
    )
    def test_known_values(self, r, ctx, n, expected):
        assert bun_poincare(r, ctx, n).coeffs == expected

    @pytest.mark.parametrize("r", [1, 2, 3])
    @pytest.mark.parametrize("ctx", [G2, G3])
    def test_matches_brute_force_expansion(self, r, ctx):
        assert list(bun_poincare(r, ctx, 14).coeffs) == stack_series(r, ctx.genus, 14)

    def test_coefficients_are_nonnegative(self):
        for r, ctx in itertools.product([1, 2, 3], [G2, G3]):
            assert all(c >= 0 for c in bun_poincare(r, ctx, 16).coeffs)

    def test_exceeds_machine_integers(self):
        # truncated expansions must never overflow; this one passes 2^64
        big = max(bun_poincare(3, CurveContext(20), 40).coeffs)
        assert big > 2**64


class TestBunHodgePoincare:
    def test_rank_one_low_order(self):
        assert bun_hodge_poincare(1, G2, 2).terms == {
            (0, 0): 1,
            (1, 0): 2,
            (0, 1): 2,
            (2, 0): 1,
            (1, 1): 5,
            (0, 2): 1,
        }

    def test_rank_two_degree_three_slice(self):
        h = bun_hodge_poincare(2, G3, 3)
        slice3 = {k: v for k, v in h.terms.items() if sum(k) == 3}
        assert slice3 == {(3, 0): 1, (2, 1): 18, (1, 2): 18, (0, 3): 1}

    @pytest.mark.parametrize("r, ctx, n", [(2, G2, 6), (3, G2, 10), (3, G3, 8)])
    def test_diagonal_recovers_poincare(self, r, ctx, n):
        assert hodge_diagonal(bun_hodge_poincare(r, ctx, n)) == bun_poincare(r, ctx, n)

    def test_hodge_symmetry(self):
        for r, ctx in itertools.product([1, 2, 3], [G2, G3]):
            h = bun_hodge_poincare(r, ctx, 9)
            for (p, q), c in h.terms.items():
                assert h.coefficient(q, p) == c


class TestSsPoincare:
    def test_rank_two_degree_one(self):
        assert ss_poincare(BundleClass(2, 1), G2, 4).coeffs == (1, 4, 8, 16, 32)

    def test_rank_two_degree_zero(self):
        # first correction enters at t^6 (minimal codimension 3)
        assert ss_poincare(BundleClass(2, 0), G2, 6).coeffs == (1, 4, 8, 16, 33, 56, 85)

    def test_rank_one_is_whole_stack(self):
        assert ss_poincare(BundleClass(1, 7), G2, 3) == bun_poincare(1, G2, 3)

    def test_translation_invariance(self):
        for r, d, ctx, n in itertools.product([2, 3], range(-3, 4), [G2, G3], [5, 12]):
            assert ss_poincare(BundleClass(r, d), ctx, n) == ss_poincare(
                BundleClass(r, d + r), ctx, n
            )

    def test_degree_normalization_agrees(self):
        cache = SsCache()
        assert ss_poincare(BundleClass(3, 7), G2, 10, cache, normalize_degree=True) == (
            ss_poincare(BundleClass(3, 1), G2, 10, cache)
        )

    def test_truncation_extension_is_stable(self):
        for r, d, ctx in [(2, 1, G2), (3, 0, G2), (3, 2, G3)]:
            short = ss_poincare(BundleClass(r, d), ctx, 8)
            long = ss_poincare(BundleClass(r, d), ctx, 12)
            assert long.coeffs[:9] == short.coeffs

    def test_nonnegative_coefficients(self):
        for r, d, ctx in itertools.product([1, 2, 3], range(-3, 4), [G2, G3]):
            assert all(c >= 0 for c in ss_poincare(BundleClass(r, d), ctx, 12).coeffs)

    def test_cached_entries_match_fresh_recomputation(self):
        cache = SsCache()
        ss_poincare(BundleClass(3, 1), G2, 12, cache)
        assert len(cache.poincare) > 1
        for key, series in cache.poincare.items():
            fresh = ss_poincare(
                BundleClass(key.rank, key.degree), G2, key.truncation, SsCache()
            )
            assert fresh == series


class TestSsHodgePoincare:
    def test_rank_one_is_whole_stack(self):
        assert ss_hodge_poincare(BundleClass(1, 0), G2, 2) == bun_hodge_poincare(1, G2, 2)

    def test_diagonal_matches_poincare_side(self):
        lhs = hodge_diagonal(ss_hodge_poincare(BundleClass(2, 1), G2, 4))
        assert lhs == ss_poincare(BundleClass(2, 1), G2, 4)

    def test_no_stratum_within_truncation(self):
        # minimal twist (xy)^3 has total degree 6 > 5
        assert ss_hodge_poincare(BundleClass(2, 0), G2, 5) == bun_hodge_poincare(2, G2, 5)


class TestStratumSeries:
    def test_two_line_bundles(self):
        t = HNType(((1, 1), (1, 0)))
        assert stratum_series(t, G2, 2).coeffs == (1, 8, 30)

    def test_trivial_stratum_is_ss(self):
        t = HNType(((2, 1),))
        assert stratum_series(t, G2, 4) == ss_poincare(BundleClass(2, 1), G2, 4)

    def test_order_zero(self):
        assert stratum_series(HNType(((1, 1), (1, 0))), G2, 0).coeffs == (1,)


class TestVerifyStrataIdentity:
    def test_rank_two(self):
        report = verify_strata_identity(BundleClass(2, 1), G2, 10)
        assert report.passed
        assert report.residual.is_zero()

    def test_rank_three_nested(self):
        report = verify_strata_identity(BundleClass(3, 0), G2, 12)
        assert report.passed

    def test_perturbed_codim_is_detected(self):
        from shatz.hn import enumerate_hn_types

        bundle, n = BundleClass(2, 1), 10
        strata = enumerate_hn_types(bundle, G2, n // 2)
        assert strata
        for k in range(len(strata)):
            bumped = [
                (t, c + 1 if i == k else c) for i, (t, c) in enumerate(strata)
            ]
            report = verify_strata_identity(bundle, G2, n, strata=bumped)
            assert not report.passed
            assert not report.residual.is_zero()


def test_sskey_is_hashable_value_object():
    assert SsKey(2, 1, 2, 4) == SsKey(2, 1, 2, 4)
    assert len({SsKey(2, 1, 2, 4), SsKey(2, 1, 2, 4), SsKey(2, 1, 2, 5)}) == 2
