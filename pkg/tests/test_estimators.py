import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import stats

from conftest import tie_free
from rankcorr import (BandwidthSpec, DegenerateScale, DuplicateValues, EstimatorKind, SmoothKernel,
                      TiesPresent, ZeroVariance, estimate, kendall, pearson, score_correlation,
                      smoothed_score_correlation, spearman_dsq, spearman_moment,
                      spearman_simplified, validate_sample)
from rankcorr.estimators import estimate_batch, smoothed_rank_pair
from rankcorr.ranking import ordinary_ranks

S = validate_sample


def brute_kendall(x, y):
    nc = nd = 0
    for i, j in itertools.combinations(range(len(x)), 2):
        p = (x[i] - x[j]) * (y[i] - y[j])
        nc += p > 0
        nd += p < 0
    n = len(x)
    return (nc - nd) / (n * (n - 1) / 2)


class TestExamples:
    @pytest.mark.parametrize("fn", [pearson, spearman_moment, spearman_simplified, spearman_dsq,
                                    kendall, score_correlation])
    def test_perfect(self, fn):
        assert fn(S([1, 2, 3], [1, 2, 3])).estimate == pytest.approx(1.0, abs=1e-15)
        assert fn(S([1, 2, 3], [3, 2, 1])).estimate == pytest.approx(-1.0, abs=1e-15)

    def test_half(self):
        s = S([1, 2, 3], [2, 1, 3])
        for fn in (pearson, spearman_moment, spearman_simplified, spearman_dsq, score_correlation):
            assert fn(s).estimate == pytest.approx(0.5, abs=1e-15)
        assert kendall(s).estimate == pytest.approx(1 / 3, abs=1e-15)

    def test_spearman_rank_based(self):
        assert spearman_moment(S([1, 2, 3], [10, 20, 30])).estimate == pytest.approx(1)
        assert spearman_moment(S([1, 2, 3], [9, 4, 1])).estimate == pytest.approx(-1)

    def test_dsq_reversed_four(self):
        assert spearman_dsq(S([1, 2, 3, 4], [4, 3, 2, 1])).estimate == pytest.approx(-1, abs=1e-15)

    def test_simplified_rejects_ties(self):
        with pytest.raises(TiesPresent):
            spearman_simplified(S([1, 2, 2, 3], [1, 2, 3, 4]))

    def test_zero_variance(self):
        with pytest.raises(ZeroVariance):
            pearson(S([1, 1, 1], [1, 2, 3]))
        with pytest.raises(ZeroVariance):
            spearman_moment(S([1, 2, 3], [4, 4, 4]))

    def test_kendall_tau_a_ties(self):
        # pair (0,1) tied in x counts as neither; denominator stays 3
        assert kendall(S([1, 1, 2], [1, 2, 3])).estimate == pytest.approx(2 / 3)

    def test_dsq_with_ties_is_close(self):
        s = S([1, 2, 2, 3, 4, 5, 6, 7], [2, 1, 3, 4, 4, 6, 5, 7])
        assert spearman_dsq(s).estimate == pytest.approx(spearman_moment(s).estimate, abs=0.01)

    def test_pearson_large_mean_is_stable(self):
        x = 1e9 + np.array([1.0, 2.0, 3.0])
        y = 1e9 + np.array([2.0, 1.0, 3.0])
        assert pearson(S(x, y)).estimate == pytest.approx(0.5, abs=1e-12)


class TestOracles:
    def test_against_scipy(self, rng):
        for _ in range(50):
            n = int(rng.integers(3, 60))
            x, y = rng.standard_normal(n), rng.standard_normal(n)
            s = S(x, y)
            assert pearson(s).estimate == pytest.approx(stats.pearsonr(x, y)[0], abs=1e-12)
            assert spearman_moment(s).estimate == pytest.approx(stats.spearmanr(x, y)[0], abs=1e-12)
            assert kendall(s).estimate == pytest.approx(brute_kendall(x, y), abs=1e-14)

    def test_kendall_brute_force_with_ties(self, rng):
        for _ in range(30):
            n = int(rng.integers(2, 25))
            x, y = rng.integers(0, 4, n).astype(float), rng.integers(0, 4, n).astype(float)
            assert kendall(S(x, y)).estimate == pytest.approx(brute_kendall(x, y), abs=1e-14)

    def test_score_correlation_by_definition(self, rng):
        x, y = rng.standard_normal(12), rng.standard_normal(12)
        n = 12
        a = lambda r: np.sqrt(12) * (r / (n + 1) - 0.5)
        rx, ry = ordinary_ranks(x).ranks, ordinary_ranks(y).ranks
        expected = np.sum(a(rx) * a(ry)) / np.sum(a(np.arange(1, n + 1)) ** 2)
        assert score_correlation(S(x, y)).estimate == pytest.approx(expected, abs=1e-14)


class TestSmoothed:
    def test_vanishing_bandwidth_n3(self):
        # ranks shift to R - 1/2, so r_sa = r_s + 3/(n^2 - 1) = 1 + 3/8
        res = smoothed_score_correlation(S([1, 2, 3], [1, 2, 3]), SmoothKernel.NORMAL_CDF,
                                         BandwidthSpec.fixed(1e-6))
        assert res.estimate == pytest.approx(1.375, abs=1e-12)
        assert res.bandwidth == (1e-6, 1e-6)
        assert res.kind is EstimatorKind.SMOOTHED_SCORE

    def test_vanishing_bandwidth_offset(self, rng):
        for n in (5, 20, 80):
            x, y = tie_free(rng, n, 1e-3), tie_free(rng, n, 1e-3)
            s = S(x, y)
            r = smoothed_score_correlation(s, "normal", BandwidthSpec.fixed(1e-9)).estimate
            assert r == pytest.approx(spearman_dsq(s).estimate + 3 / (n * n - 1), abs=1e-10)

    def test_eq35_matches_score_form(self, rng):
        x, y = rng.standard_normal(30), rng.standard_normal(30)
        res = smoothed_score_correlation(S(x, y))
        rx, ry, hx, hy = smoothed_rank_pair(x, y)
        n = 30
        c = (n + 1) / 2
        eq35 = np.sum((rx - c) * (ry - c)) / (n * (n * n - 1) / 12)
        assert res.estimate == pytest.approx(eq35, abs=1e-13)
        assert res.bandwidth == pytest.approx((hx, hy))

    def test_identical_coordinates_positive(self, rng):
        x = rng.standard_normal(25)
        rx, _, _, _ = smoothed_rank_pair(x, x)
        n = 25
        expected = 12 / (n * (n * n - 1)) * np.sum((rx - (n + 1) / 2) ** 2)
        res = smoothed_score_correlation(S(x, x))
        assert res.estimate == pytest.approx(expected, rel=1e-13)
        assert res.estimate > 0

    def test_bivariate_normal_close_to_spearman(self):
        from rankcorr.samplers import NormalModel, sample_bivariate_normal

        for seed in range(20):
            s = sample_bivariate_normal(NormalModel(2, 4, 1, 1, 0.9), 50, seed)
            diff = smoothed_score_correlation(s).estimate - spearman_dsq(s).estimate
            assert abs(diff) < 0.1

    def test_interpolated_path(self):
        # equispaced data: n*H_n = R - 1/2, same as the vanishing-bandwidth limit
        s = S([1.0, 2.0, 3.0, 4.0], [2.0, 1.0, 4.0, 3.0])
        res = smoothed_score_correlation(s, SmoothKernel.INTERPOLATED_ECDF)
        assert res.bandwidth is None
        assert res.estimate == pytest.approx(spearman_dsq(s).estimate + 3 / 15, abs=1e-14)

    def test_interpolated_rejects_ties(self):
        with pytest.raises(DuplicateValues):
            smoothed_score_correlation(S([1, 2, 2], [1, 2, 3]), "interpolated")

    def test_degenerate_scale(self):
        with pytest.raises(DegenerateScale):
            smoothed_score_correlation(S([1, 1, 1, 9], [1, 2, 3, 4]))

    def test_silverman_and_logistic(self, rng):
        x = rng.standard_normal(40)
        y = x + 0.5 * rng.standard_normal(40)
        s = S(x, y)
        ref = spearman_dsq(s).estimate
        for k in ("normal", "logistic"):
            for bw in ("silverman", "heller", "heller:sd"):
                r = smoothed_score_correlation(s, k, bw).estimate
                assert abs(r) <= 1 + 3 / 41
                assert abs(r - ref) < 0.2


KINDS = [EstimatorKind.PEARSON, EstimatorKind.SPEARMAN_MOMENT, EstimatorKind.SPEARMAN_DSQ,
         EstimatorKind.KENDALL, EstimatorKind.SCORE_BASED, EstimatorKind.SMOOTHED_SCORE]

samples = st.integers(3, 60).flatmap(
    lambda n: st.tuples(st.lists(st.integers(-10 ** 4, 10 ** 4), min_size=n, max_size=n, unique=True),
                        st.lists(st.integers(-10 ** 4, 10 ** 4), min_size=n, max_size=n, unique=True)))


@settings(max_examples=150, deadline=None)
@given(samples)
def test_properties(pair):
    x = 0.01 * np.array(pair[0], dtype=float)
    y = 0.01 * np.array(pair[1], dtype=float)
    if np.median(np.abs(x - np.median(x))) == 0 or np.median(np.abs(y - np.median(y))) == 0:
        return
    s, t = S(x, y), S(y, x)
    n = len(x)
    three = [spearman_moment(s).estimate, spearman_simplified(s).estimate, spearman_dsq(s).estimate]
    assert max(three) - min(three) < 1e-10
    assert abs(score_correlation(s).estimate - three[1]) < 1e-10
    for kind in KINDS:
        e = estimate(kind, s).estimate
        assert estimate(kind, t).estimate == pytest.approx(e, abs=1e-12)
        if kind is EstimatorKind.SMOOTHED_SCORE:
            assert abs(e) <= 1 + 3 / (n + 1)
        else:
            assert -1 - 1e-9 <= e <= 1 + 1e-9


def test_batch_matches_single(rng):
    x = rng.standard_normal((7, 20))
    y = x + rng.standard_normal((7, 20))
    for kind in KINDS + [EstimatorKind.SPEARMAN_SIMPLIFIED]:
        batch = estimate_batch(kind, x, y)
        single = [estimate(kind, S(a, b)).estimate for a, b in zip(x, y)]
        np.testing.assert_allclose(batch, single, rtol=1e-12, atol=1e-14)
    batch = estimate_batch(EstimatorKind.SMOOTHED_SCORE, x, y, "interpolated")
    single = [smoothed_score_correlation(S(a, b), "interpolated").estimate for a, b in zip(x, y)]
    np.testing.assert_allclose(batch, single, rtol=1e-12)
