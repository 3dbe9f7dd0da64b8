"""Point estimators of the correlation parameter.

Public functions take a :class:`~rankcorr.core.PairedSample` and return an
:class:`~rankcorr.core.EstimateResult`. The ``_batch`` helpers evaluate the
same formulas along the last axis of ``(M, n)`` arrays and are what the Monte
Carlo campaigns call.
"""

from __future__ import annotations

import numpy as np

from . import bandwidth as bw_mod
from .bandwidth import BandwidthSpec
from .core import (EstimateResult, EstimatorKind, PairedSample, TiesPresent,
                   ZeroVariance)
from .ranking import SmoothKernel, _interpolated_ecdf, _ordinary_ranks, _smoothed_ranks
from .scores import ScoreFunction, score, score_norm_sq

DEFAULT_KERNEL = SmoothKernel.NORMAL_CDF
DEFAULT_BANDWIDTH = BandwidthSpec.heller()


def _centered_corr(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # two-pass centered form; the raw-moment form cancels badly for large means
    xc = x - x.mean(axis=-1, keepdims=True)
    yc = y - y.mean(axis=-1, keepdims=True)
    sxx = np.einsum("...i,...i->...", xc, xc)
    syy = np.einsum("...i,...i->...", yc, yc)
    if np.any(sxx == 0) or np.any(syy == 0):
        raise ZeroVariance("a coordinate has zero variance")
    return np.einsum("...i,...i->...", xc, yc) / np.sqrt(sxx * syy)


def _rank_variance(n: int) -> float:
    return n * (n * n - 1) / 12.0


def _has_ties(ranks: np.ndarray) -> np.ndarray:
    # average ranks of tied values are non-integers or repeated
    s = np.sort(ranks, axis=-1)
    return np.any(np.diff(s, axis=-1) == 0, axis=-1)


def _pearson_batch(x, y):
    return _centered_corr(x, y)


def _spearman_moment_batch(x, y):
    return _centered_corr(_ordinary_ranks(x), _ordinary_ranks(y))


def _spearman_simplified_batch(x, y):
    n = x.shape[-1]
    rx, ry = _ordinary_ranks(x), _ordinary_ranks(y)
    if np.any(_has_ties(rx)) or np.any(_has_ties(ry)):
        raise TiesPresent("the simplified Spearman form requires tie-free data")
    c = (n + 1) / 2.0
    return np.einsum("...i,...i->...", rx - c, ry - c) / _rank_variance(n)


def _spearman_dsq_batch(x, y):
    n = x.shape[-1]
    d = _ordinary_ranks(x) - _ordinary_ranks(y)
    return 1.0 - 6.0 * np.einsum("...i,...i->...", d, d) / (n * (n * n - 1))


def _kendall_batch(x, y):
    n = x.shape[-1]
    sx = np.sign(x[..., :, None] - x[..., None, :])
    sy = np.sign(y[..., :, None] - y[..., None, :])
    # each unordered pair appears twice; tied pairs contribute 0
    net = np.einsum("...ij,...ij->...", sx, sy) / 2.0
    return net / (n * (n - 1) / 2.0)


def _score_batch(x, y, fn=ScoreFunction.WILCOXON):
    n = x.shape[-1]
    ax = score(_ordinary_ranks(x), n, fn)
    ay = score(_ordinary_ranks(y), n, fn)
    return np.einsum("...i,...i->...", ax, ay) / score_norm_sq(n)


def smoothed_rank_pair(x, y, kernel=DEFAULT_KERNEL, bandwidth=DEFAULT_BANDWIDTH):
    """Smoothed ranks of both coordinates and the bandwidths used.

    The interpolated ECDF path returns ``n * H_n`` and ``None`` bandwidths.
    """
    kernel = SmoothKernel.parse(kernel)
    n = np.shape(x)[-1]
    if not kernel.needs_bandwidth:
        return n * _interpolated_ecdf(x), n * _interpolated_ecdf(y), None, None
    bandwidth = BandwidthSpec.parse(bandwidth)
    hx = bw_mod.resolve(bandwidth, x)
    hy = bw_mod.resolve(bandwidth, y)
    return _smoothed_ranks(x, hx, kernel), _smoothed_ranks(y, hy, kernel), hx, hy


def _smoothed_from_ranks(rx, ry):
    n = rx.shape[-1]
    ax = score(rx, n)
    ay = score(ry, n)
    return np.einsum("...i,...i->...", ax, ay) / score_norm_sq(n)


def _smoothed_batch(x, y, kernel=DEFAULT_KERNEL, bandwidth=DEFAULT_BANDWIDTH):
    rx, ry, _, _ = smoothed_rank_pair(x, y, kernel, bandwidth)
    return _smoothed_from_ranks(rx, ry)


_BATCH = {
    EstimatorKind.PEARSON: _pearson_batch,
    EstimatorKind.SPEARMAN_MOMENT: _spearman_moment_batch,
    EstimatorKind.SPEARMAN_SIMPLIFIED: _spearman_simplified_batch,
    EstimatorKind.SPEARMAN_DSQ: _spearman_dsq_batch,
    EstimatorKind.KENDALL: _kendall_batch,
    EstimatorKind.SCORE_BASED: _score_batch,
}


def estimate_batch(kind, x, y, kernel=DEFAULT_KERNEL, bandwidth=DEFAULT_BANDWIDTH) -> np.ndarray:
    """Evaluate one estimator on every row of ``x`` and ``y`` (shape ``(M, n)``)."""
    kind = EstimatorKind.parse(kind)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if kind is EstimatorKind.SMOOTHED_SCORE:
        return _smoothed_batch(x, y, kernel, bandwidth)
    return _BATCH[kind](x, y)


def _result(kind: EstimatorKind, value, s: PairedSample, **kw) -> EstimateResult:
    return EstimateResult(kind=kind, estimate=float(value), n=s.n, **kw)


def pearson(s: PairedSample) -> EstimateResult:
    return _result(EstimatorKind.PEARSON, _pearson_batch(s.xs, s.ys), s)


def spearman_moment(s: PairedSample) -> EstimateResult:
    """Pearson's formula applied to average-method ranks."""
    return _result(EstimatorKind.SPEARMAN_MOMENT, _spearman_moment_batch(s.xs, s.ys), s)


def spearman_simplified(s: PairedSample) -> EstimateResult:
    """Rank cross-products over the exact tie-free rank variance ``n(n^2-1)/12``.

    Raises
    ------
    TiesPresent
        If either coordinate has ties.
    """
    return _result(EstimatorKind.SPEARMAN_SIMPLIFIED, _spearman_simplified_batch(s.xs, s.ys), s)


def spearman_dsq(s: PairedSample) -> EstimateResult:
    """``1 - 6 sum D_i^2 / (n (n^2 - 1))``; ties are tolerated with a small error."""
    return _result(EstimatorKind.SPEARMAN_DSQ, _spearman_dsq_batch(s.xs, s.ys), s)


def kendall(s: PairedSample) -> EstimateResult:
    """Tau-a: ``(n_c - n_d) / (n (n - 1) / 2)``, tied pairs count as neither."""
    return _result(EstimatorKind.KENDALL, _kendall_batch(s.xs, s.ys), s)


def score_correlation(s: PairedSample, fn: ScoreFunction = ScoreFunction.WILCOXON) -> EstimateResult:
    return _result(EstimatorKind.SCORE_BASED, _score_batch(s.xs, s.ys, fn), s)


def smoothed_score_correlation(s: PairedSample, kernel=DEFAULT_KERNEL,
                               bandwidth=DEFAULT_BANDWIDTH) -> EstimateResult:
    """Wilcoxon score correlation computed on smoothed ranks.

    With a kernel CDF, each coordinate gets its own bandwidth from
    ``bandwidth`` and the pair ``(h_x, h_y)`` is recorded on the result. With
    ``SmoothKernel.INTERPOLATED_ECDF`` the smoothed rank is ``n * H_n`` and no
    bandwidth is involved. The value is not clamped to ``[-1, 1]``.

    Raises
    ------
    DegenerateScale
        A coordinate's scale estimate is zero.
    DuplicateValues
        Ties on the interpolated-ECDF path.
    """
    rx, ry, hx, hy = smoothed_rank_pair(s.xs, s.ys, kernel, bandwidth)
    bw = None if hx is None else (float(hx), float(hy))
    return _result(EstimatorKind.SMOOTHED_SCORE, _smoothed_from_ranks(rx, ry), s, bandwidth=bw)


_SINGLE = {
    EstimatorKind.PEARSON: pearson,
    EstimatorKind.SPEARMAN_MOMENT: spearman_moment,
    EstimatorKind.SPEARMAN_SIMPLIFIED: spearman_simplified,
    EstimatorKind.SPEARMAN_DSQ: spearman_dsq,
    EstimatorKind.KENDALL: kendall,
    EstimatorKind.SCORE_BASED: score_correlation,
}


def estimate(kind, s: PairedSample, kernel=DEFAULT_KERNEL, bandwidth=DEFAULT_BANDWIDTH) -> EstimateResult:
    kind = EstimatorKind.parse(kind)
    if kind is EstimatorKind.SMOOTHED_SCORE:
        return smoothed_score_correlation(s, kernel, bandwidth)
    return _SINGLE[kind](s)
