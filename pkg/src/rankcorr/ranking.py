"""Ordinary ranks, empirical CDFs and their smoothed counterparts.

Every private ``_*`` helper works along the last axis so that a whole batch of
Monte Carlo replicates (shape ``(M, n)``) can be ranked in one call.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy import special, stats

from .core import BadBandwidth, DuplicateValues, TooSmall, _as_finite_vector

# rows of the (n, n) difference matrix processed per block for long 1-D inputs
_BLOCK = 1024


class SmoothKernel(enum.Enum):
    NORMAL_CDF = "normal"
    LOGISTIC_CDF = "logistic"
    INTERPOLATED_ECDF = "interpolated"

    @property
    def needs_bandwidth(self) -> bool:
        return self is not SmoothKernel.INTERPOLATED_ECDF

    @classmethod
    def parse(cls, name: "str | SmoothKernel") -> "SmoothKernel":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower()
        aliases = {"normal": "normal", "normal-cdf": "normal", "gaussian": "normal",
                   "logistic": "logistic", "logistic-cdf": "logistic",
                   "interpolated": "interpolated", "interpolated-ecdf": "interpolated",
                   "hn": "interpolated"}
        if key not in aliases:
            raise ValueError(f"unknown kernel {name!r}")
        return cls(aliases[key])

    def cdf(self, u):
        if self is SmoothKernel.NORMAL_CDF:
            return special.ndtr(u)
        if self is SmoothKernel.LOGISTIC_CDF:
            return special.expit(u)
        raise ValueError("the interpolated ECDF is not a kernel CDF")


@dataclass(frozen=True)
class RankVector:
    ranks: np.ndarray
    smoothed: bool
    tie_count: int

    @property
    def n(self) -> int:
        return int(self.ranks.shape[-1])


def count_tie_groups(v) -> int:
    _, counts = np.unique(np.asarray(v), return_counts=True)
    return int(np.sum(counts > 1))


def _ordinary_ranks(v: np.ndarray) -> np.ndarray:
    return stats.rankdata(v, method="average", axis=-1)


def ordinary_ranks(v) -> RankVector:
    """Average-method ranks; tied values share the mean of their positions.

    >>> ordinary_ranks([1, 2, 2, 3]).ranks
    array([1. , 2.5, 2.5, 4. ])
    """
    arr = _as_finite_vector(v)
    if arr.size < 1:
        raise TooSmall("cannot rank an empty vector")
    return RankVector(_ordinary_ranks(arr), smoothed=False, tie_count=count_tie_groups(arr))


def ecdf(v, t: float) -> float:
    """Right-continuous empirical CDF ``#{v_j <= t} / n``."""
    arr = _as_finite_vector(v)
    return float(np.count_nonzero(arr <= t)) / arr.size


def _check_h(h) -> None:
    h = np.asarray(h, dtype=float)
    if not np.all(np.isfinite(h)) or np.any(h <= 0):
        raise BadBandwidth(f"bandwidth must be positive and finite, got {h}")


def smoothed_ecdf(v, t: float, kernel: SmoothKernel = SmoothKernel.NORMAL_CDF,
                  h: float = 1.0) -> float:
    """Kernel-smoothed ECDF ``(1/n) sum_j H((t - v_j)/h)``."""
    kernel = SmoothKernel.parse(kernel)
    if not kernel.needs_bandwidth:
        raise ValueError("smoothed_ecdf needs a kernel CDF, not the interpolated ECDF")
    arr = _as_finite_vector(v)
    _check_h(h)
    return float(np.mean(kernel.cdf((t - arr) / h)))


def _smoothed_ranks(v: np.ndarray, h, kernel: SmoothKernel) -> np.ndarray:
    """Smoothed ranks along the last axis; ``h`` broadcasts against ``v[..., 0]``."""
    v = np.asarray(v, dtype=float)
    h = np.asarray(h, dtype=float)[..., None, None]
    if v.ndim == 1 and v.shape[0] > _BLOCK:
        h = float(h.reshape(()))
        out = np.empty_like(v)
        for start in range(0, v.shape[0], _BLOCK):
            block = v[start:start + _BLOCK]
            out[start:start + _BLOCK] = kernel.cdf((block[:, None] - v[None, :]) / h).sum(axis=-1)
        return out
    diffs = (v[..., :, None] - v[..., None, :]) / h
    return kernel.cdf(diffs).sum(axis=-1)


def smoothed_ranks(v, kernel: SmoothKernel = SmoothKernel.NORMAL_CDF, h: float = 1.0) -> RankVector:
    """Smoothed ranks ``R_hat(v_i) = sum_j H((v_i - v_j)/h)``.

    Each value lies in ``(0, n)``; with a symmetric kernel the diagonal term is
    exactly 1/2, so as ``h -> 0`` distinct data give ``R(v_i) - 1/2``.
    """
    kernel = SmoothKernel.parse(kernel)
    if not kernel.needs_bandwidth:
        raise ValueError("use interpolated_ecdf_at_order_stats for the interpolated ECDF")
    arr = _as_finite_vector(v)
    _check_h(h)
    return RankVector(_smoothed_ranks(arr, h, kernel), smoothed=True,
                      tie_count=count_tie_groups(arr))


def _interpolated_ecdf(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    n = v.shape[-1]
    if n < 2:
        raise TooSmall("the interpolated ECDF needs at least 2 values")
    order = np.argsort(v, axis=-1, kind="stable")
    xs = np.take_along_axis(v, order, axis=-1)
    if np.any(np.diff(xs, axis=-1) == 0):
        raise DuplicateValues("interpolated ECDF is undefined for tied values")
    # cell edges: interior midpoints plus mirrored outer edges
    edges = np.empty(v.shape[:-1] + (n + 1,))
    edges[..., 1:n] = 0.5 * (xs[..., :-1] + xs[..., 1:])
    edges[..., 0] = xs[..., 0] - (edges[..., 1] - xs[..., 0])
    edges[..., n] = xs[..., -1] + (xs[..., -1] - edges[..., n - 1])
    lo, hi = edges[..., :n], edges[..., 1:]
    i = np.arange(n)
    sorted_vals = i / n + (xs - lo) / (n * (hi - lo))
    out = np.empty_like(sorted_vals)
    np.put_along_axis(out, order, sorted_vals, axis=-1)
    return out


def interpolated_ecdf_at_order_stats(v) -> np.ndarray:
    """Piecewise-linear ECDF ``H_n`` evaluated at every observation.

    Values come back in input order. The i-th order statistic maps into
    ``((i-1)/n, i/n)``; equispaced data give ``(2i-1)/(2n)``.

    Raises
    ------
    DuplicateValues
        If two observations coincide (a zero-width cell).
    """
    return _interpolated_ecdf(_as_finite_vector(v))
