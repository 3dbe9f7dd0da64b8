"""Rank score functions.

Only the Wilcoxon linear score ``phi(u) = sqrt(12) (u - 1/2)`` is provided.
"""

from __future__ import annotations

import enum
import math

import numpy as np

SQRT12 = math.sqrt(12.0)


class ScoreFunction(enum.Enum):
    WILCOXON = "wilcoxon"

    def phi(self, u):
        return SQRT12 * (np.asarray(u, dtype=float) - 0.5)


def score(rank, n: int, fn: ScoreFunction = ScoreFunction.WILCOXON):
    """Score ``a(R) = phi(R / (n + 1))`` for ordinary or smoothed rank values."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    r = np.asarray(rank, dtype=float)
    if np.any(r <= 0) or np.any(r > n):
        raise ValueError("rank values must lie in (0, n]")
    out = fn.phi(r / (n + 1))
    return float(out) if out.ndim == 0 else out


def scores(n: int, fn: ScoreFunction = ScoreFunction.WILCOXON) -> np.ndarray:
    """The full score vector ``a(1), ..., a(n)``."""
    return score(np.arange(1, n + 1), n, fn)


def score_norm_sq(n: int) -> float:
    """Closed-form ``sum_i a(i)**2 = n (n - 1) / (n + 1)`` for Wilcoxon scores."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return n * (n - 1) / (n + 1)
