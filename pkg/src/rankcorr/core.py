"""Shared value types and input validation."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np


class RankCorrError(ValueError):
    """Base class for every error raised by this package."""


class LengthMismatch(RankCorrError):
    pass


class TooSmall(RankCorrError):
    pass


class NonFinite(RankCorrError):
    pass


class DuplicateValues(RankCorrError):
    pass


class BadBandwidth(RankCorrError):
    pass


class DegenerateScale(RankCorrError):
    pass


class ZeroVariance(RankCorrError):
    pass


class TiesPresent(RankCorrError):
    pass


class BadAlpha(RankCorrError):
    pass


class MissingCell(RankCorrError):
    pass


class CampaignError(RankCorrError):
    pass


class EstimatorKind(enum.Enum):
    PEARSON = "pearson"
    SPEARMAN_MOMENT = "spearman-moment"
    SPEARMAN_SIMPLIFIED = "spearman-simplified"
    SPEARMAN_DSQ = "spearman-dsq"
    KENDALL = "kendall"
    SCORE_BASED = "score"
    SMOOTHED_SCORE = "smoothed"

    @classmethod
    def parse(cls, name: "str | EstimatorKind") -> "EstimatorKind":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        for kind in cls:
            if kind.value == key or kind.name.lower().replace("_", "-") == key:
                return kind
        raise ValueError(f"unknown estimator {name!r}")


@dataclass(frozen=True)
class PairedSample:
    """n observation pairs ``(x_i, y_i)``; build with :func:`validate_sample`."""

    xs: np.ndarray
    ys: np.ndarray

    @property
    def n(self) -> int:
        return int(self.xs.shape[0])

    def swapped(self) -> "PairedSample":
        return PairedSample(self.ys, self.xs)


def _as_finite_vector(v, name: str = "v") -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    if not np.all(np.isfinite(arr)):
        raise NonFinite(f"{name} contains NaN or infinite values")
    return arr


def validate_sample(xs, ys) -> PairedSample:
    """Check and freeze a pair of equal-length finite vectors.

    Raises
    ------
    LengthMismatch, TooSmall, NonFinite
    """
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.ndim != 1 or y.ndim != 1:
        raise ValueError("xs and ys must be one-dimensional")
    if x.shape[0] != y.shape[0]:
        raise LengthMismatch(f"xs has {x.shape[0]} values, ys has {y.shape[0]}")
    if x.shape[0] < 2:
        raise TooSmall(f"need at least 2 pairs, got {x.shape[0]}")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise NonFinite("sample contains NaN or infinite values")
    x = x.copy()
    y = y.copy()
    x.flags.writeable = False
    y.flags.writeable = False
    return PairedSample(x, y)


@dataclass(frozen=True)
class EstimateResult:
    kind: EstimatorKind
    estimate: float
    n: int
    # (h_x, h_y); only set by the kernel-smoothed estimator
    bandwidth: Optional[Tuple[float, float]] = None
    z: Optional[float] = None
    p_value: Optional[float] = None

    def __post_init__(self):
        if (self.z is None) != (self.p_value is None):
            raise ValueError("z and p_value must be given together")
        if self.bandwidth is not None and self.kind is not EstimatorKind.SMOOTHED_SCORE:
            raise ValueError("bandwidth is only meaningful for the smoothed estimator")

    def to_dict(self) -> dict:
        return {
            "method": self.kind.value,
            "n": self.n,
            "estimate": self.estimate,
            "bandwidth": list(self.bandwidth) if self.bandwidth is not None else None,
            "z": self.z,
            "p_value": self.p_value,
        }
