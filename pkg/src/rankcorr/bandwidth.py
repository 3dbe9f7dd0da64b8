"""Closed-form bandwidth rules for the smoothed ranks.

Both rules are location invariant and scale equivariant, which is what makes
the smoothed estimator invariant under positive affine maps of either
coordinate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import BadBandwidth, DegenerateScale, TooSmall

# consistency constant: MAD * 1.4826 estimates sigma under normality
MAD_SCALE = 1.4826
IQR_NORMAL = 1.349
SILVERMAN_FACTOR = 0.9
SILVERMAN_EXPONENT = -0.20
HELLER_EXPONENT = -0.26


class BandwidthRule(enum.Enum):
    SILVERMAN = "silverman"
    HELLER = "heller"
    FIXED = "fixed"


class ScaleEstimator(enum.Enum):
    SD_IQR_MIN = "sd"
    MAD = "mad"


@dataclass(frozen=True)
class BandwidthSpec:
    rule: BandwidthRule = BandwidthRule.HELLER
    scale: ScaleEstimator = ScaleEstimator.MAD
    value: Optional[float] = None

    def __post_init__(self):
        if self.rule is BandwidthRule.FIXED:
            if self.value is None or not np.isfinite(self.value) or self.value <= 0:
                raise BadBandwidth(f"fixed bandwidth must be positive, got {self.value}")

    @classmethod
    def silverman(cls) -> "BandwidthSpec":
        return cls(BandwidthRule.SILVERMAN, ScaleEstimator.SD_IQR_MIN)

    @classmethod
    def heller(cls, scale: ScaleEstimator = ScaleEstimator.MAD) -> "BandwidthSpec":
        return cls(BandwidthRule.HELLER, scale)

    @classmethod
    def fixed(cls, value: float) -> "BandwidthSpec":
        return cls(BandwidthRule.FIXED, ScaleEstimator.MAD, float(value))

    @classmethod
    def parse(cls, text: "str | BandwidthSpec") -> "BandwidthSpec":
        """Parse ``silverman``, ``heller``, ``heller:sd``, ``heller:mad`` or ``fixed:V``."""
        if isinstance(text, cls):
            return text
        rule, _, arg = str(text).strip().lower().partition(":")
        if rule == "fixed":
            try:
                return cls.fixed(float(arg))
            except ValueError:
                raise BadBandwidth(f"bad fixed bandwidth {text!r}") from None
        if rule not in ("silverman", "heller"):
            raise ValueError(f"unknown bandwidth rule {text!r}")
        if arg:
            scale = ScaleEstimator(arg)
        else:
            scale = ScaleEstimator.SD_IQR_MIN if rule == "silverman" else ScaleEstimator.MAD
        return cls(BandwidthRule(rule), scale)

    def __str__(self) -> str:
        if self.rule is BandwidthRule.FIXED:
            return f"fixed:{self.value!r}"
        return f"{self.rule.value}:{self.scale.value}"


def mad_scale(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    med = np.median(v, axis=-1, keepdims=True)
    return MAD_SCALE * np.median(np.abs(v - med), axis=-1)


def sd_iqr_scale(v) -> np.ndarray:
    """``min(s, IQR/1.349)`` with linear-interpolation quartiles."""
    v = np.asarray(v, dtype=float)
    s = np.std(v, axis=-1, ddof=1)
    q75, q25 = np.percentile(v, [75, 25], axis=-1)
    return np.minimum(s, (q75 - q25) / IQR_NORMAL)


def _scale(v, scale: ScaleEstimator) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape[-1] < 2:
        raise TooSmall("a bandwidth needs at least 2 observations")
    sigma = mad_scale(v) if scale is ScaleEstimator.MAD else sd_iqr_scale(v)
    if np.any(~(sigma > 0)):
        raise DegenerateScale(f"{scale.value} scale estimate is zero")
    return sigma


def silverman_bandwidth(v, scale: ScaleEstimator = ScaleEstimator.SD_IQR_MIN):
    """Rule-of-thumb ``h = 0.9 * sigma * n**-0.2`` (along the last axis)."""
    sigma = _scale(v, scale)
    n = np.shape(v)[-1]
    h = SILVERMAN_FACTOR * sigma * n ** SILVERMAN_EXPONENT
    return float(h) if np.ndim(h) == 0 else h


def heller_bandwidth(v, scale: ScaleEstimator = ScaleEstimator.MAD):
    """``h = sigma * n**-0.26``, so that ``n h -> inf`` and ``n h**4 -> 0``."""
    sigma = _scale(v, scale)
    n = np.shape(v)[-1]
    h = sigma * n ** HELLER_EXPONENT
    return float(h) if np.ndim(h) == 0 else h


def resolve(spec: BandwidthSpec, v):
    """Concrete bandwidth(s) for ``v`` (one per row when ``v`` is 2-D)."""
    if spec.rule is BandwidthRule.FIXED:
        shape = np.shape(v)[:-1]
        return spec.value if not shape else np.full(shape, spec.value)
    if spec.rule is BandwidthRule.SILVERMAN:
        return silverman_bandwidth(v, spec.scale)
    return heller_bandwidth(v, spec.scale)
