"""Seeded samplers for the bivariate normal and FGM-exponential models.

Random streams come from numpy's counter-based Philox generator. Replicate
``r`` of a campaign seeded with ``seed`` always uses the stream keyed by
``(seed, r)``, so results do not depend on execution order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .core import PairedSample, validate_sample

MAX_SEED = 2 ** 64 - 1


@dataclass(frozen=True)
class NormalModel:
    mu1: float = 0.0
    mu2: float = 0.0
    sigma1: float = 1.0
    sigma2: float = 1.0
    rho: float = 0.0

    family = "normal"

    def __post_init__(self):
        if self.sigma1 <= 0 or self.sigma2 <= 0:
            raise ValueError("sigma1 and sigma2 must be positive")
        if not -1.0 <= self.rho <= 1.0:
            raise ValueError(f"rho must lie in [-1, 1], got {self.rho}")

    def with_rho(self, rho: float) -> "NormalModel":
        return NormalModel(self.mu1, self.mu2, self.sigma1, self.sigma2, rho)

    def draws(self, rng: np.random.Generator, n: int) -> np.ndarray:
        return rng.standard_normal((2, n))

    def transform(self, draws: np.ndarray):
        """Map standard-normal draws ``(..., 2, n)`` to ``(x, y)`` via the Cholesky factor."""
        z1, z2 = draws[..., 0, :], draws[..., 1, :]
        x = self.mu1 + self.sigma1 * z1
        if self.rho == 1.0 or self.rho == -1.0:
            y = self.mu2 + self.sigma2 * self.rho * z1
        else:
            y = self.mu2 + self.sigma2 * (self.rho * z1 + math.sqrt(1.0 - self.rho ** 2) * z2)
        return x, y


@dataclass(frozen=True)
class FgmExponentialModel:
    theta1: float = 1.0
    theta2: float = 1.0
    rho: float = 0.0

    family = "fgm"

    def __post_init__(self):
        if self.theta1 <= 0 or self.theta2 <= 0:
            raise ValueError("theta1 and theta2 must be positive")
        if not -1.0 <= self.rho <= 1.0:
            raise ValueError(f"rho must lie in [-1, 1], got {self.rho}")

    def with_rho(self, rho: float) -> "FgmExponentialModel":
        return FgmExponentialModel(self.theta1, self.theta2, rho)

    def draws(self, rng: np.random.Generator, n: int) -> np.ndarray:
        return rng.random((2, n))

    def transform(self, draws: np.ndarray):
        u, w = draws[..., 0, :], draws[..., 1, :]
        v = fgm_conditional_inverse(u, w, self.rho)
        return -self.theta1 * np.log1p(-u), -self.theta2 * np.log1p(-v)

    def cdf(self, x, y):
        return fgm_exponential_cdf(x, y, self.theta1, self.theta2, self.rho)


BivariateModel = Union[NormalModel, FgmExponentialModel]


def make_rng(seed: int, *key: int) -> np.random.Generator:
    """Philox generator for the sub-stream ``(seed, *key)``."""
    seed = int(seed)
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    ss = np.random.SeedSequence(seed, spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.Philox(ss))


def replicate_draws(model: BivariateModel, n: int, seed: int, replicates: int) -> np.ndarray:
    """Base variates of shape ``(replicates, 2, n)``; row ``r`` comes from stream ``(seed, r)``."""
    return np.stack([model.draws(make_rng(seed, r), n) for r in range(replicates)])


def _rng(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return make_rng(rng)


def sample_bivariate_normal(model: NormalModel, n: int, rng) -> PairedSample:
    """Draw ``n`` pairs; ``rng`` is a Generator or an integer seed."""
    if n < 1:
        raise ValueError("n must be positive")
    x, y = model.transform(model.draws(_rng(rng), n))
    return _pack(x, y)


def fgm_conditional_cdf(v, u, rho):
    """``P(V <= v | U = u) = v [1 + A (1 - v)]`` with ``A = rho (1 - 2u)``."""
    a = rho * (1.0 - 2.0 * np.asarray(u, dtype=float))
    v = np.asarray(v, dtype=float)
    return v * (1.0 + a * (1.0 - v))


def fgm_conditional_inverse(u, w, rho):
    """Solve ``fgm_conditional_cdf(v, u, rho) = w`` for ``v`` in ``[0, 1]``.

    Uses the rationalised root ``2w / (1 + A + sqrt((1 + A)^2 - 4 A w))``,
    which stays finite and continuous as ``A -> 0``.
    """
    a = rho * (1.0 - 2.0 * np.asarray(u, dtype=float))
    w = np.asarray(w, dtype=float)
    b = 1.0 + a
    disc = np.maximum(b * b - 4.0 * a * w, 0.0)
    return 2.0 * w / (b + np.sqrt(disc))


def fgm_exponential_cdf(x, y, theta1=1.0, theta2=1.0, rho=0.0):
    """Joint CDF ``F1 F2 [1 + rho (1 - F1)(1 - F2)]`` with exponential margins."""
    f1 = -np.expm1(-np.maximum(np.asarray(x, dtype=float), 0.0) / theta1)
    f2 = -np.expm1(-np.maximum(np.asarray(y, dtype=float), 0.0) / theta2)
    return f1 * f2 * (1.0 + rho * (1.0 - f1) * (1.0 - f2))


def sample_fgm_exponential(model: FgmExponentialModel, n: int, rng) -> PairedSample:
    """Draw ``n`` pairs by conditional inversion of the FGM copula."""
    if n < 1:
        raise ValueError("n must be positive")
    x, y = model.transform(model.draws(_rng(rng), n))
    return _pack(x, y)


def sample(model: BivariateModel, n: int, rng) -> PairedSample:
    if isinstance(model, FgmExponentialModel):
        return sample_fgm_exponential(model, n, rng)
    return sample_bivariate_normal(model, n, rng)


def _pack(x, y) -> PairedSample:
    if x.shape[0] >= 2:
        return validate_sample(x, y)
    # a single pair is a legal draw but not a legal estimator input
    return PairedSample(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
