"""Large-sample Wald test of zero correlation for score-based estimators."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .core import BadAlpha, EstimateResult, TooSmall


def normal_cdf(z: float) -> float:
    return 0.5 * math.erfc(-z / math.sqrt(2.0))


def two_sided_p(z: float) -> float:
    # erfc avoids the 1 - Phi cancellation in the upper tail
    return math.erfc(abs(z) / math.sqrt(2.0))


def normal_quantile(p: float) -> float:
    from scipy.special import ndtri

    return float(ndtri(p))


@dataclass(frozen=True)
class TestResult:
    z: float
    p_value: float
    alpha: float
    reject: bool

    __test__ = False  # not a pytest class


def wald_test(estimate: float, n: int, alpha: float = 0.05) -> TestResult:
    """Test ``rho = 0`` with ``z = r sqrt(n - 1)``, using ``Var[r] = 1/(n-1)`` under the null.

    The variance is exact for rank-score estimators on tie-free data; with ties
    or for the smoothed estimator the test is approximate.
    """
    if not (0.0 < alpha < 1.0):
        raise BadAlpha(f"alpha must lie in (0, 1), got {alpha}")
    if n < 3:
        raise TooSmall(f"the Wald test needs n >= 3, got {n}")
    z = float(estimate) * math.sqrt(n - 1)
    p = two_sided_p(z)
    critical = -normal_quantile(alpha / 2.0)
    return TestResult(z=z, p_value=p, alpha=alpha, reject=abs(z) > critical)


def attach_test(result: EstimateResult, alpha: float = 0.05) -> EstimateResult:
    t = wald_test(result.estimate, result.n, alpha)
    return replace(result, z=t.z, p_value=t.p_value)
