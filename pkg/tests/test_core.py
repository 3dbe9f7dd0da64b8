import numpy as np
import pytest

from rankcorr import (EstimateResult, EstimatorKind, LengthMismatch, NonFinite, TooSmall,
                      validate_sample)


def test_valid_sample():
    s = validate_sample([1, 2, 3], [4, 5, 6])
    assert s.n == 3
    assert s.xs.dtype == float
    with pytest.raises(ValueError):
        s.xs[0] = 10.0  # frozen


@pytest.mark.parametrize("xs, ys, err", [
    ([1, 2], [1], LengthMismatch),
    ([1, np.nan], [2, 3], NonFinite),
    ([1, 2], [np.inf, 3], NonFinite),
    ([1], [1], TooSmall),
    ([], [], TooSmall),
])
def test_invalid_samples(xs, ys, err):
    with pytest.raises(err):
        validate_sample(xs, ys)


def test_estimator_kind_parse():
    assert EstimatorKind.parse("spearman-dsq") is EstimatorKind.SPEARMAN_DSQ
    assert EstimatorKind.parse("SMOOTHED_SCORE") is EstimatorKind.SMOOTHED_SCORE
    with pytest.raises(ValueError):
        EstimatorKind.parse("hoeffding")


def test_estimate_result_invariants():
    with pytest.raises(ValueError):
        EstimateResult(EstimatorKind.PEARSON, 0.1, 10, z=1.0)
    with pytest.raises(ValueError):
        EstimateResult(EstimatorKind.PEARSON, 0.1, 10, bandwidth=(0.1, 0.1))
    d = EstimateResult(EstimatorKind.KENDALL, 0.5, 4).to_dict()
    assert d == {"method": "kendall", "n": 4, "estimate": 0.5, "bandwidth": None,
                 "z": None, "p_value": None}
