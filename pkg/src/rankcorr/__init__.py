"""Rank correlation estimators with kernel-smoothed Wilcoxon scores."""

from .bandwidth import BandwidthRule, BandwidthSpec, ScaleEstimator, heller_bandwidth, silverman_bandwidth
from .core import (BadAlpha, BadBandwidth, CampaignError, DegenerateScale, DuplicateValues,
                   EstimateResult, EstimatorKind, LengthMismatch, MissingCell, NonFinite,
                   PairedSample, RankCorrError, TiesPresent, TooSmall, ZeroVariance,
                   validate_sample)
from .estimators import (estimate, kendall, pearson, score_correlation, smoothed_score_correlation,
                         spearman_dsq, spearman_moment, spearman_simplified)
from .inference import TestResult, wald_test
from .ranking import (RankVector, SmoothKernel, ecdf, interpolated_ecdf_at_order_stats,
                      ordinary_ranks, smoothed_ecdf, smoothed_ranks)
from .samplers import (FgmExponentialModel, NormalModel, make_rng, sample_bivariate_normal,
                       sample_fgm_exponential)
from .scores import ScoreFunction, score, score_norm_sq
from .simulation import CampaignConfig, SimulationReport, relative_efficiency, run_campaign

__version__ = "0.1.0"

__all__ = [
    "BandwidthRule",
    "BandwidthSpec",
    "ScaleEstimator",
    "heller_bandwidth",
    "silverman_bandwidth",
    "BadAlpha",
    "BadBandwidth",
    "CampaignError",
    "DegenerateScale",
    "DuplicateValues",
    "EstimateResult",
    "EstimatorKind",
    "LengthMismatch",
    "MissingCell",
    "NonFinite",
    "PairedSample",
    "RankCorrError",
    "TiesPresent",
    "TooSmall",
    "ZeroVariance",
    "validate_sample",
    "estimate",
    "kendall",
    "pearson",
    "score_correlation",
    "smoothed_score_correlation",
    "spearman_dsq",
    "spearman_moment",
    "spearman_simplified",
    "TestResult",
    "wald_test",
    "RankVector",
    "SmoothKernel",
    "ecdf",
    "interpolated_ecdf_at_order_stats",
    "ordinary_ranks",
    "smoothed_ecdf",
    "smoothed_ranks",
    "FgmExponentialModel",
    "NormalModel",
    "make_rng",
    "sample_bivariate_normal",
    "sample_fgm_exponential",
    "ScoreFunction",
    "score",
    "score_norm_sq",
    "CampaignConfig",
    "SimulationReport",
    "relative_efficiency",
    "run_campaign",
]
