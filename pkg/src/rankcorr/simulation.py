"""Monte Carlo MSE campaigns and relative-efficiency tables."""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from .bandwidth import BandwidthSpec
from .core import CampaignError, EstimatorKind, MissingCell, RankCorrError
from .estimators import estimate_batch
from .ranking import SmoothKernel
from .samplers import (MAX_SEED, BivariateModel, FgmExponentialModel, NormalModel,
                       replicate_draws)

log = logging.getLogger(__name__)

REPORTING_RHOS = (0.0, 0.25, 0.50, 0.75, 0.95)
FGM_RHO_CAP = 0.95
MIN_REPLICATES = 100
PRESETS = ("paper-normal", "paper-fgm")

SPEARMAN_KINDS = (EstimatorKind.SPEARMAN_DSQ, EstimatorKind.SPEARMAN_SIMPLIFIED,
                  EstimatorKind.SPEARMAN_MOMENT, EstimatorKind.SCORE_BASED)


@dataclass(frozen=True)
class CampaignConfig:
    model: BivariateModel
    n: int = 50
    rho_grid: Tuple[float, ...] = REPORTING_RHOS
    replicates: int = 2000
    estimators: Tuple[EstimatorKind, ...] = (
        EstimatorKind.PEARSON, EstimatorKind.SPEARMAN_DSQ,
        EstimatorKind.KENDALL, EstimatorKind.SMOOTHED_SCORE)
    kernel: SmoothKernel = SmoothKernel.NORMAL_CDF
    bandwidth: BandwidthSpec = field(default_factory=BandwidthSpec.heller)
    seed: int = 0
    reporting_rhos: Tuple[float, ...] = REPORTING_RHOS

    def __post_init__(self):
        grid = tuple(float(r) for r in self.rho_grid)
        object.__setattr__(self, "rho_grid", grid)
        object.__setattr__(self, "estimators",
                           tuple(EstimatorKind.parse(k) for k in self.estimators))
        object.__setattr__(self, "kernel", SmoothKernel.parse(self.kernel))
        object.__setattr__(self, "bandwidth", BandwidthSpec.parse(self.bandwidth))
        if not grid:
            raise ValueError("rho_grid is empty")
        if list(grid) != sorted(grid):
            raise ValueError("rho_grid must be sorted")
        if grid[0] < 0.0 or grid[-1] > 1.0:
            raise ValueError("rho_grid must lie in [0, 1]")
        if self.replicates < MIN_REPLICATES:
            raise ValueError(f"replicates must be >= {MIN_REPLICATES}")
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if not 0 <= int(self.seed) <= MAX_SEED:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if not self.estimators:
            raise ValueError("no estimators configured")

    @property
    def rho_cap(self) -> float:
        return FGM_RHO_CAP if isinstance(self.model, FgmExponentialModel) else 1.0

    @property
    def table_rhos(self) -> Tuple[float, ...]:
        return tuple(r for r in self.reporting_rhos if r <= self.rho_cap + 1e-12)

    @property
    def evaluated_rhos(self) -> Tuple[float, ...]:
        """Grid points plus the reporting rho's admissible for the model."""
        return tuple(sorted(set(self.rho_grid) | set(self.table_rhos)))

    def to_dict(self) -> dict:
        model = self.model
        if isinstance(model, FgmExponentialModel):
            mdict = {"family": "fgm", "theta1": model.theta1, "theta2": model.theta2}
        else:
            mdict = {"family": "normal", "mu1": model.mu1, "mu2": model.mu2,
                     "sigma1": model.sigma1, "sigma2": model.sigma2}
        return {
            "model": mdict,
            "n": self.n,
            "rho_grid": list(self.rho_grid),
            "replicates": self.replicates,
            "estimators": [k.value for k in self.estimators],
            "kernel": self.kernel.value,
            "bandwidth": str(self.bandwidth),
            "seed": int(self.seed),
            "reporting_rhos": list(self.reporting_rhos),
        }


@dataclass(frozen=True)
class Cell:
    estimator: EstimatorKind
    rho: float
    mean: float
    bias: float
    variance: float
    mse: float


@dataclass
class SimulationReport:
    config: CampaignConfig
    cells: List[Cell]
    wall_time: float = 0.0

    def cell(self, kind, rho: float) -> Cell:
        kind = EstimatorKind.parse(kind)
        for c in self.cells:
            if c.estimator is kind and abs(c.rho - rho) < 1e-9:
                return c
        raise MissingCell(f"no cell for {kind.value} at rho={rho}")

    def mse(self, kind, rho: float) -> float:
        return self.cell(kind, rho).mse

    @property
    def grid_cells(self) -> List[Cell]:
        grid = self.config.rho_grid
        return [c for c in self.cells if any(abs(c.rho - g) < 1e-12 for g in grid)]


def summarize(values: np.ndarray, rho: float) -> Tuple[float, float, float, float]:
    """Mean, bias, sample variance (ddof=1) and ``mse = bias**2 + variance``."""
    mean = float(np.mean(values))
    bias = mean - rho
    var = float(np.var(values, ddof=1))
    return mean, bias, var, bias * bias + var


def _locate_failure(kind, x, y, kernel, bandwidth) -> Optional[int]:
    for r in range(x.shape[0]):
        try:
            estimate_batch(kind, x[r], y[r], kernel, bandwidth)
        except RankCorrError:
            return r
    return None


def run_campaign(cfg: CampaignConfig) -> SimulationReport:
    """Draw ``cfg.replicates`` samples per rho and summarize every estimator.

    Replicate ``r`` reuses the same base variates at every rho (stream
    ``(seed, r)``), so curves over the grid are smooth and reproducible.
    """
    start = time.perf_counter()
    draws = replicate_draws(cfg.model, cfg.n, int(cfg.seed), cfg.replicates)
    cells = []
    for rho in cfg.evaluated_rhos:
        x, y = cfg.model.with_rho(rho).transform(draws)
        for kind in cfg.estimators:
            try:
                values = estimate_batch(kind, x, y, cfg.kernel, cfg.bandwidth)
            except RankCorrError as exc:
                r = _locate_failure(kind, x, y, cfg.kernel, cfg.bandwidth)
                raise CampaignError(
                    f"{kind.value} failed at rho={rho}, replicate={r}: "
                    f"{type(exc).__name__}: {exc}") from exc
            cells.append(Cell(kind, rho, *summarize(values, rho)))
    return SimulationReport(cfg, cells, wall_time=time.perf_counter() - start)


def relative_efficiency(report: SimulationReport, a, b, rho: float) -> float:
    """``mse(a) / mse(b)`` at ``rho``; values above 1 favour ``b``."""
    return report.mse(a, rho) / report.mse(b, rho)


def efficiency_columns(report: SimulationReport) -> List[Tuple[str, EstimatorKind, EstimatorKind]]:
    kinds = report.config.estimators
    smooth = EstimatorKind.SMOOTHED_SCORE
    spear = next((k for k in SPEARMAN_KINDS if k in kinds), None)
    cols = []
    if EstimatorKind.PEARSON in kinds and smooth in kinds:
        cols.append(("Pears-Smoot", EstimatorKind.PEARSON, smooth))
    if EstimatorKind.KENDALL in kinds and smooth in kinds:
        cols.append(("Kendal-Smoot", EstimatorKind.KENDALL, smooth))
    if spear is not None and smooth in kinds:
        cols.append(("Spear-Smoot", spear, smooth))
    if EstimatorKind.PEARSON in kinds and spear is not None:
        cols.append(("Pears-Spear", EstimatorKind.PEARSON, spear))
    return cols


def efficiency_table(report: SimulationReport) -> List[Dict[str, float]]:
    """Rows ``{"rho": ..., "Pears-Smoot": ..., ...}`` at the reporting rho's."""
    cols = efficiency_columns(report)
    rows = []
    for rho in report.config.table_rhos:
        row = {"rho": rho}
        for name, a, b in cols:
            row[name] = relative_efficiency(report, a, b, rho)
        rows.append(row)
    return rows


def format_table(report: SimulationReport) -> str:
    cols = [name for name, _, _ in efficiency_columns(report)]
    lines = ["Correlation(rho)" + "".join(f"{c:>14}" for c in cols)]
    for row in efficiency_table(report):
        lines.append(f"{row['rho']:<16.2f}" + "".join(f"{row[c]:>14.4f}" for c in cols))
    return "\n".join(lines)


def _num(x: float) -> str:
    return format(float(x), ".17g")


def table_csv(report: SimulationReport) -> str:
    cols = [name for name, _, _ in efficiency_columns(report)]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["rho"] + cols)
    for row in efficiency_table(report):
        w.writerow([_num(row["rho"])] + [_num(row[c]) for c in cols])
    return buf.getvalue()


def curves_csv(report: SimulationReport) -> str:
    """Long-format ``estimator,rho,bias,variance,mse`` rows over the grid."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["estimator", "rho", "bias", "variance", "mse"])
    for c in report.grid_cells:
        w.writerow([c.estimator.value, _num(c.rho), _num(c.bias), _num(c.variance), _num(c.mse)])
    return buf.getvalue()


def report_dict(report: SimulationReport, include_timing: bool = False) -> dict:
    out = {
        "config": report.config.to_dict(),
        "seed": int(report.config.seed),
        "cells": [
            {"estimator": c.estimator.value, "rho": c.rho, "mean": c.mean,
             "bias": c.bias, "variance": c.variance, "mse": c.mse}
            for c in report.cells
        ],
        "efficiency": {
            "columns": [name for name, _, _ in efficiency_columns(report)],
            "rows": efficiency_table(report),
        },
        # wall time breaks byte-identical reruns, so it is opt-in
        "wall_time": report.wall_time if include_timing else None,
    }
    return out


def report_json(report: SimulationReport, include_timing: bool = False) -> str:
    return json.dumps(report_dict(report, include_timing), indent=2) + "\n"


# -- config files -----------------------------------------------------------

def _grid(spec) -> Tuple[float, ...]:
    if isinstance(spec, dict):
        start, stop, step = float(spec["start"]), float(spec["stop"]), float(spec["step"])
        if step <= 0:
            raise ValueError("grid step must be positive")
        count = int(round((stop - start) / step)) + 1
        return tuple(round(start + i * step, 10) for i in range(count))
    return tuple(float(r) for r in spec)


def _model(spec: dict) -> BivariateModel:
    spec = dict(spec)
    family = spec.pop("family", "normal").lower()
    if family == "normal":
        return NormalModel(**{k: float(v) for k, v in spec.items()})
    if family in ("fgm", "fgm-exponential"):
        return FgmExponentialModel(**{k: float(v) for k, v in spec.items()})
    raise ValueError(f"unknown model family {family!r}")


def config_from_dict(data: dict, seed: Optional[int] = None) -> CampaignConfig:
    """Build a config from a parsed JSON mapping; grids for FGM are capped at 0.95."""
    model = _model(data.get("model", {"family": "normal"}))
    grid = _grid(data.get("rho_grid", REPORTING_RHOS))
    if isinstance(model, FgmExponentialModel) and grid and grid[-1] > FGM_RHO_CAP:
        kept = tuple(r for r in grid if r <= FGM_RHO_CAP)
        log.warning("FGM grid capped at %.2f (%d points above the cap dropped)",
                    FGM_RHO_CAP, len(grid) - len(kept))
        grid = kept
    kwargs = {
        "model": model,
        "rho_grid": grid,
        "n": int(data.get("n", 50)),
        "replicates": int(data.get("replicates", 2000)),
        "kernel": data.get("kernel", SmoothKernel.NORMAL_CDF.value),
        "bandwidth": data.get("bandwidth", "heller"),
        "seed": int(seed if seed is not None else data.get("seed", 0)),
    }
    if "estimators" in data:
        kwargs["estimators"] = tuple(data["estimators"])
    if "reporting_rhos" in data:
        kwargs["reporting_rhos"] = tuple(float(r) for r in data["reporting_rhos"])
    return CampaignConfig(**kwargs)


def load_config(source, seed: Optional[int] = None) -> CampaignConfig:
    """Load a JSON config file or a bundled preset (``paper-normal``, ``paper-fgm``)."""
    name = str(source)
    if name in PRESETS:
        text = resources.files("rankcorr.presets").joinpath(f"{name}.json").read_text()
    else:
        text = Path(source).read_text()
    return config_from_dict(json.loads(text), seed=seed)


def table_config(model: str = "normal", replicates: int = 2000, seed: Optional[int] = None,
                 **overrides) -> CampaignConfig:
    """Preset campaign restricted to the reporting rho's, as used for the tables."""
    preset = {"normal": "paper-normal", "fgm": "paper-fgm"}[model]
    data = json.loads(resources.files("rankcorr.presets").joinpath(f"{preset}.json").read_text())
    data["rho_grid"] = list(REPORTING_RHOS)
    data["replicates"] = replicates
    data.update(overrides)
    return config_from_dict(data, seed=seed)
