"""Command-line front end: ``rankcorr estimate|test|simulate|tables``.

Exit codes: 0 ok, 2 bad input file or config, 3 estimator error, 4 bad alpha,
5 campaign error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import estimators, simulation
from .bandwidth import BandwidthSpec
from .core import BadAlpha, CampaignError, EstimatorKind, RankCorrError, validate_sample
from .inference import wald_test
from .ranking import SmoothKernel

EXIT_INPUT = 2
EXIT_ESTIMATOR = 3
EXIT_ALPHA = 4
EXIT_CAMPAIGN = 5

SEED_ENV = "RANKCORR_SEED"
DEFAULT_TABLE_SEED = 20250514

log = logging.getLogger("rankcorr")


class InputError(Exception):
    pass


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def read_columns(path, columns=(0, 1)):
    """Read two numeric columns from a comma-separated file.

    A first row containing any non-numeric cell is taken as a header.
    """
    try:
        with open(path, newline="") as fh:
            rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if rows and not all(_is_number(c) for c in rows[0]):
        rows = rows[1:]
    if not rows:
        raise InputError("no data rows")
    i, j = columns
    xs, ys = [], []
    for lineno, row in enumerate(rows, 1):
        try:
            xs.append(float(row[i]))
            ys.append(float(row[j]))
        except (IndexError, ValueError):
            raise InputError(f"row {lineno}: expected numeric values in columns {i} and {j}") from None
    return np.array(xs), np.array(ys)


def _columns(text: str):
    try:
        i, j = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("columns must look like 0,1") from None
    return i, j


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _seed(flag: Optional[int]) -> Optional[int]:
    if flag is not None:
        return flag
    env = os.environ.get(SEED_ENV)
    return int(env) if env else None


def _load(args):
    xs, ys = read_columns(args.input, args.columns)
    return validate_sample(xs, ys)


def cmd_estimate(args) -> int:
    try:
        sample = _load(args)
    except InputError as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    try:
        res = estimators.estimate(args.method, sample, args.kernel, args.bandwidth)
    except RankCorrError as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_ESTIMATOR
    _emit({"method": res.kind.value, "n": res.n, "estimate": res.estimate,
           "bandwidth": list(res.bandwidth) if res.bandwidth else None})
    return 0


def cmd_test(args) -> int:
    if not 0.0 < args.alpha < 1.0:
        log.error("BadAlpha: alpha must lie in (0, 1), got %s", args.alpha)
        return EXIT_ALPHA
    try:
        sample = _load(args)
    except InputError as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    try:
        res = estimators.estimate(args.method, sample, args.kernel, args.bandwidth)
        t = wald_test(res.estimate, res.n, args.alpha)
    except BadAlpha as exc:
        log.error("BadAlpha: %s", exc)
        return EXIT_ALPHA
    except RankCorrError as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_ESTIMATOR
    _emit({"method": res.kind.value, "n": res.n, "estimate": res.estimate,
           "z": t.z, "p_value": t.p_value, "alpha": t.alpha, "reject": t.reject})
    return 0


def cmd_simulate(args) -> int:
    try:
        cfg = simulation.load_config(args.config, seed=_seed(args.seed))
        if args.replicates is not None:
            cfg = replace(cfg, replicates=args.replicates)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        log.error("bad config: %s", exc)
        return EXIT_INPUT
    try:
        report = simulation.run_campaign(cfg)
    except (CampaignError, RankCorrError) as exc:
        log.error("%s", exc)
        return EXIT_CAMPAIGN
    prefix = args.out
    Path(f"{prefix}_curves.csv").write_text(simulation.curves_csv(report))
    Path(f"{prefix}_report.json").write_text(simulation.report_json(report, args.timing))
    sys.stdout.write(simulation.format_table(report) + "\n")
    return 0


def cmd_tables(args) -> int:
    seed = _seed(args.seed)
    try:
        cfg = simulation.table_config(args.model, args.replicates,
                                      seed if seed is not None else DEFAULT_TABLE_SEED)
        report = simulation.run_campaign(cfg)
    except (CampaignError, RankCorrError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_CAMPAIGN
    if args.csv:
        sys.stdout.write(simulation.table_csv(report))
    else:
        sys.stdout.write(simulation.format_table(report) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rankcorr", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    methods = [k.value for k in EstimatorKind]
    kernels = [k.value for k in SmoothKernel]

    def data_flags(sp, default_method):
        sp.add_argument("--input", required=True, help="CSV file")
        sp.add_argument("--method", choices=methods, default=default_method)
        sp.add_argument("--columns", type=_columns, default=(0, 1), help="zero-based, e.g. 0,1")
        sp.add_argument("--kernel", choices=kernels, default=estimators.DEFAULT_KERNEL.value)
        sp.add_argument("--bandwidth", type=BandwidthSpec.parse,
                        default=estimators.DEFAULT_BANDWIDTH,
                        help="silverman | heller[:mad|:sd] | fixed:V")

    sp = sub.add_parser("estimate", help="point estimate from a CSV file")
    data_flags(sp, "smoothed")
    sp.set_defaults(func=cmd_estimate)

    sp = sub.add_parser("test", help="Wald test of zero correlation")
    data_flags(sp, "score")
    sp.add_argument("--alpha", type=float, default=0.05)
    sp.set_defaults(func=cmd_test)

    sp = sub.add_parser("simulate", help="run a Monte Carlo campaign from a config")
    sp.add_argument("--config", required=True,
                    help="JSON config path or preset name (paper-normal, paper-fgm)")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--replicates", type=int, default=None)
    sp.add_argument("--out", default="campaign", help="output prefix")
    sp.add_argument("--timing", action="store_true", help="record wall time in the JSON report")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("tables", help="relative-efficiency table at the reporting rho's")
    sp.add_argument("--model", choices=("normal", "fgm"), default="normal")
    sp.add_argument("--replicates", type=int, default=2000)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--csv", action="store_true")
    sp.set_defaults(func=cmd_tables)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(format="%(levelname)s: %(message)s", stream=sys.stderr)
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
