#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Command-line interface. Every subcommand writes one CSV table.
#
# Exit status: 0 on success, 1 on invalid input, 2 when a computation does
# not converge.
#
# Date:   October 2026

import argparse
import logging
import sys
from typing import List, Optional

import numpy as np
import pandas as pd

from .calculations import qfcre
from .chaos import chaos_entropy_sweep
from .config import DEFAULT_CHAOS_LENGTH, DEFAULT_REPLICATIONS, FLOAT_FORMAT, get_quad_config
from .dynamics import qdfcre_profile
from .errors import VerificationError
from .estimator import CONVENTIONS, estimate_qfcre, estimate_qfcre_windowed
from .finance import period_entropy, synthetic_two_regime, to_return_series
from .fromtext import CsvSpec, load_prices, load_sample_txt
from .models import as_order, model_from_spec
from .simulation import bias_mse_study
from .verify import Status, results_frame, run_verification
from .version import __version__


class UsageError(ValueError):
    """Invalid command line."""


class _Parser(argparse.ArgumentParser):
    # Usage errors share exit status 1 with other invalid input
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_list(text: str, cast=float) -> list:
    """Parse a comma-separated list such as ``0.2,0.4,1``."""
    try:
        values = [cast(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise UsageError(f"Invalid list {text!r}")
    if not values:
        raise UsageError("Empty list")
    return values


def parse_u_grid(text: str) -> np.ndarray:
    """Parse ``start:stop:count`` (evenly spaced) or a comma-separated list."""
    if ":" in text:
        try:
            start, stop, count = text.split(":")
            return np.linspace(float(start), float(stop), int(count))
        except ValueError:
            raise UsageError(f"Invalid u-grid {text!r}; expected start:stop:count")
    return np.asarray(parse_list(text))


def _to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def _cmd_entropy(args) -> str:
    model = model_from_spec(args.model)
    alphas = [as_order(a) for a in parse_list(args.alpha)]
    cfg = get_quad_config({"force_quadrature": args.force_quadrature})

    if args.dynamic:
        frames = []
        for alpha in alphas:
            profile = qdfcre_profile(model, alpha, parse_u_grid(args.u_grid), cfg)
            frame = profile.to_frame()
            frame["trend"] = profile.classification.value
            frames.append(frame)
        return _to_csv(pd.concat(frames, ignore_index=True))

    rows = []
    for alpha in alphas:
        value = qfcre(model, alpha, cfg)
        rows.append((model.label, alpha.alpha, value.value, value.method.value, value.est_error))
    return _to_csv(pd.DataFrame(rows,
        columns=["model", "alpha", "entropy", "method", "est_error"]))


def _cmd_estimate(args) -> str:
    alphas = parse_list(args.alpha)

    if args.window is not None:
        # Windows follow file order, so the raw values are read unsorted
        values = np.loadtxt(args.input, comments="#", ndmin=1, dtype=float)
        table = estimate_qfcre_windowed(values, args.window, args.step,
            alphas, args.threads, args.convention)
        return _to_csv(table)

    sample = load_sample_txt(args.input)
    rows = [(sample.n, as_order(a).alpha, estimate_qfcre(sample, a, args.convention).value)
        for a in alphas]
    return _to_csv(pd.DataFrame(rows, columns=["n", "alpha", "estimate"]))


def _cmd_simulate(args) -> str:
    model = model_from_spec(args.model)
    report = bias_mse_study(model, float(args.alpha), parse_list(args.n, int),
        args.reps, args.seed, threads=args.threads, convention=args.convention)
    return report.to_csv()


def _cmd_chaos(args) -> str:
    table = chaos_entropy_sweep(parse_list(args.a), args.x0, args.length,
        parse_list(args.alpha), args.burn_in, args.threads)
    return _to_csv(table)


def _cmd_finance(args) -> str:
    if args.synthetic:
        series = synthetic_two_regime(seed=args.seed)
    else:
        csv_spec = CsvSpec(args.date_column, args.close_column, args.date_format, args.delimiter)
        dates, prices = load_prices(args.input, csv_spec)
        series = to_return_series(dates, prices)

    if args.emit == "returns":
        return _to_csv(series.to_frame())
    table = period_entropy(series, args.partition, parse_list(args.alpha), args.convention)
    return _to_csv(table)


def _cmd_verify(args) -> str:
    results = run_verification(seed=args.seed)
    failed = [r for r in results if r.status is Status.FAIL]
    if failed:
        raise VerificationError(
            f"{len(failed)} of {len(results)} properties failed: "
            + "; ".join(f"{r.name} ({r.detail})" for r in failed))
    return _to_csv(results_frame(results))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-o", "--output", default=None,
        help="Output file. Default: standard output.")
    common.add_argument("--threads", type=int, default=None,
        help="Worker threads. Default: QFCRE_THREADS or the number of cores.")
    common.add_argument("--seed", type=int, default=0, help="Random seed. Default: 0.")
    common.add_argument("-v", "--verbose", action="count", default=0,
        help="Log more detail to standard error (-v info, -vv debug).")

    parser = _Parser(prog="qfcre",
        description="Quantile-based fractional cumulative residual entropy.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", parents=[common], help="Q-FCRE or dynamic Q-FCRE of a model.")
    p.add_argument("--model", required=True, help="Model, e.g. 'exponential(lambda=1)'.")
    p.add_argument("--alpha", required=True, help="Comma-separated fractional orders.")
    p.add_argument("--dynamic", action="store_true", help="Evaluate the dynamic Q-FCRE.")
    p.add_argument("--u-grid", default="0:0.9:10",
        help="Probabilities for --dynamic: start:stop:count or a list. Default: 0:0.9:10.")
    p.add_argument("--force-quadrature", action="store_true", help="Ignore closed forms.")
    p.set_defaults(func=_cmd_entropy)

    p = sub.add_parser("estimate", parents=[common], help="Estimate Q-FCRE from a sample file.")
    p.add_argument("--input", required=True, help="Sample file, one value per line.")
    p.add_argument("--alpha", required=True, help="Comma-separated fractional orders.")
    p.add_argument("--window", type=int, default=None, help="Window length.")
    p.add_argument("--step", type=int, default=1, help="Window step. Default: 1.")
    p.add_argument("--convention", choices=CONVENTIONS, default="spacings")
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser("simulate", parents=[common], help="Monte-Carlo bias and MSE study.")
    p.add_argument("--model", required=True, help="Model specification.")
    p.add_argument("--alpha", required=True, type=float, help="Fractional order.")
    p.add_argument("--n", required=True, help="Comma-separated sample sizes.")
    p.add_argument("--reps", type=int, default=DEFAULT_REPLICATIONS,
        help=f"Replications per sample size. Default: {DEFAULT_REPLICATIONS}.")
    p.add_argument("--convention", choices=CONVENTIONS, default="spacings")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("chaos", parents=[common], help="Q-FCRE of logistic-map series.")
    p.add_argument("--a", required=True, help="Comma-separated control parameters.")
    p.add_argument("--x0", type=float, default=0.1, help="Initial value. Default: 0.1.")
    p.add_argument("--length", type=int, default=DEFAULT_CHAOS_LENGTH,
        help=f"Series length. Default: {DEFAULT_CHAOS_LENGTH}.")
    p.add_argument("--burn-in", type=int, default=0, help="Discarded iterates. Default: 0.")
    p.add_argument("--alpha", default="0.5", help="Comma-separated fractional orders.")
    p.set_defaults(func=_cmd_chaos)

    p = sub.add_parser("finance", parents=[common], help="Q-FCRE of price returns per period.")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="Price CSV file.")
    source.add_argument("--synthetic", action="store_true",
        help="Use a synthetic two-regime series instead of a file.")
    p.add_argument("--partition", default="yearly", help="'yearly' or 'window:N,K'.")
    p.add_argument("--alpha", default="0.2,0.4,0.6,0.8,1", help="Comma-separated fractional orders.")
    p.add_argument("--emit", choices=["entropy", "returns"], default="entropy")
    p.add_argument("--date-column", default="Date")
    p.add_argument("--close-column", default="Close")
    p.add_argument("--date-format", default=None)
    p.add_argument("--delimiter", default=",")
    p.add_argument("--convention", choices=CONVENTIONS, default="spacings")
    p.set_defaults(func=_cmd_finance)

    p = sub.add_parser("verify", parents=[common], help="Run the property checks.")
    p.set_defaults(func=_cmd_verify)

    return parser


def _configure_logging(verbosity: int):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level,
        format="%(levelname)s %(name)s: %(message)s", force=True)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line and return the exit status. Output is written only
    after the subcommand has completed.

    """
    try:
        args = build_parser().parse_args(argv)
        _configure_logging(args.verbose)
        text = args.func(args)

        if args.output is None:
            sys.stdout.write(text)
            sys.stdout.flush()
        else:
            with open(args.output, "w", encoding="utf-8", newline="") as f:
                f.write(text)
    except ArithmeticError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
