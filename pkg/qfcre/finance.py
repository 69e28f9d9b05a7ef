#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Price returns and the Q-FCRE of return distributions per calendar year
# or per sliding window.
#
# Date:   October 2026

import logging
import re
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
import pandas as pd

from .estimator import SampleData, estimate_qfcre
from .models import AlphaLike, as_order


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ReturnSeries:
    """
    Dated closing prices with log returns r_t = log x_t - log x_{t-1} and
    shifted returns y_t = r_t - min(r), which are nonnegative with minimum
    exactly 0. Return t is dated by the later of its two prices.

    """
    dates: pd.DatetimeIndex
    prices: np.ndarray
    log_returns: np.ndarray
    shifted_returns: np.ndarray

    @property
    def return_dates(self) -> pd.DatetimeIndex:
        return self.dates[1:]

    def to_frame(self) -> pd.DataFrame:
        """Columns `date`, `log_return`, `shifted_return`."""
        return pd.DataFrame({
            "date": self.return_dates.strftime("%Y-%m-%d"),
            "log_return": self.log_returns,
            "shifted_return": self.shifted_returns,
        })


def to_return_series(dates: Sequence, prices: Sequence[float]) -> ReturnSeries:
    """
    Build log returns and globally shifted returns from closing prices.

    Parameters
    ----------
    dates : list or DatetimeIndex
        Strictly increasing dates, one per price.

    prices : list or ndarray
        Positive closing prices, at least 2.

    Returns
    -------
    series : ReturnSeries
        Prices and derived returns.

    """
    dates = pd.DatetimeIndex(pd.to_datetime(dates))
    prices = np.array(prices, dtype=float)

    # Error check
    if prices.ndim != 1 or prices.size < 2:
        raise ValueError("At least 2 prices are required.")
    if len(dates) != prices.size:
        raise ValueError(f"Got {len(dates)} dates for {prices.size} prices.")
    if not np.all(prices > 0):
        raise ValueError("Prices must be positive.")
    if not dates.is_monotonic_increasing or not dates.is_unique:
        raise ValueError("Dates must be strictly increasing.")

    log_returns = np.diff(np.log(prices))
    shifted = log_returns - log_returns.min()

    for array in (prices, log_returns, shifted):
        array.setflags(write=False)
    return ReturnSeries(dates, prices, log_returns, shifted)


@dataclass(frozen=True)
class Partition:
    """Calendar-year partition, or fixed windows of `length` returns every `step`."""
    kind: str
    length: int = 0
    step: int = 0

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``yearly`` or ``window:N,K``."""
        text = text.strip()
        if text == "yearly":
            return cls("yearly")

        match = re.fullmatch(r"window:(\d+),(\d+)", text)
        if match is None:
            raise ValueError(
                f"Invalid partition {text!r}; expected 'yearly' or 'window:N,K'")
        length, step = int(match.group(1)), int(match.group(2))
        if length < 2 or step < 1:
            raise ValueError(
                f"Window partition needs N >= 2 and K >= 1, got N={length}, K={step}")
        return cls("window", length, step)


def _periods(series: ReturnSeries, partition: Partition):
    """Yield (label, shifted returns) per period in order."""
    y = series.shifted_returns
    dates = series.return_dates

    if partition.kind == "yearly":
        years = dates.year.to_numpy()
        for year in np.unique(years):
            yield str(year), y[years == year]
    else:
        if y.size < partition.length:
            raise ValueError(
                f"Window length {partition.length} exceeds the {y.size} returns.")
        for start in range(0, y.size - partition.length + 1, partition.step):
            stop = start + partition.length
            label = f"{dates[start]:%Y-%m-%d}/{dates[stop - 1]:%Y-%m-%d}"
            yield label, y[start:stop]


def period_entropy(
    series: ReturnSeries,
    partition: Union[Partition, str],
    alphas: Sequence[AlphaLike],
    convention: str = "spacings"
) -> pd.DataFrame:
    """
    Q-FCRE estimates of the shifted returns within each period.

    Parameters
    ----------
    series : ReturnSeries
        Returns to analyse.

    partition : Partition or str
        ``yearly`` (by the year of the later date of each return) or
        ``window:N,K``.

    alphas : list
        Fractional orders.

    convention : str, optional
        Estimator convention, see `estimate_qfcre`.

    Returns
    -------
    table : DataFrame
        Columns `period`, `alpha`, `entropy`, ordered by period then alpha.
        Periods with fewer than 2 returns are skipped with a warning.

    """
    if isinstance(partition, str):
        partition = Partition.parse(partition)
    orders = [as_order(alpha) for alpha in alphas]

    rows = []
    for label, values in _periods(series, partition):
        if values.size < 2:
            logger.warning("Skipping period %s with %d return(s)", label, values.size)
            continue
        sample = SampleData.from_observations(values)
        for order in orders:
            rows.append((label, order.alpha, estimate_qfcre(sample, order, convention).value))

    return pd.DataFrame(rows, columns=["period", "alpha", "entropy"])


def synthetic_two_regime(
    n_low: int = 750,
    n_high: int = 750,
    low_scale: float = 1.0,
    high_scale: float = 3.0,
    seed: int = 0,
    start: str = "2014-01-01"
) -> ReturnSeries:
    """
    Synthetic prices whose log returns are centred exponential draws, with
    scale `low_scale` for the first `n_low` returns and `high_scale` for
    the next `n_high`. Dated on consecutive business days.

    """
    if n_low < 2 or n_high < 2:
        raise ValueError("Each regime needs at least 2 returns.")

    rng = np.random.default_rng(seed)
    returns = np.concatenate([
        low_scale * (rng.exponential(size=n_low) - 1),
        high_scale * (rng.exponential(size=n_high) - 1),
    ])
    # Scale the log returns down to daily magnitudes
    returns *= 0.01

    prices = 100.0 * np.exp(np.concatenate([[0.0], np.cumsum(returns)]))
    dates = pd.bdate_range(start=start, periods=prices.size)
    return to_return_series(dates, prices)
