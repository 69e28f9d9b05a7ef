#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Functions to read samples and price histories from text files.
#
# Date:   October 2026

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import pandas as pd

from .errors import PriceDataError, SampleError
from .estimator import SampleData


logger = logging.getLogger(__name__)


def load_sample_txt(filename: str) -> SampleData:
    """
    Read a sample file: one nonnegative decimal per line, lines starting
    with ``#`` ignored. The values need not be sorted.

    Parameters
    ----------
    filename : str
        Path of the sample file.

    Returns
    -------
    sample : SampleData
        Order statistics of the sample.

    """
    try:
        values = np.loadtxt(filename, comments="#", ndmin=1, dtype=float)
    except ValueError as e:
        raise SampleError(f"Cannot parse sample file {filename}: {e}")

    if values.ndim != 1:
        raise SampleError(f"Sample file {filename} must have one value per line.")
    return SampleData.from_observations(values)


@dataclass(frozen=True)
class CsvSpec:
    """
    Layout of a price file.

    Parameters
    ----------
    date_column : str
        Header of the date column. Default: "Date".

    close_column : str
        Header of the closing price column. Default: "Close".

    date_format : str, optional
        strftime-style format of the dates. ISO-8601 is parsed when None.

    delimiter : str
        Field separator. Default: ",".

    """
    date_column: str = "Date"
    close_column: str = "Close"
    date_format: Optional[str] = None
    delimiter: str = ","


def load_prices(filename: str, csv_spec: CsvSpec = None) -> Tuple[pd.DatetimeIndex, np.ndarray]:
    """
    Read dated closing prices from a CSV file with a header row.

    Rows are returned sorted by date. Row numbers in diagnostics count data
    rows from 1, the header excluded.

    Parameters
    ----------
    filename : str
        Path of the CSV file.

    csv_spec : CsvSpec, optional
        Column names, date format and delimiter.

    Returns
    -------
    dates : DatetimeIndex
        Strictly increasing dates.

    prices : ndarray
        Positive closing prices.

    Raises
    ------
    PriceDataError
        On a missing column, an unparsable date or price, a non-positive
        price, or a duplicated date.

    """
    if csv_spec is None:
        csv_spec = CsvSpec()

    frame = pd.read_csv(filename, sep=csv_spec.delimiter, dtype=str,
        skipinitialspace=True)

    # Error check
    for column in (csv_spec.date_column, csv_spec.close_column):
        if column not in frame.columns:
            raise PriceDataError(
                f"column {column!r} not found in {filename}; "
                f"columns are {list(frame.columns)}")
    if len(frame) == 0:
        raise PriceDataError(f"{filename} has no data rows")

    rows = np.arange(1, len(frame) + 1)

    dates = pd.to_datetime(frame[csv_spec.date_column], format=csv_spec.date_format,
        errors="coerce")
    bad = dates.isna().to_numpy()
    if bad.any():
        raise PriceDataError(
            f"cannot parse date {frame[csv_spec.date_column].iloc[bad.argmax()]!r}",
            int(rows[bad][0]))

    prices = pd.to_numeric(frame[csv_spec.close_column], errors="coerce").to_numpy(float)
    bad = ~np.isfinite(prices)
    if bad.any():
        raise PriceDataError(
            f"missing or unparsable price {frame[csv_spec.close_column].iloc[bad.argmax()]!r}",
            int(rows[bad][0]))
    bad = prices <= 0
    if bad.any():
        raise PriceDataError(f"non-positive price {prices[bad][0]:g}", int(rows[bad][0]))

    duplicated = dates.duplicated(keep="first").to_numpy()
    if duplicated.any():
        raise PriceDataError(
            f"duplicate date {dates[duplicated].iloc[0].date()}", int(rows[duplicated][0]))

    order = np.argsort(dates.to_numpy(), kind="stable")
    if np.any(order != np.arange(len(order))):
        logger.info("Price rows in %s were not in date order; sorted", filename)

    logger.info("Loaded %d prices from %s", len(prices), filename)
    return pd.DatetimeIndex(dates.to_numpy()[order]), prices[order]
