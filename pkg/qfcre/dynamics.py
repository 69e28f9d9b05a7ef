#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Dynamic (residual) Q-FCRE: the entropy of the residual life beyond the
# quantile Q(u), and its behaviour as u increases.
#
# Date:   October 2026

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple

import numpy as np
import pandas as pd

from .calculations import EntropyValue, Method, integrate_log_domain, _nonnegative
from .config import MONOTONE_TOL, QuadratureConfig, get_quad_config
from .models import AlphaLike, QuantileModel, as_order


logger = logging.getLogger(__name__)


class Trend(str, Enum):
    CONSTANT = "constant"
    INCREASING = "increasing"
    DECREASING = "decreasing"
    NON_MONOTONE = "non-monotone"


@dataclass(frozen=True)
class DynamicProfile:
    """Dynamic Q-FCRE evaluated on a grid of probabilities, with its trend."""
    points: List[Tuple[float, EntropyValue]]
    classification: Trend

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "u": [u for u, _ in self.points],
            "alpha": [value.alpha.alpha for _, value in self.points],
            "entropy": [value.value for _, value in self.points],
            "method": [value.method.value for _, value in self.points],
        })


def qdfcre(
    model: QuantileModel,
    alpha: AlphaLike,
    u: float,
    cfg: QuadratureConfig = None
) -> EntropyValue:
    """
    Dynamic Q-FCRE at probability level u,

        E_alpha(u) = 1/(1 - u) int_u^1 (1 - p)(log(1 - u) - log(1 - p))^alpha q(p) dp.

    With 1 - p = (1 - u) exp(-s) this is
    (1 - u) int_0^inf exp(-2s) s^alpha q(u_s) ds, which reduces to `qfcre`
    at u = 0.

    Parameters
    ----------
    model : QuantileModel
        Quantile model.

    alpha : float or FractionalOrder
        Fractional order in [0, 1].

    u : float
        Probability level, 0 <= u < 1.

    cfg : QuadratureConfig, optional
        Quadrature settings.

    Returns
    -------
    entropy : EntropyValue
        Dynamic entropy at `u`.

    """
    order = as_order(alpha)
    if cfg is None:
        cfg = get_quad_config()

    # Error check
    u = float(u)
    if not 0 <= u < 1:
        raise ValueError(f"qdfcre requires 0 <= u < 1, got u={u}")

    if model.closed_form_qdfcre is not None and not cfg.force_quadrature:
        value = float(model.closed_form_qdfcre(order.alpha, u))
        return EntropyValue(value, order, Method.CLOSED_FORM)

    a = order.alpha
    t_u = -np.log1p(-u)
    q_log = model.q_log
    f = lambda s: np.exp(-2 * s) * s**a * q_log(t_u + s)

    what = f"qdfcre[{model.label}, alpha={a:g}, u={u:g}]"
    integral, est_error = integrate_log_domain(f, cfg, a, what)
    value = _nonnegative((1 - u) * integral, (1 - u) * est_error, what)
    return EntropyValue(value, order, Method.QUADRATURE, (1 - u) * est_error)


def classify_trend(values: Sequence[float], tol: float = MONOTONE_TOL) -> Trend:
    """
    Classify a sequence by its successive differences. Differences within
    `tol` count as ties.

    """
    diffs = np.diff(np.asarray(values, dtype=float))
    if np.all(np.abs(diffs) <= tol):
        return Trend.CONSTANT
    if np.all(diffs >= -tol):
        return Trend.INCREASING
    if np.all(diffs <= tol):
        return Trend.DECREASING
    return Trend.NON_MONOTONE


def qdfcre_profile(
    model: QuantileModel,
    alpha: AlphaLike,
    grid: Sequence[float],
    cfg: QuadratureConfig = None
) -> DynamicProfile:
    """
    Dynamic Q-FCRE on a strictly increasing grid in [0, 1), classified as
    constant, increasing (IQ-DFCRE), decreasing (DQ-DFCRE) or non-monotone.

    """
    grid = np.asarray(grid, dtype=float)

    # Error check
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("grid must be a nonempty list of probabilities.")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("grid must be strictly increasing.")
    if grid[0] < 0 or grid[-1] >= 1:
        raise ValueError("grid must lie within [0, 1).")

    points = [(float(u), qdfcre(model, alpha, u, cfg)) for u in grid]
    trend = classify_trend([value.value for _, value in points])
    logger.info("Dynamic profile of %s: %s", model.label, trend.value)
    return DynamicProfile(points, trend)
