#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Transformations producing new quantile models from existing ones:
# affine maps, sums and products of quantile functions, reciprocals,
# proportional hazards, increasing transformations and escort models.
#
# Date:   October 2026

import logging
from typing import Callable

import numpy as np
from scipy.integrate import quad
from scipy.special import gamma

from .calculations import escort_normalizer
from .config import QuadratureConfig, get_quad_config
from .errors import DivergenceError, ModelDomainError
from .models import QuantileModel, check_grid


logger = logging.getLogger(__name__)


def _arr(x) -> np.ndarray:
    return np.asarray(x, dtype=float)


def affine(model: QuantileModel, a: float, b: float = 0.0) -> QuantileModel:
    """
    Quantile model of Y = aX + b.

    Parameters
    ----------
    model : QuantileModel
        Model of X.

    a : float
        Scale, a > 0.

    b : float, optional
        Shift, b >= 0. Default: 0.

    Returns
    -------
    model : QuantileModel
        Model of Y with Q_Y = a Q + b and q_Y = a q. Closed-form entropies
        are scaled by `a`; the shift does not change them.

    """
    # Error check
    if not a > 0:
        raise ModelDomainError(f"affine requires a > 0, got a={a}")
    if not b >= 0:
        raise ModelDomainError(f"affine requires b >= 0, got b={b}")

    X = model
    qfcre = None
    if X.closed_form_qfcre is not None:
        qfcre = lambda alpha: a * X.closed_form_qfcre(alpha)
    qdfcre = None
    if X.closed_form_qdfcre is not None:
        qdfcre = lambda alpha, u: a * X.closed_form_qdfcre(alpha, u)
    survival = None
    if X.survival is not None:
        survival = lambda x: X.survival((_arr(x) - b) / a)

    return QuantileModel(
        name = "affine",
        params = {"a": a, "b": b},
        Q = lambda u: a * X.Q(u) + b,
        q = lambda u: a * X.q(u),
        support_floor = a * X.support_floor + b,
        Q_log = lambda t: a * X.Q_log(t) + b,
        q_log = lambda t: a * X.q_log(t),
        closed_form_qfcre = qfcre,
        closed_form_qdfcre = qdfcre,
        survival = survival,
        parents = (X,),
    )


def sum_compose(m1: QuantileModel, m2: QuantileModel) -> QuantileModel:
    """
    Model with quantile function Q1 + Q2 and quantile density q1 + q2.
    The Q-FCRE of the sum is the sum of the Q-FCREs.

    """
    qfcre = None
    if m1.closed_form_qfcre is not None and m2.closed_form_qfcre is not None:
        qfcre = lambda alpha: m1.closed_form_qfcre(alpha) + m2.closed_form_qfcre(alpha)
    qdfcre = None
    if m1.closed_form_qdfcre is not None and m2.closed_form_qdfcre is not None:
        qdfcre = lambda alpha, u: (m1.closed_form_qdfcre(alpha, u)
            + m2.closed_form_qdfcre(alpha, u))

    return QuantileModel(
        name = "sum",
        params = {},
        Q = lambda u: m1.Q(u) + m2.Q(u),
        q = lambda u: m1.q(u) + m2.q(u),
        support_floor = m1.support_floor + m2.support_floor,
        Q_log = lambda t: m1.Q_log(t) + m2.Q_log(t),
        q_log = lambda t: m1.q_log(t) + m2.q_log(t),
        closed_form_qfcre = qfcre,
        closed_form_qdfcre = qdfcre,
        parents = (m1, m2),
    )


def _require_positive(model: QuantileModel, operation: str):
    """Reject models whose quantile function is not positive on the check grid."""
    u = check_grid()
    values = _arr(model.Q(u))
    bad = ~(values > 0)
    if np.any(bad):
        raise ModelDomainError(
            f"{operation} requires a positive quantile function; "
            f"{model.label} has Q({u[bad][0]:g}) = {values[bad][0]:g}")


def product_compose(m1: QuantileModel, m2: QuantileModel) -> QuantileModel:
    """
    Model with quantile function Q1 Q2 for positive Q1 and Q2. The quantile
    density is Q1 q2 + Q2 q1.

    """
    _require_positive(m1, "product_compose")
    _require_positive(m2, "product_compose")

    return QuantileModel(
        name = "product",
        params = {},
        Q = lambda u: m1.Q(u) * m2.Q(u),
        q = lambda u: m1.Q(u) * m2.q(u) + m2.Q(u) * m1.q(u),
        support_floor = m1.support_floor * m2.support_floor,
        Q_log = lambda t: m1.Q_log(t) * m2.Q_log(t),
        q_log = lambda t: m1.Q_log(t) * m2.q_log(t) + m2.Q_log(t) * m1.q_log(t),
        parents = (m1, m2),
    )


def reciprocal(model: QuantileModel) -> QuantileModel:
    """
    Model of Y = 1/X for positive X: Q_Y(u) = 1/Q(1 - u) and
    q_Y(u) = q(1 - u)/Q(1 - u)^2.

    The reciprocal of a power model Q(u) = beta u^delta with delta < 1 is a
    Pareto law and carries its closed-form Q-FCRE.

    """
    _require_positive(model, "reciprocal")
    X = model

    # On t = -log(1 - u) the reflected probability 1 - u is exp(-t)
    def Q_log(t):
        return 1 / X.Q(np.exp(-_arr(t)))

    def q_log(t):
        v = np.exp(-_arr(t))
        return X.q(v) / X.Q(v)**2

    qfcre = None
    if X.name == "power" and X.params["delta"] < 1:
        beta0, delta = X.params["beta"], X.params["delta"]
        qfcre = lambda alpha: delta * gamma(alpha + 1) / (beta0 * (1 - delta)**(alpha + 1))

    survival = None
    if X.survival is not None:
        survival = lambda y: np.where(_arr(y) > 0,
            1 - X.survival(1 / np.maximum(_arr(y), 1e-300)), 1.0)

    with np.errstate(divide="ignore"):
        floor = float(1 / X.Q(1 - 1e-12))

    return QuantileModel(
        name = "reciprocal",
        params = {},
        Q = lambda u: 1 / X.Q(1 - _arr(u)),
        q = lambda u: X.q(1 - _arr(u)) / X.Q(1 - _arr(u))**2,
        support_floor = floor,
        Q_log = Q_log,
        q_log = q_log,
        closed_form_qfcre = qfcre,
        survival = survival,
        parents = (X,),
    )


def phm(model: QuantileModel, theta: float) -> QuantileModel:
    """
    Proportional hazards model Q_Y(u) = Q_X(1 - (1 - u)^(1/theta)), whose
    survival function is S_X^theta.

    Parameters
    ----------
    model : QuantileModel
        Baseline model X.

    theta : float
        Hazard multiplier, theta > 0.

    Returns
    -------
    model : QuantileModel
        Model of Y. For a Weibull-family baseline with theta > A - 1 the
        Q-FCRE is theta^alpha Gamma(alpha - B + 1)/(theta - A + 1)^(alpha - B + 1).

    """
    # Error check
    if not theta > 0:
        raise ModelDomainError(f"phm requires theta > 0, got theta={theta}")

    X = model
    # On the t-domain the transform is t -> t/theta
    Q_log = lambda t: X.Q_log(_arr(t) / theta)
    q_log = lambda t: (X.q_log(_arr(t) / theta) / theta
        * np.exp(_arr(t) * (1 - 1 / theta)))

    def Q(u):
        return X.Q(-np.expm1(np.log1p(-_arr(u)) / theta))

    def q(u):
        u = _arr(u)
        inner = -np.expm1(np.log1p(-u) / theta)
        return X.q(inner) * (1 - u)**(1 / theta - 1) / theta

    qfcre = None
    qdfcre = None
    if X.name == "weibull_family":
        A, B = X.params["A"], X.params["B"]
        if theta > A - 1:
            qfcre = lambda alpha: (theta**alpha * gamma(alpha - B + 1)
                / (theta - A + 1)**(alpha - B + 1))
    elif X.name == "exponential":
        rate = X.params["lambda"] * theta
        qfcre = lambda alpha: gamma(alpha + 1) / rate
        qdfcre = lambda alpha, u: np.full_like(_arr(u), gamma(alpha + 1) / rate)

    survival = None
    if X.survival is not None:
        survival = lambda x: X.survival(x)**theta

    return QuantileModel(
        name = "phm",
        params = {"theta": theta},
        Q = Q,
        q = q,
        support_floor = X.support_floor,
        Q_log = Q_log,
        q_log = q_log,
        closed_form_qfcre = qfcre,
        closed_form_qdfcre = qdfcre,
        survival = survival,
        parents = (X,),
    )


def monotone_transform(
    model: QuantileModel,
    zeta: Callable,
    zeta_prime: Callable,
    name: str = "zeta"
) -> QuantileModel:
    """
    Model of Y = zeta(X) for an increasing function zeta.

    Parameters
    ----------
    model : QuantileModel
        Model of X.

    zeta : Callable
        Increasing function, vectorized.

    zeta_prime : Callable
        Derivative of `zeta`, supplied by the caller.

    name : str, optional
        Name of the transformation, used in the model label.

    Returns
    -------
    model : QuantileModel
        Model with Q_Y = zeta(Q_X) and q_Y = q_X zeta'(Q_X).

    """
    X = model

    # zeta' must be positive wherever the quantile function is checked
    u = check_grid()
    slope = _arr(zeta_prime(X.Q(u)))
    bad = ~(slope > 0)
    if np.any(bad):
        raise ModelDomainError(
            f"monotone_transform requires zeta' > 0; zeta'(Q({u[bad][0]:g})) = "
            f"{slope[bad][0]:g}")

    return QuantileModel(
        name = f"monotone[{name}]",
        params = {},
        Q = lambda u: zeta(X.Q(u)),
        q = lambda u: X.q(u) * zeta_prime(X.Q(u)),
        support_floor = float(zeta(X.support_floor)),
        Q_log = lambda t: zeta(X.Q_log(t)),
        q_log = lambda t: X.q_log(t) * zeta_prime(X.Q_log(t)),
        parents = (X,),
    )


def escort(
    model: QuantileModel,
    c: float,
    cfg: QuadratureConfig = None
) -> QuantileModel:
    """
    Escort model of order c with quantile density

        q_e(u) = q(u)^c N(c),   N(c) = int_0^1 q(p)^(1 - c) dp.

    The quantile function is recovered by integrating q_e from the support
    floor of `model`, one quadrature per evaluated point.

    Raises
    ------
    DivergenceError
        If the normalizer N(c) does not converge.

    """
    # Error check
    if not c > 0:
        raise ModelDomainError(f"escort requires c > 0, got c={c}")
    if cfg is None:
        cfg = get_quad_config()

    X = model
    norm, _ = escort_normalizer(X, c, cfg)
    if not (np.isfinite(norm) and norm > 0):
        raise DivergenceError(f"Escort normalizer of {X.label} is {norm:g}", norm)

    q_log = lambda t: norm * X.q_log(t)**c

    if c == 1:
        Q_log = X.Q_log
    else:
        def _Q_log_scalar(t):
            if t <= 0:
                return X.support_floor
            with np.errstate(all="ignore"):
                value, _ = quad(lambda s: float(np.exp(-s) * q_log(s)), 0.0, t,
                    epsabs=cfg.abs_tol, epsrel=cfg.rel_tol, limit=cfg.max_refinements)
            return X.support_floor + value
        Q_log = np.vectorize(_Q_log_scalar, otypes=[float])

    return QuantileModel(
        name = "escort",
        params = {"c": c},
        Q = lambda u: Q_log(-np.log1p(-_arr(u))),
        q = lambda u: norm * X.q(u)**c,
        support_floor = X.support_floor,
        Q_log = Q_log,
        q_log = q_log,
        parents = (X,),
    )
