#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Quantile functions, quantile densities and known entropies of the
# built-in models.
#
# Every builder returns a dictionary with the keys
#
#     Q, q          functions of the probability u
#     Q_log, q_log  the same functions of t = -log(1 - u)
#     floor         Q(0+)
#     qfcre         closed-form Q-FCRE as a function of alpha, or None
#     qdfcre        closed-form Q-DFCRE as a function of (alpha, u), or None
#     survival      closed-form survival function of x, or None
#
# References
# ----------
# [1] Nair, N. U., Sankaran, P. G. and Balakrishnan, N. (2013). Quantile-Based
#     Reliability Analysis. Birkhauser.
# [2] Hankin, R. K. S. and Lee, A. (2006). A new family of non-negative
#     distributions. Aust. N. Z. J. Stat. 48, 67-78.
#
# Date:   October 2026

import numpy as np
from scipy.special import gamma, beta as beta_fn, betainc, gammainc, hyp1f1, hyp2f1

from .errors import ModelDomainError


def _arr(x) -> np.ndarray:
    return np.asarray(x, dtype=float)


def _survival_prob(t: np.ndarray) -> np.ndarray:
    """1 - exp(-t) without cancellation."""
    return -np.expm1(-t)


def uniform(b: float) -> dict:
    if not b > 0:
        raise ModelDomainError(f"uniform requires b > 0, got b={b}")

    def qfcre(alpha):
        return b * gamma(alpha + 1) / 2**(alpha + 1)

    return dict(
        Q = lambda u: b * _arr(u),
        q = lambda u: np.full_like(_arr(u), b),
        Q_log = lambda t: b * _survival_prob(_arr(t)),
        q_log = lambda t: np.full_like(_arr(t), b),
        floor = 0.0,
        qfcre = qfcre,
        qdfcre = lambda alpha, u: (1 - _arr(u)) * qfcre(alpha),
        survival = lambda x: np.clip(1 - _arr(x) / b, 0.0, 1.0),
    )


def exponential(lam: float) -> dict:
    if not lam > 0:
        raise ModelDomainError(f"exponential requires lambda > 0, got lambda={lam}")

    def qfcre(alpha):
        return gamma(alpha + 1) / lam

    return dict(
        Q = lambda u: -np.log1p(-_arr(u)) / lam,
        q = lambda u: 1 / (lam * (1 - _arr(u))),
        Q_log = lambda t: _arr(t) / lam,
        q_log = lambda t: np.exp(_arr(t)) / lam,
        floor = 0.0,
        qfcre = qfcre,
        qdfcre = lambda alpha, u: np.full_like(_arr(u), qfcre(alpha)),
        survival = lambda x: np.exp(-lam * np.maximum(_arr(x), 0.0)),
    )


def power(beta: float, delta: float) -> dict:
    if not (beta > 0 and delta > 0):
        raise ModelDomainError(
            f"power requires beta > 0 and delta > 0, got beta={beta}, delta={delta}")

    return dict(
        Q = lambda u: beta * _arr(u)**delta,
        q = lambda u: beta * delta * _arr(u)**(delta - 1),
        Q_log = lambda t: beta * _survival_prob(_arr(t))**delta,
        q_log = lambda t: beta * delta * _survival_prob(_arr(t))**(delta - 1),
        floor = 0.0,
        qfcre = None,
        qdfcre = None,
        survival = None,
    )


def pareto1(beta: float) -> dict:
    # Q-FCRE is finite only for beta < 1
    if not 0 < beta < 1:
        raise ModelDomainError(f"pareto1 requires 0 < beta < 1, got beta={beta}")

    def survival(x):
        x = _arr(x)
        with np.errstate(divide="ignore"):
            return np.where(x < 1, 1.0, np.maximum(x, 1.0)**(-1 / beta))

    return dict(
        Q = lambda u: (1 - _arr(u))**(-beta),
        q = lambda u: beta * (1 - _arr(u))**(-beta - 1),
        Q_log = lambda t: np.exp(beta * _arr(t)),
        q_log = lambda t: beta * np.exp((beta + 1) * _arr(t)),
        floor = 1.0,
        qfcre = lambda alpha: beta * gamma(alpha + 1) / (1 - beta)**(alpha + 1),
        qdfcre = None,
        survival = survival,
    )


def rescaled_beta(c: float, r: float) -> dict:
    if not (c > 0 and r > 0):
        raise ModelDomainError(
            f"rescaled_beta requires c > 0 and r > 0, got c={c}, r={r}")

    def qdfcre(alpha, u):
        return (r**alpha * c * (1 - _arr(u))**(1 / r) * gamma(alpha + 1)
            / (r + 1)**(alpha + 1))

    return dict(
        Q = lambda u: c * (1 - (1 - _arr(u))**(1 / r)),
        q = lambda u: c / r * (1 - _arr(u))**(1 / r - 1),
        Q_log = lambda t: -c * np.expm1(-_arr(t) / r),
        q_log = lambda t: c / r * np.exp(-_arr(t) * (1 / r - 1)),
        floor = 0.0,
        qfcre = lambda alpha: float(qdfcre(alpha, 0.0)),
        qdfcre = qdfcre,
        survival = None,
    )


def lambda_family(C: float, A: float, beta: float) -> dict:
    if not C > 0:
        raise ModelDomainError(f"lambda_family requires C > 0, got C={C}")
    if not beta > -1:
        raise ModelDomainError(f"lambda_family requires beta > -1, got beta={beta}")

    # Q(u) = C * B(u; beta + 1, 1 - A - beta), the incomplete beta function
    a, b = beta + 1, 1 - A - beta

    def Q(u):
        u = _arr(u)
        if b > 0:
            return C * beta_fn(a, b) * betainc(a, b, u)
        return C * u**a / a * hyp2f1(a, 1 - b, a + 1, u)

    return dict(
        Q = Q,
        q = lambda u: C * _arr(u)**beta * (1 - _arr(u))**(-(A + beta)),
        Q_log = lambda t: Q(_survival_prob(_arr(t))),
        q_log = lambda t: (C * _survival_prob(_arr(t))**beta
            * np.exp((A + beta) * _arr(t))),
        floor = 0.0,
        qfcre = None,
        qdfcre = None,
        survival = None,
    )


def _weibull_family_Q_log(A: float, B: float, t: np.ndarray) -> np.ndarray:
    """
    Q as a function of t = -log(1 - u): the integral of exp((A - 1)s) s^(-B)
    over [0, t].

    """
    s = 1 - B
    if A == 1:
        return t**s / s
    elif A < 1:
        m = 1 - A
        return gamma(s) * gammainc(s, m * t) / m**s
    else:
        return t**s / s * hyp1f1(s, s + 1, (A - 1) * t)


def weibull_family(A: float, B: float) -> dict:
    if not (A > 0 and B < 1):
        raise ModelDomainError(
            f"weibull_family requires A > 0 and B < 1, got A={A}, B={B}")

    qfcre = None
    if A < 2:
        def qfcre(alpha):
            return gamma(alpha - B + 1) / (2 - A)**(alpha - B + 1)

    # The A = 1 member is a Weibull law with a closed survival function
    survival = None
    if A == 1:
        def survival(x):
            x = np.maximum(_arr(x), 0.0)
            return np.exp(-((1 - B) * x)**(1 / (1 - B)))

    return dict(
        Q = lambda u: _weibull_family_Q_log(A, B, -np.log1p(-_arr(u))),
        q = lambda u: (1 - _arr(u))**(-A) * (-np.log1p(-_arr(u)))**(-B),
        Q_log = lambda t: _weibull_family_Q_log(A, B, _arr(t)),
        q_log = lambda t: np.exp(A * _arr(t)) * _arr(t)**(-B),
        floor = 0.0,
        qfcre = qfcre,
        qdfcre = None,
        survival = survival,
    )


def power_pareto(C: float, l1: float, l2: float) -> dict:
    if not (C > 0 and l1 > 0 and l2 > 0):
        raise ModelDomainError(
            f"power_pareto requires C, l1, l2 > 0, got C={C}, l1={l1}, l2={l2}")

    def q(u):
        u = _arr(u)
        return C * u**(l1 - 1) * (1 - u)**(-l2 - 1) * (l1 * (1 - u) + l2 * u)

    def q_log(t):
        t = _arr(t)
        s = _survival_prob(t)
        return C * s**(l1 - 1) * np.exp((l2 + 1) * t) * (l1 * np.exp(-t) + l2 * s)

    return dict(
        Q = lambda u: C * _arr(u)**l1 * (1 - _arr(u))**(-l2),
        q = q,
        Q_log = lambda t: C * _survival_prob(_arr(t))**l1 * np.exp(l2 * _arr(t)),
        q_log = q_log,
        floor = 0.0,
        qfcre = None,
        qdfcre = None,
        survival = None,
    )


def govindarajulu(theta: float, sigma: float, beta: float) -> dict:
    if not (sigma > 0 and beta > 0):
        raise ModelDomainError(
            f"govindarajulu requires sigma > 0 and beta > 0, got sigma={sigma}, beta={beta}")

    def Q(u):
        u = _arr(u)
        return theta + sigma * ((beta + 1) * u**beta - beta * u**(beta + 1))

    return dict(
        Q = Q,
        q = lambda u: sigma * beta * (beta + 1) * _arr(u)**(beta - 1) * (1 - _arr(u)),
        Q_log = lambda t: Q(_survival_prob(_arr(t))),
        q_log = lambda t: (sigma * beta * (beta + 1)
            * _survival_prob(_arr(t))**(beta - 1) * np.exp(-_arr(t))),
        floor = float(theta),
        qfcre = None,
        qdfcre = None,
        survival = None,
    )


def linear_mrq(a: float, b: float) -> dict:
    # q(u) = (a + b) / (1 - u) - 4 is positive on (0, 1) only when a + b > 4
    if not a + b > 4:
        raise ModelDomainError(
            f"linear_mrq requires a + b > 4 so that q(u) > 0, got a + b = {a + b}")

    def qdfcre(alpha, u):
        return gamma(alpha + 1) * (a + b - 4 * (1 - _arr(u)) / 2**(alpha + 1))

    return dict(
        Q = lambda u: -(a + b) * np.log1p(-_arr(u)) - 4 * _arr(u),
        q = lambda u: (a + b) / (1 - _arr(u)) - 4,
        Q_log = lambda t: (a + b) * _arr(t) - 4 * _survival_prob(_arr(t)),
        q_log = lambda t: (a + b) * np.exp(_arr(t)) - 4,
        floor = 0.0,
        qfcre = lambda alpha: float(qdfcre(alpha, 0.0)),
        qdfcre = qdfcre,
        survival = None,
    )


def constant(value: float) -> dict:
    """Zero-width model: Q is constant and q vanishes. Testing only."""
    return dict(
        Q = lambda u: np.full_like(_arr(u), value),
        q = lambda u: np.zeros_like(_arr(u)),
        Q_log = lambda t: np.full_like(_arr(t), value),
        q_log = lambda t: np.zeros_like(_arr(t)),
        floor = float(value),
        qfcre = lambda alpha: 0.0,
        qdfcre = lambda alpha, u: np.zeros_like(_arr(u)),
        survival = None,
    )
