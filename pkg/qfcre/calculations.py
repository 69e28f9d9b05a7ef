#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Static entropy measures of quantile models and the quadrature engine
# behind them.
#
# All integrals over u in (0, 1) are computed on t = -log(1 - u), where
# the weight (1 - u) du becomes exp(-2t) dt and the upper endpoint moves
# to infinity.
#
# Date:   October 2026

import logging
from collections import namedtuple
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Tuple

import numpy as np
from scipy.integrate import quad

from .config import QuadratureConfig, get_quad_config
from .errors import DivergenceError, TailTruncationError
from .models import AlphaLike, FractionalOrder, QuantileModel, as_order


logger = logging.getLogger(__name__)

EULER_GAMMA = float(np.euler_gamma)


class Method(str, Enum):
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"
    ORACLE = "oracle"


@dataclass(frozen=True)
class EntropyValue:
    """
    An entropy together with how it was obtained. `est_error` is the
    accumulated quadrature error estimate, zero for closed forms.

    """
    value: float
    alpha: FractionalOrder
    method: Method
    est_error: float = 0.0

    def __post_init__(self):
        if not self.value >= 0:
            raise ValueError(f"Entropy must be nonnegative, got {self.value}")
        if not self.est_error >= 0:
            raise ValueError(f"Error estimate must be nonnegative, got {self.est_error}")

    def __float__(self) -> float:
        return self.value


EscortFactors = namedtuple("EscortFactors", ["I_c", "E_alpha_c", "product"])


def _quad_panel(
    f: Callable[[float], float],
    a: float,
    b: float,
    cfg: QuadratureConfig,
    what: str,
    epsabs: float = None
) -> Tuple[float, float]:
    """
    Integrate `f` over [a, b] with QUADPACK. A QUADPACK warning is accepted
    when the error estimate is still small compared to the tolerances.

    `epsabs` overrides `cfg.abs_tol` for integrals far below unit scale.

    """
    if epsabs is None:
        epsabs = cfg.abs_tol

    with np.errstate(all="ignore"):
        result = quad(
            f, a, b,
            epsabs = epsabs,
            epsrel = cfg.rel_tol,
            limit = cfg.max_refinements,
            full_output = 1
        )
    y, abserr = result[0], result[1]

    if not (np.isfinite(y) and np.isfinite(abserr)):
        raise DivergenceError(
            f"{what}: non-finite integrand on [{a:g}, {b:g}]", y, abserr)

    # Nonzero exit status adds a message to the output tuple
    if len(result) > 3:
        if abserr <= 1e3 * max(epsabs, cfg.rel_tol * abs(y)):
            logger.debug("%s: accepted QUADPACK warning on [%g, %g]: %s",
                what, a, b, result[3])
        else:
            raise DivergenceError(
                f"{what}: quadrature did not converge on [{a:g}, {b:g}] "
                f"within {cfg.max_refinements} subintervals", y, abserr)

    return y, abserr


def _locate_mass(f: Callable[[float], float], upper: float) -> Tuple[float, float]:
    """
    Where on [0, upper] the integral of `f` gathers most of its mass, and
    roughly how large it is.

    |f(t)| * t is scanned at eight points per octave, which approximates
    the contribution of a geometric panel around t.

    Returns
    -------
    t_peak : float
        Scan point with the largest |f(t)| * t, 0 if all scan points vanish.

    scale : float
        That largest value.

    """
    t = np.geomspace(2.0**-4, upper, 8 * int(np.ceil(np.log2(upper))) + 33)
    weights = np.zeros_like(t)
    with np.errstate(all="ignore"):
        for i, x in enumerate(t):
            try:
                weights[i] = abs(float(f(x))) * x
            except ArithmeticError:
                pass
    weights[~np.isfinite(weights)] = 0.0

    i = int(np.argmax(weights))
    if weights[i] == 0:
        return 0.0, 0.0
    return float(t[i]), float(weights[i])


def integrate_log_domain(
    f: Callable[[float], float],
    cfg: QuadratureConfig = None,
    alpha: float = 0.0,
    what: str = "integral"
) -> Tuple[float, float]:
    """
    Integrate a function of t = -log(1 - u) over [0, infinity).

    The first panel [0, 1] is integrated in the variable s with
    t = s^k, k = 1 / (1 - alpha / 2), which smooths a t^alpha factor at
    the origin. The tail is covered by panels [1, 2], [2, 4], ... up to
    `cfg.tail_cut` if one is set. Otherwise the extension stops at the
    first panel that lies past the scanned peak of the integrand, is no
    larger than the panel before it and contributes at most
    `cfg.tail_tol` times the running total or the scanned scale, whichever
    is larger.

    Parameters
    ----------
    f : Callable
        Integrand of t.

    cfg : QuadratureConfig, optional
        Quadrature settings. Defaults to `get_quad_config()`.

    alpha : float, optional
        Exponent of the t^alpha factor in the integrand, if any. Default: 0.

    what : str, optional
        Name of the integral used in diagnostics.

    Returns
    -------
    value : float
        Value of the integral.

    est_error : float
        Sum of the QUADPACK error estimates of all panels.

    """
    if cfg is None:
        cfg = get_quad_config()

    k = 1 / (1 - alpha / 2)
    integrand = lambda t: float(f(t))
    head = lambda s: float(f(s**k)) * k * s**(k - 1)

    upper = cfg.tail_cut if cfg.tail_cut is not None else 2.0**cfg.max_tail_panels
    t_peak, scale = _locate_mass(integrand, upper)
    epsabs = cfg.abs_tol
    if scale > 0:
        epsabs = min(cfg.abs_tol, cfg.rel_tol * scale)

    total, est_error = _quad_panel(head, 0.0, 1.0, cfg, what, epsabs)

    lo, panels, previous = 1.0, 0, abs(total)
    while True:
        if cfg.tail_cut is not None:
            if lo >= cfg.tail_cut:
                break
            hi = min(2 * lo, cfg.tail_cut)
        else:
            if panels >= cfg.max_tail_panels:
                raise DivergenceError(
                    f"{what}: tail still contributing after {panels} panels "
                    f"(t up to {lo:g})", total, est_error)
            hi = 2 * lo

        value, err = _quad_panel(integrand, lo, hi, cfg, what, epsabs)
        total += value
        est_error += err
        panels += 1

        if cfg.tail_cut is None:
            decaying = hi >= t_peak and abs(value) <= previous
            if decaying and abs(value) <= cfg.tail_tol * max(abs(total), scale):
                break
        previous = abs(value)
        lo = hi

    logger.debug("%s = %.17g (est. error %.3g, %d tail panels, peak near t=%g)",
        what, total, est_error, panels, t_peak)
    return total, est_error


def _nonnegative(value: float, est_error: float, what: str) -> float:
    """Round tiny negative quadrature results of nonnegative integrands to 0."""
    if value < 0:
        if value >= -max(est_error, 1e-15):
            return 0.0
        raise DivergenceError(f"{what}: negative value {value:g}", value, est_error)
    return value


def qfcre(
    model: QuantileModel,
    alpha: AlphaLike,
    cfg: QuadratureConfig = None
) -> EntropyValue:
    """
    Quantile-based fractional cumulative residual entropy,

        E_alpha = int_0^1 (1 - p) (-log(1 - p))^alpha q(p) dp.

    Parameters
    ----------
    model : QuantileModel
        Quantile model.

    alpha : float or FractionalOrder
        Fractional order in [0, 1].

    cfg : QuadratureConfig, optional
        Quadrature settings. The model's closed form is used when present
        unless `cfg.force_quadrature` is set.

    Returns
    -------
    entropy : EntropyValue
        Entropy value, with the method used and the error estimate.

    """
    order = as_order(alpha)
    if cfg is None:
        cfg = get_quad_config()

    if model.closed_form_qfcre is not None and not cfg.force_quadrature:
        value = float(model.closed_form_qfcre(order.alpha))
        return EntropyValue(value, order, Method.CLOSED_FORM)

    a = order.alpha
    q_log = model.q_log
    f = lambda t: np.exp(-2 * t) * t**a * q_log(t)

    what = f"qfcre[{model.label}, alpha={a:g}]"
    value, est_error = integrate_log_domain(f, cfg, a, what)
    value = _nonnegative(value, est_error, what)
    return EntropyValue(value, order, Method.QUADRATURE, est_error)


def qcre(model: QuantileModel, cfg: QuadratureConfig = None) -> EntropyValue:
    """Quantile-based cumulative residual entropy, `qfcre` at alpha = 1."""
    return qfcre(model, 1.0, cfg)


def quantile_shannon_entropy(model: QuantileModel, cfg: QuadratureConfig = None) -> float:
    """
    Quantile-based differential entropy int_0^1 log q(p) dp. May be negative.

    """
    q_log = model.q_log
    f = lambda t: np.exp(-t) * np.log(q_log(t))
    value, _ = integrate_log_domain(f, cfg, 0.0, f"shannon[{model.label}]")
    return value


def shannon_bound_constant(alpha: AlphaLike) -> float:
    """
    C(alpha) = exp(int_0^1 log[(1 - p)(-log(1 - p))^alpha] dp), which
    evaluates to exp(-1 - alpha * euler_gamma).

    """
    return float(np.exp(-1 - as_order(alpha).alpha * EULER_GAMMA))


def escort_normalizer(
    model: QuantileModel,
    c: float,
    cfg: QuadratureConfig = None
) -> Tuple[float, float]:
    """
    I_c = int_0^1 q(p)^(1 - c) dp and its error estimate.

    """
    if not c > 0:
        raise ValueError(f"Escort exponent c must be positive, got {c}")
    q_log = model.q_log
    f = lambda t: np.exp(-t) * q_log(t)**(1 - c)
    return integrate_log_domain(f, cfg, 0.0, f"I_c[{model.label}, c={c:g}]")


def escort_factorization(
    model: QuantileModel,
    c: float,
    alpha: AlphaLike,
    cfg: QuadratureConfig = None
) -> EscortFactors:
    """
    The two factors of the escort entropy,

        I_c       = int_0^1 q(p)^(1 - c) dp,
        E_alpha_c = int_0^1 (1 - p)(-log(1 - p))^alpha q(p)^c dp,

    and their product, which equals the Q-FCRE of `escort(model, c)`.

    """
    a = as_order(alpha).alpha
    I_c, _ = escort_normalizer(model, c, cfg)

    q_log = model.q_log
    f = lambda t: np.exp(-2 * t) * t**a * q_log(t)**c
    E_alpha_c, _ = integrate_log_domain(
        f, cfg, a, f"E_alpha_c[{model.label}, c={c:g}, alpha={a:g}]")

    return EscortFactors(I_c, E_alpha_c, I_c * E_alpha_c)


def fcre_distribution_oracle(
    survival: Callable,
    alpha: AlphaLike,
    upper: float = np.inf,
    cfg: QuadratureConfig = None,
    breakpoints: Iterable[float] = ()
) -> EntropyValue:
    """
    Fractional cumulative residual entropy from the survival function,

        E_alpha = int_0^upper S(x) (-log S(x))^alpha dx.

    Only used to cross-check `qfcre` for models with a closed survival
    function.

    Parameters
    ----------
    survival : Callable
        Survival function S(x), nonincreasing from 1 to 0.

    alpha : float or FractionalOrder
        Fractional order in [0, 1].

    upper : float, optional
        Upper integration limit. May be infinite. Default: infinity.

    cfg : QuadratureConfig, optional
        Quadrature settings.

    breakpoints : list of floats, optional
        Points where the survival function has kinks, e.g. the support
        floor of a Pareto law.

    Returns
    -------
    entropy : EntropyValue
        Entropy value with method "oracle".

    """
    order = as_order(alpha)
    a = order.alpha
    if cfg is None:
        cfg = get_quad_config()
    if not upper > 0:
        raise ValueError(f"upper must be positive, got {upper}")

    breakpoints = sorted(float(x) for x in breakpoints if 0 < x < upper)

    if np.isfinite(upper):
        tail = float(survival(upper))
        if tail > cfg.abs_tol:
            raise TailTruncationError(
                f"Survival function is {tail:g} at upper={upper:g}; "
                "increase the upper limit", np.nan, tail)

    def integrand(x):
        s = float(survival(x))
        if s <= 0:
            return 0.0
        return s * max(-np.log(s), 0.0)**a

    what = f"oracle[alpha={a:g}]"
    split = upper if np.isfinite(upper) else max(breakpoints, default=1.0)
    inner = [x for x in breakpoints if x < split]

    with np.errstate(all="ignore"):
        result = quad(integrand, 0.0, split, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol,
            limit=cfg.max_refinements, points=inner or None, full_output=1)
        value, est_error = result[0], result[1]
        if not np.isfinite(upper):
            result_tail = quad(integrand, split, np.inf, epsabs=cfg.abs_tol,
                epsrel=cfg.rel_tol, limit=cfg.max_refinements, full_output=1)
            value += result_tail[0]
            est_error += result_tail[1]

    if not np.isfinite(value):
        raise TailTruncationError(f"{what}: integral diverged", value, est_error)

    value = _nonnegative(value, est_error, what)
    return EntropyValue(value, order, Method.ORACLE, est_error)
