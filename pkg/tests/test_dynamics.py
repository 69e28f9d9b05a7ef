import numpy as np
import pytest
from scipy.special import gamma

from qfcre import *
from qfcre.dynamics import Trend, classify_trend


@pytest.fixture
def forced():
    return get_quad_config({"force_quadrature": True})


def test_exponential_is_constant(forced):
    model = make_builtin("exponential", {"lambda": 2})
    for u in (0.0, 0.3, 0.9):
        assert abs(qdfcre(model, 0.5, u).value - gamma(1.5) / 2) < 1e-12
        assert abs(qdfcre(model, 0.5, u, forced).value - gamma(1.5) / 2) < 1e-7

    profile = qdfcre_profile(model, 0.5, np.linspace(0, 0.9, 10))
    assert profile.classification is Trend.CONSTANT


def test_rescaled_beta(forced):
    model = make_builtin("rescaled_beta", {"c": 2, "r": 2})
    assert abs(qdfcre(model, 1, 0.0).value - 4 / 9) < 1e-12

    closed = qdfcre(model, 0.5, 0.5).value
    assert abs(qdfcre(model, 0.5, 0.5, forced).value - closed) < 1e-7

    profile = qdfcre_profile(model, 0.5, [0.0, 0.25, 0.5, 0.75])
    assert profile.classification is Trend.DECREASING


def test_linear_mrq(forced):
    model = make_builtin("linear_mrq", {"a": 2, "b": 3})
    assert qdfcre(model, 1, 0.0).value == 4.0

    for u in (0.2, 0.4, 0.8):
        closed = qdfcre(model, 0.5, u).value
        expected = gamma(1.5) * (5 - 4 * (1 - u) / 2**1.5)
        assert abs(closed - expected) < 1e-12
        assert abs(qdfcre(model, 0.5, u, forced).value - closed) < 1e-6

    profile = qdfcre_profile(model, 0.5, [0.0, 0.5, 0.9])
    assert profile.classification is Trend.INCREASING


def test_uniform_decreasing():
    model = make_builtin("uniform", {"b": 2})
    grid = np.linspace(0, 0.9, 10)
    profile = qdfcre_profile(model, 0.5, grid)

    assert profile.classification is Trend.DECREASING
    for u, value in profile.points:
        assert abs(value.value - (1 - u) * 2 * gamma(1.5) / 2**1.5) < 1e-12


def test_pareto_increasing(forced):
    model = make_builtin("pareto1", {"beta": 0.4})
    base = qfcre(model, 0.5).value
    profile = qdfcre_profile(model, 0.5, [0.0, 0.3, 0.6], forced)

    assert profile.classification is Trend.INCREASING
    for u, value in profile.points:
        assert abs(value.value - (1 - u)**-0.4 * base) < 1e-6


def test_continuity_at_zero(forced):
    model = make_builtin("power_pareto", {"C": 1.5, "l1": 2, "l2": 0.25})
    at_zero = qfcre(model, 0.5, forced).value
    assert abs(qdfcre(model, 0.5, 1e-9, forced).value - at_zero) < 1e-6


def test_profile_frame():
    model = make_builtin("exponential", {"lambda": 1})
    frame = qdfcre_profile(model, 1, [0.0, 0.5]).to_frame()
    assert list(frame.columns) == ["u", "alpha", "entropy", "method"]
    assert list(frame["method"]) == ["closed_form", "closed_form"]


def test_invalid_levels():
    model = make_builtin("exponential", {"lambda": 1})
    for u in (1.0, -0.1):
        with pytest.raises(ValueError):
            qdfcre(model, 0.5, u)
    with pytest.raises(ValueError):
        qdfcre_profile(model, 0.5, [0.5, 0.2])
    with pytest.raises(ValueError):
        qdfcre_profile(model, 0.5, [0.5, 1.0])


@pytest.mark.parametrize("values, trend", [
    ([1, 1, 1], Trend.CONSTANT),
    ([1, 1 + 1e-12, 1], Trend.CONSTANT),
    ([1, 2, 3], Trend.INCREASING),
    ([1, 1, 2], Trend.INCREASING),
    ([3, 2, 1], Trend.DECREASING),
    ([1, 3, 2], Trend.NON_MONOTONE),
])
def test_classify_trend(values, trend):
    assert classify_trend(values) is trend
