import numpy as np
import pytest

from qfcre import *


def test_logistic_fixed_points():
    assert np.all(logistic_series(LogisticConfig(0.0)) == 0)

    series = logistic_series(LogisticConfig(2.0))
    assert series.size == 2000
    assert abs(series[0] - 0.18) < 1e-15
    assert np.max(np.abs(series[50:] - 0.5)) < 1e-6


def test_logistic_chaotic_range():
    series = logistic_series(LogisticConfig(4.0, length=5000))
    assert series.min() >= 0 and series.max() <= 1
    assert series.var() > 0.1


def test_burn_in():
    full = logistic_series(LogisticConfig(3.7, length=300))
    tail = logistic_series(LogisticConfig(3.7, length=200, burn_in=100))
    assert np.array_equal(full[100:], tail)


@pytest.mark.parametrize("kwargs", [
    {"a": 4.5},
    {"a": -1},
    {"a": 3, "x0": 1.5},
    {"a": 3, "length": 1},
    {"a": 3, "burn_in": -1},
])
def test_invalid_config(kwargs):
    with pytest.raises(ValueError):
        LogisticConfig(**kwargs)


def test_chaos_sweep_ordering():
    table = chaos_entropy_sweep([4.0, 1.0, 3.5, 1.5, 2.0, 3.0, 2.5])
    assert list(table.columns) == ["a", "alpha", "entropy"]
    assert list(table["a"]) == [1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0]

    entropy = dict(zip(table["a"], table["entropy"]))
    periodic = max(entropy[a] for a in (1.0, 1.5, 2.0, 2.5))
    assert entropy[2.0] < 0.01
    assert entropy[4.0] > entropy[3.5] > periodic


def test_chaotic_dominates_periodic():
    table = chaos_entropy_sweep([1.0, 2.0, 2.9, 4.0], alpha=[0.2, 0.5, 0.8])
    for alpha, group in table.groupby("alpha"):
        entropy = dict(zip(group["a"], group["entropy"]))
        assert entropy[4.0] > max(entropy[a] for a in (1.0, 2.0, 2.9)), alpha


def test_chaos_sweep_alphas():
    table = chaos_entropy_sweep([3.9, 3.9], alpha=[0.25, 1.0], threads=2)
    assert len(table) == 4

    first, second = table.iloc[:2], table.iloc[2:]
    assert list(first["entropy"]) == list(second["entropy"])
    assert list(first["alpha"]) == [0.25, 1.0]
