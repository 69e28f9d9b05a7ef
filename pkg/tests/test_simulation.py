import io

import numpy as np
import pandas as pd
import pytest

from qfcre import *
from qfcre.simulation import replication_seed, true_entropy


@pytest.fixture
def power_pareto():
    return make_builtin("power_pareto", {"C": 1.5, "l1": 2, "l2": 0.25})


def test_sampling_is_reproducible():
    model = make_builtin("exponential", {"lambda": 1})
    s1 = sample_model(model, 100, seed=42)
    s2 = sample_model(model, 100, seed=42)
    s3 = sample_model(model, 100, seed=43)
    assert np.array_equal(s1.values, s2.values)
    assert not np.array_equal(s1.values, s3.values)

    s4 = sample_model(model, 100, replication_seed(0, 100, 5))
    s5 = sample_model(model, 100, replication_seed(0, 100, 5))
    assert np.array_equal(s4.values, s5.values)


def test_sampling_distribution():
    n = 100_000
    exponential = sample_model(make_builtin("exponential", {"lambda": 1}), n, seed=1)
    assert abs(exponential.values.mean() - 1) < 3 / np.sqrt(n)

    uniform = sample_model(make_builtin("uniform", {"b": 1}), n, seed=2)
    ecdf = np.arange(1, n + 1) / n
    assert np.max(np.abs(ecdf - uniform.values)) < 0.01


def test_true_entropy(power_pareto):
    assert abs(true_entropy(power_pareto, 0.25) - 0.8283529) < 1e-6

    exponential = make_builtin("exponential", {"lambda": 1})
    assert abs(true_entropy(exponential, 1) - 1) < 1e-8


def test_bias_mse_study(power_pareto):
    report = bias_mse_study(power_pareto, 0.25, [1000, 50], replications=400,
        seed=7, threads=4, convention="zero_anchored")

    assert [row.n for row in report.rows] == [50, 1000]
    assert abs(report.true_value - 0.8283529) < 1e-6
    assert report.true_method is Method.QUADRATURE

    for row in report.rows:
        assert abs(row.bias - (row.mean_estimate - report.true_value)) < 1e-15
        assert row.mse >= row.bias**2

    # Heavy upper tail: small samples underestimate
    small, large = report.rows
    assert small.bias < 0
    assert abs(small.bias) > abs(large.bias)
    assert abs(small.bias + 0.110) < 0.03
    assert abs(large.mean_estimate - 0.8133) < 0.01
    assert small.mse > large.mse


SAMPLE_SIZES = [50, 100, 250, 500, 1000]


@pytest.fixture(scope="module", params=[
    # model, parameters, alpha, sign of the bias, (n, bias, tolerance)
    ("power_pareto", {"C": 1.5, "l1": 2, "l2": 0.25}, 0.25, -1, (50, -0.110, 0.03)),
    ("power_pareto", {"C": 1.5, "l1": 2, "l2": 0.25}, 0.5, -1, (50, -0.1345, 0.04)),
    ("govindarajulu", {"theta": 1, "sigma": 2, "beta": 2}, 0.75, 1, (1000, 0.0053, 0.002)),
    ("govindarajulu", {"theta": 1, "sigma": 2, "beta": 2}, 0.85, 1, (500, 0.0045, 0.002)),
], ids=["power_pareto-0.25", "power_pareto-0.5", "govindarajulu-0.75", "govindarajulu-0.85"])
def table_study(request):
    name, params, alpha, sign, row = request.param
    report = bias_mse_study(make_builtin(name, params), alpha, SAMPLE_SIZES,
        replications=2000, seed=11, convention="zero_anchored")
    return report, sign, row


def test_quality_improves_with_n(table_study):
    report, _, _ = table_study
    bias = [abs(row.bias) for row in report.rows]
    mse = [row.mse for row in report.rows]
    assert bias == sorted(bias, reverse=True)
    assert mse == sorted(mse, reverse=True)


def test_bias_sign(table_study):
    report, sign, _ = table_study
    assert [row.n for row in report.rows] == SAMPLE_SIZES
    assert all(np.sign(row.bias) == sign for row in report.rows)


def test_table_row(table_study):
    report, _, (n, bias, tol) = table_study
    [row] = [row for row in report.rows if row.n == n]
    assert abs(row.bias - bias) < tol


def test_threads_do_not_change_results():
    model = make_builtin("exponential", {"lambda": 1})
    serial = bias_mse_study(model, 0.5, [20, 40], replications=100, seed=9, threads=1)
    threaded = bias_mse_study(model, 0.5, [20, 40], replications=100, seed=9, threads=4)
    assert serial.rows == threaded.rows


def test_report_csv():
    model = make_builtin("exponential", {"lambda": 1})
    report = bias_mse_study(model, 0.5, [20], replications=100, seed=1)
    text = report.to_csv()

    assert text.startswith("# model: exponential(lambda=1)\n")
    assert "# replications: 100\n" in text
    assert "# convention: spacings\n" in text

    frame = pd.read_csv(io.StringIO(text), comment="#")
    assert list(frame.columns) == ["n", "mean_estimate", "bias", "mse"]
    assert frame["mean_estimate"].iloc[0] == report.rows[0].mean_estimate


@pytest.mark.parametrize("n_list, replications, convention", [
    ([], 100, "spacings"),
    ([1], 100, "spacings"),
    ([10], 99, "spacings"),
    ([10], 100, "midpoint"),
])
def test_study_validation(n_list, replications, convention):
    model = make_builtin("exponential", {"lambda": 1})
    with pytest.raises(ValueError):
        bias_mse_study(model, 0.5, n_list, replications, convention=convention)


def test_divergent_true_value():
    model = make_builtin("lambda_family", {"C": 1, "A": 2.5, "beta": 0})
    with pytest.raises(DivergenceError):
        bias_mse_study(model, 0.5, [10], replications=100)
