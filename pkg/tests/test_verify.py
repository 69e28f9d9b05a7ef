import pytest

from qfcre import *
from qfcre.verify import (
    Status,
    check_chaos,
    check_estimator,
    check_fractional_bound,
    check_orderings,
    check_oracle,
    check_reference_value,
    results_frame,
    run_verification,
)


@pytest.fixture
def cfg():
    return get_quad_config()


def statuses(results):
    return {r.name: r.status for r in results}


def test_orderings(cfg):
    results = check_orderings(cfg)
    assert results
    assert all(r.status is Status.PASS for r in results)


def test_oracle(cfg):
    assert all(r.status is Status.PASS for r in check_oracle(cfg))


def test_reference_values_are_findings(cfg):
    results = {r.name: r for r in check_reference_value(cfg)}
    assert len(results) == 3
    assert all(r.status is Status.FINDING for r in results.values())

    lam = results["lambda_family(C=2, A=0.5, beta=0) at alpha=1 vs reference 0.665"]
    assert "0.888889" in lam.detail
    pp = results["power_pareto(C=1.5, l1=2, l2=0.25) at alpha=0.25 vs reference 0.8235"]
    assert "0.828353" in pp.detail
    pp = results["power_pareto(C=1.5, l1=2, l2=0.25) at alpha=0.5 vs reference 0.8548"]
    assert "0.862872" in pp.detail


def test_fractional_bound(cfg):
    models = {
        "linear_mrq": make_builtin("linear_mrq", {"a": 2, "b": 3}),
        "uniform": make_builtin("uniform", {"b": 1}),
    }
    found = statuses(check_fractional_bound(models, cfg))
    assert found["qfcre <= qcre^alpha [linear_mrq]"] is Status.FINDING
    assert found["qfcre <= qcre^alpha [uniform]"] is Status.PASS


def test_estimator_checks():
    assert all(r.status is Status.PASS for r in check_estimator(seed=1, samples=200))


def test_chaos_checks():
    assert all(r.status is Status.PASS for r in check_chaos())


def test_full_verification():
    results = run_verification(seed=0)
    failed = [r.name for r in results if r.status is Status.FAIL]
    assert failed == []

    frame = results_frame(results)
    assert list(frame.columns) == ["property", "status", "detail"]
    assert set(frame["status"]) <= {"pass", "finding"}
