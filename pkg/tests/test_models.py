import dataclasses

import numpy as np
import pytest

from qfcre import *
from qfcre.models import constant_model, check_grid


@pytest.fixture
def catalog():
    return catalog_models()


def test_fractional_order_range():
    assert FractionalOrder(0.0).alpha == 0.0
    assert float(FractionalOrder(1.0)) == 1.0

    for bad in (-0.1, 1.5, float("nan")):
        with pytest.raises(ValueError):
            FractionalOrder(bad)


def test_model_label():
    model = make_builtin("exponential", {"lambda": 1})
    assert model.label == "exponential(lambda=1)"


def test_model_is_immutable():
    model = make_builtin("uniform", {"b": 2})
    with pytest.raises(dataclasses.FrozenInstanceError):
        model.name = "other"
    with pytest.raises(TypeError):
        model.params["b"] = 3.0


def test_catalog_quantile_monotone(catalog):
    u = check_grid()
    for name, model in catalog.items():
        Q = model.Q(u)
        assert np.all(np.diff(Q) >= -1e-12), name
        assert np.all(model.q(u) >= 0), name


def test_catalog_density_matches_derivative(catalog):
    u = np.linspace(0.05, 0.95, 19)
    h = 1e-6
    for name, model in catalog.items():
        deriv = (model.Q(u + h) - model.Q(u - h)) / (2 * h)
        q = model.q(u)
        assert np.max(np.abs(deriv - q) / np.maximum(np.abs(q), 1.0)) < 1e-5, name


def test_catalog_log_domain_agrees(catalog):
    t = np.linspace(0.1, 5.0, 25)
    u = -np.expm1(-t)
    for name, model in catalog.items():
        Q, Q_log = model.Q(u), model.Q_log(t)
        q, q_log = model.q(u), model.q_log(t)
        assert np.max(np.abs(Q - Q_log) / np.maximum(np.abs(Q), 1.0)) < 1e-8, name
        assert np.max(np.abs(q - q_log) / np.maximum(np.abs(q), 1.0)) < 1e-8, name


def test_catalog_floor(catalog):
    for name, model in catalog.items():
        assert model.support_floor >= 0, name
        assert abs(float(model.Q(1e-12)) - model.support_floor) < 1e-4, name


def test_power_pareto_quantile():
    model = make_builtin("power_pareto", {"C": 1.5, "l1": 2, "l2": 0.25})
    assert abs(float(model.Q(0.5)) - 0.375 * 2**0.25) < 1e-12


def test_govindarajulu_range():
    model = make_builtin("govindarajulu", {"theta": 1, "sigma": 2, "beta": 2})
    assert abs(float(model.Q(1e-12)) - 1) < 1e-9
    assert abs(float(model.Q(1 - 1e-12)) - 3) < 1e-9


def test_parameter_aliases():
    m1 = make_builtin("exponential", {"lam": 2})
    m2 = make_builtin("power_pareto", {"C": 1, "lambda1": 2, "lambda2": 0.5})
    assert m1.params["lambda"] == 2
    assert m2.params["l1"] == 2 and m2.params["l2"] == 0.5


@pytest.mark.parametrize("name, params", [
    ("unknown", {}),
    ("exponential", {"lambda": 0}),
    ("exponential", {"lambda": -1}),
    ("exponential", {}),
    ("exponential", {"lambda": 1, "rate": 1}),
    ("exponential", {"lambda": 1, "lam": 2}),
    ("exponential", {"lambda": float("inf")}),
    ("uniform", {"b": 0}),
    ("pareto1", {"beta": 1}),
    ("linear_mrq", {"a": 2, "b": 2}),
    ("power_pareto", {"C": 1, "l1": 0, "l2": 0.5}),
    ("govindarajulu", {"theta": 1, "sigma": 1, "beta": 0}),
])
def test_invalid_parameters(name, params):
    with pytest.raises(ModelDomainError):
        make_builtin(name, params)


def test_parse_model_spec():
    name, params = parse_model_spec("power_pareto(C=1.5, l1=2,l2=0.25)")
    assert name == "power_pareto"
    assert params == {"C": 1.5, "l1": 2.0, "l2": 0.25}

    name, params = parse_model_spec("exponential(lambda=1e-1)")
    assert params["lambda"] == 0.1


@pytest.mark.parametrize("spec, token, position", [
    ("exponential(lambda=)", ")", 19),
    ("exponential(lambda=1", "end of input", 20),
    ("exp$", "$", 3),
    ("exponential(lambda=1,lambda=2)", "lambda", 21),
    ("exponential lambda=1", "lambda", 12),
])
def test_parse_model_spec_errors(spec, token, position):
    with pytest.raises(ModelSpecError) as info:
        parse_model_spec(spec)
    assert info.value.token == token
    assert info.value.position == position


def test_model_from_spec():
    model = model_from_spec("uniform(b=2)")
    assert abs(float(model.Q(0.25)) - 0.5) < 1e-15

    with pytest.raises(ModelDomainError):
        model_from_spec("uniform(b=-2)")


def test_hazard_quantile():
    exponential = make_builtin("exponential", {"lambda": 3})
    H = hazard_quantile(exponential, np.array([0.1, 0.5, 0.7]))
    assert np.max(np.abs(H - 3)) < 1e-12

    uniform = make_builtin("uniform", {"b": 2})
    assert abs(float(hazard_quantile(uniform, 0.5)) - 1) < 1e-12

    with pytest.raises(ValueError):
        hazard_quantile(exponential, 1.0)
    with pytest.raises(InfiniteHazardError):
        hazard_quantile(constant_model(1.0), 0.5)
