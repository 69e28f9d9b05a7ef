import numpy as np
import pytest
from scipy.special import gamma

from qfcre import *
from qfcre.models import constant_model, check_grid
from qfcre.simulation import sample_model


@pytest.fixture
def forced():
    return get_quad_config({"force_quadrature": True})


def grid_diff(m1, m2):
    u = check_grid()
    a, b = m1.Q(u), m2.Q(u)
    return np.max(np.abs(a - b) / np.maximum(np.abs(b), 1.0))


def test_affine_closed_form():
    exponential = make_builtin("exponential", {"lambda": 1})
    shifted = affine(exponential, 1, 5)
    assert abs(qfcre(shifted, 0.5).value - gamma(1.5)) < 1e-12

    uniform = make_builtin("uniform", {"b": 1})
    assert abs(qfcre(affine(uniform, 3), 1).value - 0.75) < 1e-12


def test_affine_quadrature(forced):
    model = make_builtin("power_pareto", {"C": 1.5, "l1": 2, "l2": 0.25})
    base = qfcre(model, 0.5, forced).value
    scaled = qfcre(affine(model, 2.5, 1), 0.5, forced).value
    assert abs(scaled - 2.5 * base) < 1e-7


def test_affine_identity():
    model = make_builtin("govindarajulu", {"theta": 1, "sigma": 2, "beta": 2})
    assert grid_diff(affine(model, 1, 0), model) < 1e-15


def test_affine_domain():
    model = make_builtin("uniform", {"b": 1})
    with pytest.raises(ModelDomainError):
        affine(model, 0)
    with pytest.raises(ModelDomainError):
        affine(model, 1, -1)


def test_sum_of_uniform_and_exponential(forced):
    model = sum_compose(make_builtin("uniform", {"b": 1}),
        make_builtin("exponential", {"lambda": 2}))
    expected = gamma(1.5) / 2**1.5 + gamma(1.5) / 2

    assert abs(qfcre(model, 0.5).value - 0.7564) < 1e-4
    assert abs(qfcre(model, 0.5).value - expected) < 1e-12
    assert abs(qfcre(model, 0.5, forced).value - expected) < 1e-7


def test_sum_with_zero(forced):
    model = make_builtin("linear_mrq", {"a": 2, "b": 3})
    total = sum_compose(model, constant_model(0.0))
    assert grid_diff(total, model) < 1e-15
    assert abs(qfcre(total, 0.5, forced).value - qfcre(model, 0.5, forced).value) < 1e-10


def test_product_of_powers():
    power = make_builtin("power", {"beta": 1, "delta": 1})
    model = product_compose(power, power)

    u = np.linspace(0.1, 0.9, 9)
    assert np.max(np.abs(model.Q(u) - u**2)) < 1e-15
    assert np.max(np.abs(model.q(u) - 2 * u)) < 1e-15


def test_product_density():
    model = product_compose(make_builtin("govindarajulu", {"theta": 1, "sigma": 2, "beta": 2}),
        make_builtin("pareto1", {"beta": 0.4}))

    u = np.linspace(0.05, 0.95, 19)
    h = 1e-6
    deriv = (model.Q(u + h) - model.Q(u - h)) / (2 * h)
    assert np.max(np.abs(deriv - model.q(u)) / model.q(u)) < 1e-5


def test_product_with_one():
    model = make_builtin("pareto1", {"beta": 0.4})
    assert grid_diff(product_compose(model, constant_model(1.0)), model) < 1e-15


def test_product_requires_positive():
    model = make_builtin("uniform", {"b": 1})
    with pytest.raises(ModelDomainError):
        product_compose(model, constant_model(0.0))


def test_reciprocal_of_power(forced):
    model = reciprocal(make_builtin("power", {"beta": 1, "delta": 0.5}))
    assert abs(qfcre(model, 1).value - 2) < 1e-12

    for delta in (0.25, 0.5):
        model = reciprocal(make_builtin("power", {"beta": 1, "delta": delta}))
        for alpha in (0.25, 1.0):
            closed = qfcre(model, alpha).value
            numeric = qfcre(model, alpha, forced).value
            assert abs(closed - numeric) < 1e-6 * closed


def test_reciprocal_involution():
    for model in (make_builtin("power", {"beta": 1, "delta": 2}),
                  make_builtin("govindarajulu", {"theta": 1, "sigma": 2, "beta": 2})):
        assert grid_diff(reciprocal(reciprocal(model)), model) < 1e-10


def test_reciprocal_requires_positive():
    with pytest.raises(ModelDomainError):
        reciprocal(constant_model(0.0))


def test_phm_weibull(forced):
    model = phm(make_builtin("weibull_family", {"A": 0.5, "B": 0}), 2)
    expected = 2**0.5 * gamma(1.5) / 2.5**1.5

    assert abs(qfcre(model, 0.5).value - expected) < 1e-12
    assert abs(qfcre(model, 0.5).value - 0.3170) < 1e-3
    assert abs(qfcre(model, 0.5, forced).value - expected) < 1e-7


def test_phm_identity():
    for name, model in catalog_models().items():
        assert grid_diff(phm(model, 1), model) < 1e-10, name


def test_phm_exponential():
    model = phm(make_builtin("exponential", {"lambda": 2}), 3)
    target = make_builtin("exponential", {"lambda": 6})
    assert grid_diff(model, target) < 1e-10
    assert abs(qfcre(model, 0.5).value - gamma(1.5) / 6) < 1e-12

    with pytest.raises(ModelDomainError):
        phm(target, 0)


def test_monotone_identity():
    model = make_builtin("power_pareto", {"C": 1.5, "l1": 2, "l2": 0.25})
    same = monotone_transform(model, lambda x: x, lambda x: np.ones_like(x), "id")
    assert grid_diff(same, model) < 1e-15


def test_monotone_linear_matches_affine():
    model = make_builtin("linear_mrq", {"a": 2, "b": 3})
    linear = monotone_transform(model, lambda x: 2 * x + 1,
        lambda x: np.full_like(x, 2.0), "linear")
    assert grid_diff(linear, affine(model, 2, 1)) < 1e-12


def test_monotone_requires_increasing():
    model = make_builtin("uniform", {"b": 1})
    with pytest.raises(ModelDomainError):
        monotone_transform(model, lambda x: -x, lambda x: -np.ones_like(x))


def test_sqrt_of_exponential(forced):
    exponential = make_builtin("exponential", {"lambda": 1})
    model = monotone_transform(exponential, np.sqrt,
        lambda x: 0.5 / np.sqrt(np.maximum(x, 1e-300)), "sqrt")

    for alpha in (0.25, 0.5, 1.0):
        expected = 0.5 * gamma(alpha + 0.5)
        assert abs(qfcre(model, alpha, forced).value - expected) < 1e-6

    # Resampling Y = sqrt(X) agrees within Monte-Carlo error
    sample = sample_model(model, 100_000, seed=11)
    estimate = estimate_qfcre(sample, 0.5).value
    assert abs(estimate - 0.5 * gamma(1.0)) < 0.02 * 0.5


def test_escort_identity():
    for name, model in catalog_models().items():
        assert grid_diff(escort(model, 1.0), model) < 1e-6, name


def test_escort_of_uniform():
    model = escort(make_builtin("uniform", {"b": 2}), 3.0)
    u = np.array([0.1, 0.5, 0.9])
    assert np.max(np.abs(model.q(u) - 2)) < 1e-8
    assert np.max(np.abs(model.Q(u) - 2 * u)) < 1e-8


def test_escort_of_exponential():
    model = escort(make_builtin("exponential", {"lambda": 1}), 1.5)
    assert abs(float(model.Q(0.75)) - 4 / 3) < 1e-8
    assert abs(float(model.q(0.75)) - 16 / 3) < 1e-7


def test_escort_factorization():
    model = make_builtin("exponential", {"lambda": 1})
    factors = escort_factorization(model, 1.5, 0.5)
    assert abs(factors.product - qfcre(escort(model, 1.5), 0.5).value) < 1e-7

    same = escort_factorization(model, 1.0, 0.5)
    assert abs(same.I_c - 1) < 1e-10
    assert abs(same.product - gamma(1.5)) < 1e-8


def test_escort_divergence():
    model = escort(make_builtin("exponential", {"lambda": 1}), 2.0)
    with pytest.raises(DivergenceError):
        qfcre(model, 0.5)

    with pytest.raises(ModelDomainError):
        escort(model, 0)
