#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Quantile models: the model type, the built-in catalog and the model
# specification strings accepted by the command line.
#
# Date:   October 2026

import re
from dataclasses import dataclass, field
from numbers import Number
from types import MappingProxyType
from typing import Callable, Dict, Mapping, Optional, Tuple, Union

import numpy as np

from . import _models
from .config import EPS
from .errors import InfiniteHazardError, ModelDomainError, ModelSpecError


@dataclass(frozen=True, order=True)
class FractionalOrder:
    """
    The fractional order alpha of the entropy, restricted to [0, 1].

    """
    alpha: float

    def __post_init__(self):
        try:
            alpha = float(self.alpha)
        except (TypeError, ValueError):
            raise ValueError(f"alpha must be a real number, got {self.alpha!r}")
        if not 0.0 <= alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")
        object.__setattr__(self, "alpha", alpha)

    def __float__(self) -> float:
        return self.alpha


AlphaLike = Union[FractionalOrder, Number]


def as_order(alpha: AlphaLike) -> FractionalOrder:
    """Return `alpha` as a validated FractionalOrder."""
    if isinstance(alpha, FractionalOrder):
        return alpha
    return FractionalOrder(alpha)


@dataclass(frozen=True, eq=False)
class QuantileModel:
    """
    A distribution represented by its quantile function Q(u) and quantile
    density q(u) = dQ/du on 0 < u < 1.

    `Q_log` and `q_log` are the same functions evaluated at
    u = 1 - exp(-t). They default to composing `Q` and `q` with
    1 - exp(-t), which loses all precision once t exceeds about 36; built-in
    models supply exact versions so heavy upper tails can be integrated.

    Instances are immutable. All functions accept scalars or arrays.

    """
    name: str
    params: Mapping[str, float]
    Q: Callable
    q: Callable
    support_floor: float
    Q_log: Optional[Callable] = None
    q_log: Optional[Callable] = None
    closed_form_qfcre: Optional[Callable[[float], float]] = None
    closed_form_qdfcre: Optional[Callable[[float, np.ndarray], np.ndarray]] = None
    survival: Optional[Callable] = None
    parents: Tuple["QuantileModel", ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))

        Q, q = self.Q, self.q
        if self.Q_log is None:
            object.__setattr__(self, "Q_log",
                lambda t: Q(-np.expm1(-np.asarray(t, dtype=float))))
        if self.q_log is None:
            object.__setattr__(self, "q_log",
                lambda t: q(-np.expm1(-np.asarray(t, dtype=float))))

    @property
    def label(self) -> str:
        """Readable description, e.g. ``affine(exponential(lambda=1), a=2, b=0)``."""
        args = [parent.label for parent in self.parents]
        args += [f"{key}={value:g}" for key, value in self.params.items()]
        return f"{self.name}({', '.join(args)})"

    def __repr__(self) -> str:
        return f"QuantileModel({self.label})"


def clamp_probability(u) -> np.ndarray:
    """Clamp probabilities to [EPS, 1 - EPS]; Q and q are never evaluated at 0 or 1."""
    return np.clip(np.asarray(u, dtype=float), EPS, 1 - EPS)


def check_grid(points: int = 99) -> np.ndarray:
    """
    Probabilities used to check operand conditions such as positivity: an
    even grid on [0.01, 0.99] plus geometric refinements toward both ends.

    """
    ends = np.geomspace(EPS, 0.01, 25)
    grid = np.concatenate([ends, np.linspace(0.01, 0.99, points), 1 - ends])
    return np.unique(grid)


def from_parts(
    name: str,
    params: Mapping[str, float],
    parts: Dict[str, Callable],
    parents: Tuple[QuantileModel, ...] = ()
) -> QuantileModel:
    """
    Create a QuantileModel from a dictionary of the form returned by the
    builders in `_models`.

    """
    return QuantileModel(
        name = name,
        params = params,
        Q = parts["Q"],
        q = parts["q"],
        support_floor = parts["floor"],
        Q_log = parts.get("Q_log"),
        q_log = parts.get("q_log"),
        closed_form_qfcre = parts.get("qfcre"),
        closed_form_qdfcre = parts.get("qdfcre"),
        survival = parts.get("survival"),
        parents = parents,
    )


# name: (builder, parameter names in builder order, aliases)
_BUILTINS = {
    "uniform": (_models.uniform, ("b",), {}),
    "exponential": (_models.exponential, ("lambda",), {"lam": "lambda"}),
    "power": (_models.power, ("beta", "delta"), {}),
    "pareto1": (_models.pareto1, ("beta",), {}),
    "rescaled_beta": (_models.rescaled_beta, ("c", "r"), {}),
    "lambda_family": (_models.lambda_family, ("C", "A", "beta"), {}),
    "weibull_family": (_models.weibull_family, ("A", "B"), {}),
    "power_pareto": (_models.power_pareto, ("C", "l1", "l2"),
        {"lambda1": "l1", "lambda2": "l2"}),
    "govindarajulu": (_models.govindarajulu, ("theta", "sigma", "beta"), {}),
    "linear_mrq": (_models.linear_mrq, ("a", "b"), {}),
}

# Default parameters of the catalog used by the property suites. Each
# entry has finite Q-FCRE for every alpha in [0, 1].
CATALOG = {
    "uniform": {"b": 1.0},
    "exponential": {"lambda": 2.0},
    "power": {"beta": 1.0, "delta": 2.0},
    "pareto1": {"beta": 0.4},
    "rescaled_beta": {"c": 2.0, "r": 2.0},
    "lambda_family": {"C": 1.0, "A": 0.25, "beta": 0.5},
    "weibull_family": {"A": 0.5, "B": 0.0},
    "power_pareto": {"C": 1.5, "l1": 2.0, "l2": 0.25},
    "govindarajulu": {"theta": 1.0, "sigma": 1.0, "beta": 2.0},
    "linear_mrq": {"a": 2.0, "b": 3.0},
}


def builtin_names() -> Tuple[str, ...]:
    return tuple(_BUILTINS)


def make_builtin(name: str, params: Mapping[str, float] = None) -> QuantileModel:
    """
    Create one of the built-in quantile models.

    Parameters
    ----------
    name : str
        Model identifier. One of "uniform", "exponential", "power",
        "pareto1", "rescaled_beta", "lambda_family", "weibull_family",
        "power_pareto", "govindarajulu" or "linear_mrq".

    params : dict
        Parameter values keyed by parameter name. See `_BUILTINS` for the
        names and accepted aliases of each model.

    Returns
    -------
    model : QuantileModel
        The model, with closed forms attached where they are known.

    """
    if params is None:
        params = dict()

    if name not in _BUILTINS:
        raise ModelDomainError(
            f"Unknown model {name!r}. Known models: {', '.join(_BUILTINS)}")
    builder, names, aliases = _BUILTINS[name]

    # Resolve aliases, then check every parameter is given exactly once
    resolved = {}
    for key, value in params.items():
        key = aliases.get(key, key)
        if key not in names:
            raise ModelDomainError(
                f"Unknown parameter {key!r} for {name}. Expected: {', '.join(names)}")
        if key in resolved:
            raise ModelDomainError(f"Parameter {key!r} given twice for {name}.")
        try:
            resolved[key] = float(value)
        except (TypeError, ValueError):
            raise ModelDomainError(f"Parameter {key!r} of {name} must be a number.")
        if not np.isfinite(resolved[key]):
            raise ModelDomainError(f"Parameter {key!r} of {name} must be finite.")

    missing = [key for key in names if key not in resolved]
    if missing:
        raise ModelDomainError(f"Missing parameters for {name}: {', '.join(missing)}")

    ordered = {key: resolved[key] for key in names}
    parts = builder(*ordered.values())
    return from_parts(name, ordered, parts)


def catalog_models() -> Dict[str, QuantileModel]:
    """All built-in models at their default catalog parameters."""
    return {name: make_builtin(name, params) for name, params in CATALOG.items()}


def constant_model(value: float = 0.0) -> QuantileModel:
    """
    Degenerate zero-width model with Q constant and q identically zero.
    Used as the identity of `sum_compose` (value 0) and `product_compose`
    (value 1) in tests; not part of the public catalog.

    """
    return from_parts("constant", {"value": float(value)}, _models.constant(value))


_TOKEN = re.compile(r"""
    (?P<space>\s+)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<number>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)
  | (?P<punct>[(),=])
""", re.VERBOSE)


def _tokenize(spec: str):
    pos = 0
    tokens = []
    while pos < len(spec):
        match = _TOKEN.match(spec, pos)
        if match is None:
            raise ModelSpecError("Unexpected character", spec[pos], pos)
        if match.lastgroup != "space":
            tokens.append((match.lastgroup, match.group(), pos))
        pos = match.end()
    tokens.append(("end", "", len(spec)))
    return tokens


def parse_model_spec(spec: str) -> Tuple[str, Dict[str, float]]:
    """
    Parse a model specification of the form ``name(param=value,...)``.

    Returns
    -------
    name : str
        Model identifier.

    params : dict
        Parameter values in the order written.

    """
    tokens = _tokenize(spec)
    i = 0

    def expect(kind, text=None):
        nonlocal i
        tok_kind, tok_text, tok_pos = tokens[i]
        if tok_kind != kind or (text is not None and tok_text != text):
            wanted = repr(text) if text is not None else kind
            found = tok_text if tok_text else "end of input"
            raise ModelSpecError(f"Expected {wanted}", found, tok_pos)
        i += 1
        return tok_text, tok_pos

    name, _ = expect("ident")
    expect("punct", "(")

    params = {}
    if tokens[i][1] != ")":
        while True:
            key, key_pos = expect("ident")
            expect("punct", "=")
            value, _ = expect("number")
            if key in params:
                raise ModelSpecError("Duplicate parameter", key, key_pos)
            params[key] = float(value)
            if tokens[i][1] == ",":
                i += 1
                continue
            break

    expect("punct", ")")
    expect("end")
    return name, params


def model_from_spec(spec: str) -> QuantileModel:
    """Create a built-in model from a string such as ``exponential(lambda=1)``."""
    name, params = parse_model_spec(spec)
    return make_builtin(name, params)


def hazard_quantile(model: QuantileModel, u) -> np.ndarray:
    """
    Hazard quantile function H(u) = 1 / ((1 - u) q(u)).

    Parameters
    ----------
    model : QuantileModel
        Quantile model.

    u : float or ndarray
        Probabilities in (0, 1).

    Returns
    -------
    H : float or ndarray
        Hazard rate at the quantile Q(u).

    """
    u = np.asarray(u, dtype=float)
    if np.any((u <= 0) | (u >= 1)):
        raise ValueError("hazard_quantile requires 0 < u < 1.")

    q = np.asarray(model.q(u), dtype=float)
    if np.any(q == 0):
        bad = np.atleast_1d(u)[np.atleast_1d(q) == 0][0]
        raise InfiniteHazardError(
            f"Quantile density of {model.label} vanishes at u={bad:g}; hazard is infinite.")

    H = 1 / ((1 - u) * q)
    return H if H.ndim else float(H)
