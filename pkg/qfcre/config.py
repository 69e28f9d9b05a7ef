#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Default numerical settings and run configuration.
#
# Date:   October 2026

import os
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional


# Probabilities are clamped to [EPS, 1 - EPS] before Q or q is evaluated
EPS = 1e-12

# Successive differences below this count as ties when classifying profiles
MONOTONE_TOL = 1e-9

DEFAULT_REPLICATIONS = 5000
DEFAULT_CHAOS_LENGTH = 2000

# 17 significant digits round-trips an IEEE double
FLOAT_FORMAT = "%.17g"

THREADS_ENV = "QFCRE_THREADS"


@dataclass(frozen=True)
class QuadratureConfig:
    """
    Settings of the adaptive quadrature used by the entropy functions.

    Parameters
    ----------
    rel_tol : float
        Relative tolerance requested from each QUADPACK call.

    abs_tol : float
        Absolute tolerance of each call. Lowered automatically for
        integrals far below unit scale.

    tail_tol : float
        A tail panel past the peak of the integrand whose contribution is
        below `tail_tol` times the running total (or the scanned size of the
        integrand, if larger) ends the tail extension.

    max_refinements : int
        Maximum number of subintervals per QUADPACK call.

    tail_cut : float, optional
        Fixed truncation point on the transformed domain. If None, panels
        are appended geometrically until one is negligible in the sense of
        `tail_tol`.

    max_tail_panels : int
        Maximum number of geometric tail panels before divergence is 
        declared.

    force_quadrature : bool
        Ignore closed forms attached to a model.

    """
    rel_tol: float = 1e-8
    abs_tol: float = 1e-12
    tail_tol: float = 1e-12
    max_refinements: int = 60
    tail_cut: Optional[float] = None
    max_tail_panels: int = 16
    force_quadrature: bool = False

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive.")
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive.")
        if not 0 < self.tail_tol < 1:
            raise ValueError("tail_tol must lie in (0, 1).")
        if self.max_refinements < 1:
            raise ValueError("max_refinements must be at least 1.")
        if self.max_tail_panels < 1:
            raise ValueError("max_tail_panels must be at least 1.")
        if self.tail_cut is not None and not self.tail_cut > 1.0:
            raise ValueError("tail_cut must exceed 1.")

    def forced(self) -> "QuadratureConfig":
        """Copy of this configuration that always integrates numerically."""
        return replace(self, force_quadrature=True)


def get_quad_config(new_config: Dict[str, Any] = None) -> QuadratureConfig:
    """
    Returns the quadrature configuration.

    Parameters
    ----------
    new_config : dict, optional
        Dictionary of any settings to override. Keys are the field names of
        `QuadratureConfig`.

    Returns
    -------
    cfg : QuadratureConfig
        Frozen configuration.

    """
    if new_config is None:
        new_config = dict()

    settings = {                    # Description
        "rel_tol": 1e-8,            # relative tolerance per call
        "abs_tol": 1e-12,           # absolute tolerance per call
        "tail_tol": 1e-12,          # relative tail stop
        "max_refinements": 60,      # QUADPACK subinterval limit
        "tail_cut": None,           # fixed truncation on t-domain
        "max_tail_panels": 16,      # geometric tail panels
        "force_quadrature": False,  # ignore closed forms
    }

    unknown = set(new_config).difference(settings)
    if unknown:
        raise ValueError(f"Unknown quadrature settings: {sorted(unknown)}")

    settings.update(new_config)
    return QuadratureConfig(**settings)


def get_thread_count(threads: Optional[int] = None) -> int:
    """
    Resolve the worker count: explicit argument, then the QFCRE_THREADS 
    environment variable, then the number of available cores.

    """
    if threads is None:
        env = os.environ.get(THREADS_ENV)
        if env:
            try:
                threads = int(env)
            except ValueError:
                raise ValueError(f"{THREADS_ENV} must be an integer, got {env!r}")
        else:
            threads = os.cpu_count() or 1

    if threads < 1:
        raise ValueError(f"Thread count must be at least 1, got {threads}.")
    return threads
