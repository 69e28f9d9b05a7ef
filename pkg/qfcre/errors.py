#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Exception types raised by the package.
#
# Date:   October 2026

from typing import Optional


class ModelDomainError(ValueError):
    """Model parameters or transform operands outside their domain."""


class ModelSpecError(ValueError):
    """
    A model specification string such as ``exponential(lambda=1)`` could not
    be parsed. The offending token and its character position are kept.

    """
    def __init__(self, message: str, token: str = "", position: int = -1):
        if position >= 0:
            message = f"{message} (token {token!r} at position {position})"
        super().__init__(message)
        self.token = token
        self.position = position


class SampleError(ValueError):
    """Sample data that cannot back the spacing estimator."""


class PriceDataError(ValueError):
    """Invalid price file contents. `row` is the 1-based data row."""

    def __init__(self, message: str, row: Optional[int] = None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


class DivergenceError(ArithmeticError):
    """
    Quadrature failed to converge. The partial value and error estimate
    reached before giving up are kept for diagnostics.

    """
    def __init__(
        self, 
        message: str, 
        partial_value: float = float("nan"), 
        est_error: float = float("inf")
    ):
        super().__init__(message)
        self.partial_value = partial_value
        self.est_error = est_error


class TailTruncationError(DivergenceError):
    """The survival function has not decayed at the chosen upper limit."""


class InfiniteHazardError(ArithmeticError):
    """Hazard quantile requested where the quantile density vanishes."""


class VerificationError(ValueError):
    """At least one property check failed."""
