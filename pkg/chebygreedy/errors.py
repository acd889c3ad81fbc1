"""
Exceptions raised across chebygreedy.

Every error derives from :class:`ChebyGreedyError`. The validation errors are
also ``ValueError`` subclasses so code that catches ``ValueError`` around a
setter keeps working.
"""
from __future__ import annotations

from typing import Any, Optional

import numpy as np


class ChebyGreedyError(Exception):
    """Base class for all chebygreedy errors."""


class StructuralError(ChebyGreedyError, ValueError):
    """Shapes, bindings or indices do not line up."""


class DomainError(ChebyGreedyError, ValueError):
    """The input lies outside the mathematical domain of an operation."""


class ConfigurationError(ChebyGreedyError, ValueError):
    """A builder, solver or experiment was configured inconsistently."""


class OracleCapExceeded(ConfigurationError):
    """The exhaustive oracle would have to enumerate more supports than allowed."""

    def __init__(self, message: str, *, supports: int, cap: int):
        super().__init__(message)
        self.supports = supports
        self.cap = cap


class NonConvergenceError(ChebyGreedyError, RuntimeError):
    """
    An iterative solver ran out of budget before certifying its answer.

    Properties:
        last_iterate (np.ndarray):
            The iterate the solver stopped at.

        gradient_norm (float):
            The optimality measure at ``last_iterate`` (KKT residual for the
            Chebyshev solver, stationarity residual for the rank-one power
            iteration).
    """
    def __init__(
            self,
            message: str,
            *,
            last_iterate: Optional[np.ndarray] = None,
            gradient_norm: float = float('nan'),
            details: Optional[dict[str, Any]] = None
    ):
        super().__init__(message)
        self.last_iterate = None if last_iterate is None else np.array(last_iterate, copy=True)
        self.gradient_norm = float(gradient_norm)
        self.details = dict(details or {})


class InvariantViolation(ChebyGreedyError, AssertionError):
    """A contract that must hold on every run was observed to fail."""
