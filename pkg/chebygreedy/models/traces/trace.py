from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional, Union

import numpy as np
import pandas as pd

from chebygreedy.errors import DomainError, StructuralError
from chebygreedy.models.space import FunctionVector
from chebygreedy.utils.paths import writable_file


class Termination(str, Enum):
    MAX_ITERS = 'max_iters'
    RESIDUAL_TOL = 'residual_tol'
    ZERO_FUNCTIONALS = 'zero_functionals'


@dataclass(frozen=True)
class WeaknessPolicy:
    """
    How a weak greedy step resolves "any element satisfying" the weak condition.

    Properties:
        MODES (tuple):
            - 'strict_max';
                Pick the maximizer of ``|F(g)|`` (lowest index on ties).
            - 'adversarial_weak';
                Pick the lowest-index element with ``|F(g)| >= t * max``.

        t (float):
            The weakness parameter in (0, 1].

        mode (str):
            One of ``MODES``.
    """
    t:    float = 1.0
    mode: str = 'strict_max'

    MODES = ('strict_max', 'adversarial_weak')

    def __post_init__(self):
        if not 0.0 < self.t <= 1.0:
            raise DomainError(f'The weakness parameter t must lie in (0, 1]; got {self.t}.')

        if self.mode not in self.MODES:
            raise StructuralError(f"Unknown weakness mode '{self.mode}'; expected one of {self.MODES}.")

    def select(self, magnitudes: np.ndarray, candidates: Optional[np.ndarray] = None) -> int:
        """
        Choose an element index.

        Parameters:
            magnitudes (np.ndarray):
                ``|F(g_i)|`` for every element.

            candidates (Optional[np.ndarray]):
                Boolean mask of selectable elements; all when omitted.

        Returns:
            int:
                The chosen index, or -1 when no candidate is left.
        """
        masked = np.where(candidates, magnitudes, -np.inf) if candidates is not None else magnitudes

        if not np.any(np.isfinite(masked)):
            return -1

        if self.mode == 'strict_max':
            return int(np.argmax(masked))

        threshold = self.t * float(np.max(magnitudes))
        admissible = np.flatnonzero(masked >= threshold)

        if not admissible.size:
            return int(np.argmax(masked))

        return int(admissible[0])


class GreedyTrace:
    """
    Full history of one greedy run.

    Index 0 of ``residual_norms`` is ``||f_0||``; entry ``m`` is ``||f_m||``
    after ``m`` selections.

    Properties:
        algorithm (str):
            'tga', 'womp' or 'wcga'.

        selected (list[int]):
            Element indices in selection order.

        coefficients (list[np.ndarray]):
            Per iteration, the coefficients of the approximant on ``selected[:m]``.

        residual_norms (list[float]):
            ``||f_m||`` per iteration.

        functional_values (list[tuple[float, float]]):
            Per iteration, the achieved ``|F(phi_m)|`` and the scan maximum.

        skipped (list[int]):
            Elements dropped because they were numerically dependent on the
            current selection.

        termination (Optional[Termination]):
            Why the run stopped; ``None`` while it is still running.
    """
    def __init__(self, algorithm: str, initial_norm: float):
        self.__algorithm         = algorithm
        self.__coefficients      = []
        self.__functional_values = []
        self.__residual          = None
        self.__residual_norms    = [float(initial_norm)]
        self.__selected          = []
        self.__skipped           = []
        self.__termination       = None

    @property
    def algorithm(self) -> str:
        return self.__algorithm

    @property
    def coefficients(self) -> list[np.ndarray]:
        return self.__coefficients

    @property
    def functional_values(self) -> list[tuple[float, float]]:
        return self.__functional_values

    @property
    def iterations(self) -> int:
        return len(self.__selected)

    @property
    def residual(self) -> Optional[FunctionVector]:
        """The final residual ``f_m`` once the run has finished."""
        return self.__residual

    @property
    def residual_norms(self) -> list[float]:
        return self.__residual_norms

    @property
    def selected(self) -> list[int]:
        return self.__selected

    @property
    def skipped(self) -> list[int]:
        return self.__skipped

    @property
    def termination(self) -> Optional[Termination]:
        return self.__termination

    @property
    def finished(self) -> bool:
        return self.__termination is not None

    def record(self, index: int, coefficients: np.ndarray, residual_norm: float, achieved: float, scan_max: float):
        """Append one completed iteration."""
        if self.finished:
            raise StructuralError('Cannot record iterations on a finished trace.')

        self.__selected.append(int(index))
        self.__coefficients.append(np.array(coefficients, dtype=float, copy=True))
        self.__residual_norms.append(float(residual_norm))
        self.__functional_values.append((float(achieved), float(scan_max)))

    def skip(self, index: int):
        self.__skipped.append(int(index))

    def finish(self, reason: Termination, residual: Optional[FunctionVector] = None):
        if self.finished:
            raise StructuralError('Trace is already finished.')

        self.__termination = Termination(reason)
        self.__residual = residual

    def residual_norm_at(self, m: int) -> float:
        """``||f_m||``; runs that stopped early keep their last residual."""
        if m < 0:
            raise StructuralError('Iteration count must be non-negative.')

        return self.__residual_norms[min(m, len(self.__residual_norms) - 1)]

    def is_monotone(self, rel_tol: float = 1e-10) -> bool:
        """Residual norms never increase by more than ``rel_tol * ||f_0||``."""
        norms = np.asarray(self.__residual_norms)
        slack = rel_tol * norms[0]
        return bool(np.all(np.diff(norms) <= slack))

    def satisfies_weak_selection(self, t: float, atol: float = 1e-12) -> bool:
        """Every step achieved at least ``t`` times the scan maximum."""
        return all(achieved >= t * scan_max - atol for achieved, scan_max in self.__functional_values)

    def to_frame(self) -> pd.DataFrame:
        """One row per iteration: iteration, index, residual_norm, scan_max, achieved."""
        rows = [
            {
                'iteration': m + 1,
                'index': index,
                'residual_norm': self.__residual_norms[m + 1],
                'scan_max': scan_max,
                'achieved': achieved,
            }
            for m, (index, (achieved, scan_max)) in enumerate(zip(self.__selected, self.__functional_values))
        ]

        return pd.DataFrame(rows, columns=['iteration', 'index', 'residual_norm', 'scan_max', 'achieved'])

    def to_dict(self) -> dict:
        return {
            'algorithm': self.algorithm,
            'selected': list(self.__selected),
            'coefficients': [c.tolist() for c in self.__coefficients],
            'residual_norms': list(self.__residual_norms),
            'functional_values': [list(v) for v in self.__functional_values],
            'skipped': list(self.__skipped),
            'termination': None if self.__termination is None else self.__termination.value,
        }

    def to_json(self, json_file: Optional[Union[str, Path]] = None) -> str:
        text = json.dumps(self.to_dict(), indent=2)

        if json_file is not None:
            writable_file(json_file, 'json_file').write_text(text)

        return text

    def to_csv(self, csv_file: Union[str, Path]) -> Path:
        csv_file = writable_file(csv_file, 'csv_file')
        self.to_frame().to_csv(csv_file, index=False, float_format='%.17g')
        return csv_file

    def __repr__(self) -> str:
        return (
            f'GreedyTrace(algorithm={self.algorithm!r}, iterations={self.iterations}, '
            f'residual={self.__residual_norms[-1]:.3e}, termination={self.__termination})'
        )
