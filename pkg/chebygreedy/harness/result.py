from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Optional, Union

import numpy as np
import pandas as pd

from chebygreedy.errors import InvariantViolation
from chebygreedy.harness.config import ExperimentConfig
from chebygreedy.utils.log import get_logger
from chebygreedy.utils.paths import to_path, writable_file


log = get_logger(__name__)


def json_safe(value: Any) -> Any:
    """Recursively turn numpy scalars into Python numbers and non-finite floats into strings."""
    if isinstance(value, dict):
        return {str(k): json_safe(v) for k, v in value.items()}

    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]

    if isinstance(value, np.ndarray):
        return json_safe(value.tolist())

    if isinstance(value, (np.integer, np.bool_)):
        return value.item()

    if isinstance(value, (float, np.floating)):
        value = float(value)

        if math.isnan(value):
            return 'nan'

        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'

    return value


class ExperimentResult:
    """
    Rows and aggregates of one experiment run.

    Properties:
        config (ExperimentConfig):
            The configuration that produced the result.

        rows (pd.DataFrame):
            One row per (trial, parameter), ordered by trial then parameter.

        summary (dict):
            Aggregates of the rows.

        violations (list[str]):
            Every invariant violation observed during the run.

        timings (list[float]):
            Wall time of each trial in seconds.
    """
    def __init__(
            self,
            config:     ExperimentConfig,
            rows:       pd.DataFrame,
            summary:    dict,
            violations: Optional[list[str]] = None,
            timings:    Optional[list[float]] = None
    ):
        self.__config     = config
        self.__rows       = rows
        self.__summary    = dict(summary)
        self.__violations = list(violations or [])
        self.__timings    = list(timings or [])

    @property
    def config(self) -> ExperimentConfig:
        return self.__config

    @property
    def rows(self) -> pd.DataFrame:
        return self.__rows

    @property
    def summary(self) -> dict:
        return self.__summary

    @property
    def timings(self) -> list[float]:
        return self.__timings

    @property
    def violations(self) -> list[str]:
        return self.__violations

    @property
    def ok(self) -> bool:
        return not self.__violations

    def raise_for_violations(self):
        """
        Raises:
            InvariantViolation:
                If the run observed any violation; the message lists the first few.
        """
        if self.__violations:
            shown = '; '.join(self.__violations[:3])
            raise InvariantViolation(f'{self.config.kind}: {len(self.__violations)} violation(s): {shown}')

    def summary_document(self) -> dict:
        """``summary.json``: aggregates, violations, the config echo and the tool version."""
        from chebygreedy import __version__

        return json_safe({
            'kind': self.config.kind,
            'version': __version__,
            'trials': self.config.trials,
            'rows': int(len(self.rows)),
            'summary': self.summary,
            'violation_count': len(self.violations),
            'violations': self.violations,
            'config': self.config.to_dict(),
        })

    def write(self, out_dir: Union[str, Path]) -> Path:
        """
        Write ``result.csv``, ``summary.json`` and ``timing.csv`` into ``out_dir``.

        Wall times only go to ``timing.csv``, so the other two files are
        byte-identical across reruns of the same config.

        Returns:
            Path:
                The output directory.
        """
        out_dir = to_path(out_dir, 'out_dir')
        out_dir.mkdir(parents=True, exist_ok=True)

        self.rows.to_csv(writable_file(out_dir / 'result.csv'), index=False, float_format='%.17g')
        writable_file(out_dir / 'summary.json').write_text(json.dumps(self.summary_document(), indent=2, sort_keys=True))
        pd.DataFrame({'trial': range(len(self.timings)), 'wall_time': self.timings}).to_csv(
            writable_file(out_dir / 'timing.csv'), index=False
        )

        log.info('Wrote %d rows to %s', len(self.rows), out_dir)

        return out_dir

    def __repr__(self) -> str:
        return f'ExperimentResult(kind={self.config.kind!r}, rows={len(self.rows)}, violations={len(self.violations)})'
