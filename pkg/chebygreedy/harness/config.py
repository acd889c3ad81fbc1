"""
Experiment configuration.

An experiment is described by a JSON object such as::

    {
      "kind": "recovery",
      "seed": 7,
      "trials": 100,
      "space": {"grid": [64], "p": 2},
      "dictionary": {"kind": "gaussian", "params": {"count": 128}, "per_trial": true},
      "signal": {"K": [4], "law": "uniform_gap", "eps": 0.0},
      "algorithm": {"name": "wcga", "t": 1.0, "mode": "strict_max", "budget": "4*K"}
    }

and parsed into a frozen :class:`ExperimentConfig`. Every problem found while
parsing raises :class:`~chebygreedy.errors.ConfigurationError`.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Any, Optional, Union

from chebygreedy.errors import ChebyGreedyError, ConfigurationError
from chebygreedy.harness.budget import Budget
from chebygreedy.models.dictionaries import Dictionary
from chebygreedy.models.space import GridSpace
from chebygreedy.models.traces import WeaknessPolicy
from chebygreedy.utils.paths import existing_file


KINDS = ('recovery', 'lebesgue', 'rate_bound', 'bilinear', 'analyze', 'decay_demo')

ALGORITHMS = ('tga', 'womp', 'wcga')

LAWS = ('uniform_gap', 'gaussian')

MODELS = ('sparse', 'dense', 'decay')


def _section(raw: dict, name: str) -> dict:
    value = raw.get(name, {})

    if value is None:
        return {}

    if not isinstance(value, dict):
        raise ConfigurationError(f"'{name}' must be a JSON object.")

    return value


def _int_tuple(value: Any, name: str, minimum: int = 0) -> tuple[int, ...]:
    value = [value] if isinstance(value, int) and not isinstance(value, bool) else value

    if not isinstance(value, (list, tuple)) or not value:
        raise ConfigurationError(f"'{name}' must be a non-empty list of integers.")

    if any(isinstance(v, bool) or not isinstance(v, int) or v < minimum for v in value):
        raise ConfigurationError(f"'{name}' entries must be integers >= {minimum}; got {value}.")

    return tuple(value)


def _float_tuple(value: Any, name: str) -> tuple[float, ...]:
    value = [value] if isinstance(value, (int, float)) and not isinstance(value, bool) else value

    if not isinstance(value, (list, tuple)) or not value:
        raise ConfigurationError(f"'{name}' must be a non-empty list of numbers.")

    try:
        return tuple(float(v) for v in value)
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"'{name}' entries must be numbers; got {value}.") from e


def _choice(value: str, options: tuple[str, ...], name: str) -> str:
    if value not in options:
        raise ConfigurationError(f"Unknown {name} '{value}'; expected one of {options}.")

    return value


@dataclass(frozen=True)
class SpaceConfig:
    grid: tuple[int, ...] = (64,)
    p:    float = 2.0

    @classmethod
    def from_dict(cls, raw: dict) -> 'SpaceConfig':
        config = cls(grid=_int_tuple(raw.get('grid', cls.grid), 'space.grid', 1), p=float(raw.get('p', cls.p)))
        config.build()

        return config

    def build(self) -> GridSpace:
        try:
            return GridSpace.uniform(self.grid, self.p)
        except ChebyGreedyError as e:
            raise ConfigurationError(f'Invalid space {self}: {e}') from e


@dataclass(frozen=True)
class DictionaryConfig:
    """
    Properties:
        kind (str):
            One of :attr:`Dictionary.KINDS`.

        params (dict):
            Builder parameters (``max_freq``, ``levels``, ``count``, ``path``...).

        per_trial (bool):
            Draw a fresh random dictionary for every trial instead of sharing one.
    """
    kind:      str = 'gaussian'
    params:    dict = field(default_factory=dict)
    per_trial: bool = False

    @classmethod
    def from_dict(cls, raw: dict) -> 'DictionaryConfig':
        kind = _choice(raw.get('kind', cls.kind), tuple(Dictionary.KINDS), 'dictionary kind')
        params = raw.get('params', {}) or {}

        if not isinstance(params, dict):
            raise ConfigurationError("'dictionary.params' must be a JSON object.")

        return cls(kind=kind, params=dict(params), per_trial=bool(raw.get('per_trial', False)))

    def descriptor(self, seed: Optional[int] = None) -> dict:
        return {'kind': self.kind, 'params': dict(self.params), 'seed': seed}


@dataclass(frozen=True)
class SignalConfig:
    """
    Properties:
        K (tuple[int, ...]):
            Planted sparsities.

        law (str):
            Coefficient law of planted signals: 'uniform_gap' (uniform on
            ``[-1, -0.1] U [0.1, 1]``) or 'gaussian'.

        eps (float):
            Norm of the additive noise.

        model (str):
            'sparse' (planted plus noise), 'dense' (Gaussian samples) or
            'decay' (power-law coefficients on the whole dictionary).

        decay_r (float):
            Smoothness of the 'decay' model; coefficient ``i`` is
            ``(1 + i)**(-(decay_r + 1/2))``.
    """
    K:       tuple[int, ...] = (2,)
    law:     str = 'uniform_gap'
    eps:     float = 0.0
    model:   str = 'sparse'
    decay_r: float = 1.0

    @classmethod
    def from_dict(cls, raw: dict) -> 'SignalConfig':
        eps = float(raw.get('eps', cls.eps))

        if eps < 0:
            raise ConfigurationError(f'signal.eps must be non-negative; got {eps}.')

        decay_r = float(raw.get('decay_r', cls.decay_r))

        if decay_r <= 0:
            raise ConfigurationError(f'signal.decay_r must be positive; got {decay_r}.')

        return cls(
            K=_int_tuple(raw.get('K', cls.K), 'signal.K', 1),
            law=_choice(raw.get('law', cls.law), LAWS, 'coefficient law'),
            eps=eps,
            model=_choice(raw.get('model', cls.model), MODELS, 'signal model'),
            decay_r=decay_r,
        )


@dataclass(frozen=True)
class AlgorithmConfig:
    name:   str = 'wcga'
    t:      float = 1.0
    mode:   str = 'strict_max'
    budget: str = 'm'

    @classmethod
    def from_dict(cls, raw: dict) -> 'AlgorithmConfig':
        config = cls(
            name=_choice(raw.get('name', cls.name), ALGORITHMS, 'algorithm'),
            t=float(raw.get('t', cls.t)),
            mode=raw.get('mode', cls.mode),
            budget=str(raw.get('budget', cls.budget)),
        )
        config.policy()
        Budget(config.budget)

        return config

    def policy(self) -> WeaknessPolicy:
        try:
            return WeaknessPolicy(t=self.t, mode=self.mode)
        except ChebyGreedyError as e:
            raise ConfigurationError(str(e)) from e

    def parsed_budget(self) -> Budget:
        return Budget(self.budget)


@dataclass(frozen=True)
class AnalysisSettings:
    K: tuple[int, ...] = (1, 2)
    D: Optional[int] = None
    r: tuple[float, ...] = (0.5,)

    @classmethod
    def from_dict(cls, raw: dict) -> 'AnalysisSettings':
        D = raw.get('D', None)

        if D is not None and (isinstance(D, bool) or not isinstance(D, int) or D < 1):
            raise ConfigurationError(f'analysis.D must be a positive integer; got {D!r}.')

        return cls(K=_int_tuple(raw.get('K', cls.K), 'analysis.K', 1), D=D, r=_float_tuple(raw.get('r', cls.r), 'analysis.r'))


@dataclass(frozen=True)
class BilinearSettings:
    """Random ``rows x cols`` matrices, or the CSV at ``path`` for every trial."""
    rows: int = 8
    cols: int = 8
    M:    Optional[tuple[int, ...]] = None
    path: Optional[str] = None

    @classmethod
    def from_dict(cls, raw: dict) -> 'BilinearSettings':
        rows, cols = _int_tuple([raw.get('rows', cls.rows), raw.get('cols', cls.cols)], 'bilinear.rows/cols', 1)
        M = raw.get('M', None)
        path = raw.get('path', None)

        return cls(
            rows=rows,
            cols=cols,
            M=None if M is None else _int_tuple(M, 'bilinear.M', 1),
            path=None if path is None else str(path),
        )


@dataclass(frozen=True)
class ExperimentConfig:
    """
    One experiment.

    Properties:
        kind (str):
            One of ``KINDS``.

        seed (int):
            Root of every random draw; required.

        trials (int):
            Independent trials, at least 1.

        m_values (Optional[tuple[int, ...]]):
            Term counts swept by the 'lebesgue', 'rate_bound' and 'decay_demo'
            experiments; each experiment has its own default.

        r (float):
            Exponent of the incoherence property used by 'rate_bound'.

        rate_constant (float):
            The constant ``C`` of the convex-hull rate bound reported by 'decay_demo'.

        output (Optional[str]):
            Output directory; the CLI ``--out`` flag overrides it.
    """
    kind:          str
    seed:          int
    trials:        int = 1
    space:         SpaceConfig = SpaceConfig()
    dictionary:    DictionaryConfig = DictionaryConfig()
    signal:        SignalConfig = SignalConfig()
    algorithm:     AlgorithmConfig = AlgorithmConfig()
    m_values:      Optional[tuple[int, ...]] = None
    r:             float = 0.5
    rate_constant: float = 1.0
    analysis:      AnalysisSettings = AnalysisSettings()
    bilinear:      BilinearSettings = BilinearSettings()
    output:        Optional[str] = None

    def __post_init__(self):
        _choice(self.kind, KINDS, 'experiment kind')

        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigurationError(f'seed must be a non-negative integer; got {self.seed!r}.')

        if isinstance(self.trials, bool) or not isinstance(self.trials, int) or self.trials < 1:
            raise ConfigurationError(f'trials must be an integer >= 1; got {self.trials!r}.')

        if not 0.0 < self.r <= 1.0:
            raise ConfigurationError(f'r must lie in (0, 1]; got {self.r}.')

        if self.rate_constant <= 0:
            raise ConfigurationError(f'rate_constant must be positive; got {self.rate_constant}.')

    @classmethod
    def from_dict(cls, raw: dict, kind: Optional[str] = None) -> 'ExperimentConfig':
        """
        Parse a decoded JSON object.

        Parameters:
            raw (dict):
                The object.

            kind (Optional[str]):
                The experiment kind the caller expects (the CLI subcommand).
                Fills in a missing ``kind`` and must match a present one.
        """
        if not isinstance(raw, dict):
            raise ConfigurationError('An experiment config must be a JSON object.')

        unknown = set(raw) - {f for f in cls.__dataclass_fields__}

        if unknown:
            raise ConfigurationError(f'Unknown config key(s): {sorted(unknown)}.')

        found = raw.get('kind', kind)

        if kind is not None and found != kind:
            raise ConfigurationError(f"The config describes a '{found}' experiment, not '{kind}'.")

        if 'seed' not in raw:
            raise ConfigurationError('A seed is required; unseeded experiments are not supported.')

        m_values = raw.get('m_values', None)

        try:
            return cls(
                kind=found,
                seed=raw['seed'],
                trials=raw.get('trials', 1),
                space=SpaceConfig.from_dict(_section(raw, 'space')),
                dictionary=DictionaryConfig.from_dict(_section(raw, 'dictionary')),
                signal=SignalConfig.from_dict(_section(raw, 'signal')),
                algorithm=AlgorithmConfig.from_dict(_section(raw, 'algorithm')),
                m_values=None if m_values is None else _int_tuple(m_values, 'm_values', 0),
                r=float(raw.get('r', 0.5)),
                rate_constant=float(raw.get('rate_constant', 1.0)),
                analysis=AnalysisSettings.from_dict(_section(raw, 'analysis')),
                bilinear=BilinearSettings.from_dict(_section(raw, 'bilinear')),
                output=raw.get('output', None),
            )
        except ConfigurationError:
            raise
        except (TypeError, ValueError) as e:
            raise ConfigurationError(f'Invalid experiment config: {e}') from e

    def with_overrides(self, seed: Optional[int] = None, output: Optional[str] = None) -> 'ExperimentConfig':
        changes = {}

        if seed is not None:
            changes['seed'] = seed

        if output is not None:
            changes['output'] = str(output)

        return replace(self, **changes) if changes else self

    def to_dict(self) -> dict:
        """JSON-ready echo; feeding it back to :meth:`from_dict` rebuilds the config."""
        return json.loads(json.dumps(asdict(self)))


def load_config(json_file: Union[str, Path], kind: Optional[str] = None) -> ExperimentConfig:
    """Read and validate an experiment config file."""
    try:
        json_file = existing_file(json_file, 'json_file')
    except FileNotFoundError as e:
        raise ConfigurationError(str(e)) from e

    try:
        raw = json.loads(json_file.read_text())
    except json.JSONDecodeError as e:
        raise ConfigurationError(f'{json_file} is not valid JSON: {e}') from e

    return ExperimentConfig.from_dict(raw, kind=kind)
