from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Optional, Union

from chebygreedy.errors import StructuralError
from chebygreedy.utils.paths import writable_file


METHODS = ('exact', 'sampled')


def _entry(value: float, method: str) -> dict:
    if method not in METHODS:
        raise StructuralError(f"Unknown method tag '{method}'; expected one of {METHODS}.")

    return {'value': float(value), 'method': method}


def _json_number(value: float) -> Union[float, str]:
    if math.isinf(value):
        return 'inf'

    if math.isnan(value):
        return 'nan'

    return value


class PropertyReport:
    """
    Computed dictionary constants with a method tag ('exact' or 'sampled') per entry.

    Properties:
        descriptor (dict):
            Descriptor of the analyzed dictionary.

        seed (int):
            Seed used by every sampled entry.

        coherence (Optional[float]):
            Coherence in the p = 2 pairing.

        rip (dict[int, dict]):
            ``s -> {value, method}`` for the restricted isometry constant.

        unconditionality (dict[tuple[int, int], dict]):
            ``(K, D) -> {value, method}``.

        nikolskii (dict[tuple[int, float], dict]):
            ``(K, r) -> {value, method}``.

        ell1_incoherence (dict[tuple[int, int, float], dict]):
            ``(K, D, r) -> {value, method}``.
    """
    def __init__(self, descriptor: Optional[dict] = None, seed: int = 0):
        self.__coherence        = None
        self.__descriptor       = dict(descriptor or {})
        self.__ell1_incoherence = {}
        self.__nikolskii        = {}
        self.__rip              = {}
        self.__seed             = int(seed)
        self.__unconditionality = {}

    @property
    def coherence(self) -> Optional[float]:
        return self.__coherence

    @coherence.setter
    def coherence(self, new: float):
        if self.__coherence is not None:
            raise AttributeError('Coherence is already set and cannot be changed!')

        if not 0.0 <= new <= 1.0:
            raise ValueError(f'Coherence must lie in [0, 1]; got {new}.')

        self.__coherence = float(new)

    @property
    def descriptor(self) -> dict:
        return dict(self.__descriptor)

    @property
    def ell1_incoherence(self) -> dict:
        return dict(self.__ell1_incoherence)

    @property
    def nikolskii(self) -> dict:
        return dict(self.__nikolskii)

    @property
    def rip(self) -> dict:
        return dict(self.__rip)

    @property
    def seed(self) -> int:
        return self.__seed

    @property
    def unconditionality(self) -> dict:
        return dict(self.__unconditionality)

    def add_rip(self, s: int, value: float, method: str):
        self.__rip[int(s)] = _entry(value, method)

    def add_unconditionality(self, K: int, D: int, value: float, method: str):
        self.__unconditionality[(int(K), int(D))] = _entry(value, method)

    def add_nikolskii(self, K: int, r: float, value: float, method: str):
        self.__nikolskii[(int(K), float(r))] = _entry(value, method)

    def add_ell1_incoherence(self, K: int, D: int, r: float, value: float, method: str):
        self.__ell1_incoherence[(int(K), int(D), float(r))] = _entry(value, method)

    def violations(self, tol: float = 1e-8) -> list[str]:
        """
        Relations every report must satisfy, as human-readable failures.

        Checks that ``delta(s)`` is nondecreasing on exact entries, that
        ``U``, ``C1`` and ``V`` are at least 1, and the implications
        ``C1(K) <= V(K, D)``, ``U(K, D) <= V(K, D) K**r``,
        ``V(K, D) <= C1(K) U(K, D)`` and, given an exact ``delta(D) < 1``,
        ``U(K, D) <= ((1 + delta) / (1 - delta))**(1/2)``.
        """
        found = []
        exact_rip = sorted((s, e['value']) for s, e in self.__rip.items() if e['method'] == 'exact')

        for (s0, d0), (s1, d1) in zip(exact_rip, exact_rip[1:]):
            if d1 < d0 - tol:
                found.append(f'delta({s1}) = {d1:.6g} < delta({s0}) = {d0:.6g}')

        for name, table in (('U', self.__unconditionality), ('C1', self.__nikolskii), ('V', self.__ell1_incoherence)):
            for key, e in table.items():
                if e['value'] < 1.0 - tol:
                    found.append(f'{name}{key} = {e["value"]:.6g} < 1')

        for (K, D, r), v in self.__ell1_incoherence.items():
            c1 = self.__nikolskii.get((K, r))
            u = self.__unconditionality.get((K, D))

            if v['method'] != 'exact':
                continue

            # sampled C1 and U are lower bounds, so these two stay valid for them
            if c1 is not None and c1['value'] > v['value'] + tol:
                found.append(f'C1({K}, {r}) = {c1["value"]:.6g} > V({K}, {D}, {r}) = {v["value"]:.6g}')

            if u is not None and u['value'] > v['value'] * K ** r + tol:
                found.append(f'U({K}, {D}) = {u["value"]:.6g} > V K^r = {v["value"] * K ** r:.6g}')

            if c1 is None or u is None or c1['method'] != 'exact' or u['method'] != 'exact':
                continue

            if v['value'] > c1['value'] * u['value'] + tol:
                found.append(f'V({K}, {D}, {r}) = {v["value"]:.6g} > C1 U = {c1["value"] * u["value"]:.6g}')

        for (K, D), u in self.__unconditionality.items():
            delta = self.__rip.get(D)

            if delta is None or delta['method'] != 'exact' or not delta['value'] < 1.0:
                continue

            riesz = math.sqrt((1.0 + delta['value']) / (1.0 - delta['value']))

            if u['value'] > riesz + tol:
                found.append(f'U({K}, {D}) = {u["value"]:.6g} > ((1 + delta)/(1 - delta))^(1/2) = {riesz:.6g}')

        return found

    def to_dict(self) -> dict:
        def table(entries: dict, names: tuple[str, ...]) -> list[dict]:
            rows = []

            for key, e in sorted(entries.items()):
                key = key if isinstance(key, tuple) else (key,)
                rows.append({**dict(zip(names, key)), 'value': _json_number(e['value']), 'method': e['method']})

            return rows

        return {
            'descriptor': self.descriptor,
            'seed': self.seed,
            'coherence': None if self.__coherence is None else self.__coherence,
            'rip': table(self.__rip, ('s',)),
            'unconditionality': table(self.__unconditionality, ('K', 'D')),
            'nikolskii': table(self.__nikolskii, ('K', 'r')),
            'ell1_incoherence': table(self.__ell1_incoherence, ('K', 'D', 'r')),
        }

    def to_json(self, json_file: Optional[Union[str, Path]] = None) -> str:
        text = json.dumps(self.to_dict(), indent=2)

        if json_file is not None:
            writable_file(json_file, 'json_file').write_text(text)

        return text

    def __repr__(self) -> str:
        return (
            f'PropertyReport(coherence={self.__coherence}, rip={len(self.__rip)}, '
            f'U={len(self.__unconditionality)}, C1={len(self.__nikolskii)}, V={len(self.__ell1_incoherence)})'
        )
