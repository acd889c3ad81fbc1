import json
from pathlib import Path
from typing import Optional, Union

import pandas as pd

from chebygreedy.errors import ConfigurationError, StructuralError
from chebygreedy.models.dictionaries.builders import build_custom, build_gaussian, build_haar, build_trigonometric
from chebygreedy.models.dictionaries.dictionary import Dictionary
from chebygreedy.models.space import GridSpace
from chebygreedy.utils.paths import existing_file, writable_file


def save_dictionary_csv(dictionary: Dictionary, csv_file: Union[str, Path]) -> Path:
    """
    Save the elements of a dictionary to CSV.

    One column per element; the header row holds the labels.

    Returns:
        Path:
            The file written.
    """
    csv_file = writable_file(csv_file, 'csv_file')
    frame = pd.DataFrame(dictionary.matrix, columns=list(dictionary.labels))
    frame.to_csv(csv_file, index=False, float_format='%.17g')

    return csv_file


def load_dictionary_csv(csv_file: Union[str, Path], space: GridSpace) -> Dictionary:
    """
    Load a custom dictionary from CSV (one column per element, header = labels).

    Columns are renormalized in ``space``.

    Parameters:
        csv_file (Union[str, Path]):
            The CSV file.

        space (GridSpace):
            The ambient space; the file must have ``space.dim`` data rows.
    """
    csv_file = existing_file(csv_file, 'csv_file')
    frame = pd.read_csv(csv_file)

    if frame.shape[0] != space.dim:
        raise StructuralError(f'{csv_file} has {frame.shape[0]} rows; the space has dimension {space.dim}.')

    return build_custom(frame.to_numpy(dtype=float), space, labels=list(frame.columns), params={'path': str(csv_file)})


def save_descriptor(dictionary: Dictionary, json_file: Union[str, Path]) -> Path:
    """Write the ``{kind, params, seed}`` descriptor of a dictionary."""
    json_file = writable_file(json_file, 'json_file')
    json_file.write_text(json.dumps(dictionary.descriptor, indent=2, sort_keys=True))

    return json_file


def load_descriptor(json_file: Union[str, Path]) -> dict:
    json_file = existing_file(json_file, 'json_file')

    try:
        descriptor = json.loads(json_file.read_text())
    except json.JSONDecodeError as e:
        raise ConfigurationError(f'{json_file} is not valid JSON: {e}') from e

    if not isinstance(descriptor, dict) or 'kind' not in descriptor:
        raise ConfigurationError(f'{json_file} is not a dictionary descriptor.')

    return descriptor


def build_from_descriptor(descriptor: dict, space: GridSpace, seed: Optional[int] = None) -> Dictionary:
    """
    Rebuild a dictionary from its descriptor.

    Parameters:
        descriptor (dict):
            ``{kind, params, seed}``.

        space (GridSpace):
            The ambient space.

        seed (Optional[int]):
            Used for random kinds when the descriptor carries no seed.

    Raises:
        ConfigurationError:
            On an unknown kind or missing parameters.
    """
    kind = descriptor.get('kind')
    params = dict(descriptor.get('params') or {})
    seed = descriptor.get('seed', None) if descriptor.get('seed', None) is not None else seed

    try:
        if kind == 'trigonometric':
            return build_trigonometric(int(params.get('d', space.d or 1)), int(params['max_freq']), space)

        if kind == 'haar':
            return build_haar(int(params['levels']), int(params.get('d', space.d or 1)), space)

        if kind == 'gaussian':
            return build_gaussian(int(params.get('n', space.dim)), int(params['count']), seed, space)

        if kind == 'custom':
            return load_dictionary_csv(params['path'], space)

    except KeyError as e:
        raise ConfigurationError(f"Dictionary descriptor of kind '{kind}' is missing parameter {e}.") from e

    raise ConfigurationError(f"Unknown dictionary kind '{kind}'; expected one of {Dictionary.KINDS}.")
