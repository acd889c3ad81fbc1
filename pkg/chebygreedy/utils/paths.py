from pathlib import Path
from typing import Union

from chebygreedy.errors import StructuralError


def to_path(path: Union[str, Path], argument: str = 'path') -> Path:
    """
    Normalize a user supplied path.

    Parameters:
        path (Union[str, Path]):
            The path to normalize.

        argument (str):
            The argument name used in the error message.

    Returns:
        Path:
            The expanded, absolute path.
    """
    if not isinstance(path, (Path, str)):
        raise StructuralError(f'{argument} must be a string or Path object.')

    if not isinstance(path, Path):
        path = Path(path)

    return path.expanduser().resolve().absolute()


def existing_file(path: Union[str, Path], argument: str = 'path') -> Path:
    """Like :func:`to_path`, but the file must exist."""
    path = to_path(path, argument)

    if not path.is_file():
        raise FileNotFoundError(f'File not found: {path}')

    return path


def writable_file(path: Union[str, Path], argument: str = 'path') -> Path:
    """Like :func:`to_path`, creating the parent directory when missing."""
    path = to_path(path, argument)
    path.parent.mkdir(parents=True, exist_ok=True)

    return path
