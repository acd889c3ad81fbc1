import logging
from typing import Optional, Union


ROOT_LOGGER_NAME = 'chebygreedy'
DEFAULT_FORMAT = '%(asctime)s | %(levelname)-8s | %(name)s | %(message)s'

logging.getLogger(ROOT_LOGGER_NAME).addHandler(logging.NullHandler())


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a logger inside the ``chebygreedy`` hierarchy.

    Parameters:
        name (Optional[str]):
            Usually ``__name__`` of the calling module. Names outside the package
            are nested under the package root logger.

    Returns:
        logging.Logger:
            The logger.
    """
    if not name:
        return logging.getLogger(ROOT_LOGGER_NAME)

    if name != ROOT_LOGGER_NAME and not name.startswith(ROOT_LOGGER_NAME + '.'):
        name = f'{ROOT_LOGGER_NAME}.{name}'

    return logging.getLogger(name)


def configure(level: Union[int, str] = logging.INFO, fmt: str = DEFAULT_FORMAT) -> logging.Logger:
    """
    Attach a single stream handler to the package root logger.

    Only the CLI calls this; library code never installs handlers. Calling it
    again replaces the handler instead of stacking another one.
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            raise ValueError(f'Unknown log level: {level}')

    root = logging.getLogger(ROOT_LOGGER_NAME)

    for handler in list(root.handlers):
        if getattr(handler, '_chebygreedy_cli', False):
            root.removeHandler(handler)

    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(fmt))
    handler._chebygreedy_cli = True
    root.addHandler(handler)
    root.setLevel(level)

    return root
