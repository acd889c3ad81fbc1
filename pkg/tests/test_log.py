import logging

from chebygreedy.utils.log import ROOT_LOGGER_NAME, configure, get_logger


def test_loggers_live_under_the_package_root():
    assert get_logger().name == ROOT_LOGGER_NAME
    assert get_logger('chebygreedy.greedy').name == 'chebygreedy.greedy'
    assert get_logger('notebook').name == 'chebygreedy.notebook'


def test_configure_replaces_its_handler():
    configure(logging.DEBUG)
    root = configure('warning')

    installed = [h for h in root.handlers if getattr(h, '_chebygreedy_cli', False)]

    assert len(installed) == 1
    assert root.level == logging.WARNING
