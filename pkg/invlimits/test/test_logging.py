import logging

import pytest

from invlimits import api
from invlimits.cmd._util import RunReport
from invlimits.util.logging import ReportLogHandler, get_logger
from ._util import fixture


def log_every_level(report):
    logger = get_logger(report, level=10)

    logger.debug('First debug message')
    logger.warning('Serious warning')
    logger.error('Critical error')

    levels = {m['message']: m['level'] for m in report.messages}
    assert levels['First debug message'] == 'DEBUG'
    assert levels['Serious warning'] == 'WARNING'
    assert levels['Critical error'] == 'ERROR'
    return True


def log_with_loglevel(report):
    logger = get_logger(report, level=40)

    logger.warning('Ignore me')
    logger.error('Second error')

    messages = [m['message'] for m in report.messages]
    assert 'Ignore me' not in messages
    assert 'Second error' in messages
    return True


def log_from_api(report):
    get_logger(report, level=20)
    api.load_system(fixture('system_collapse.json'))

    loggers = {m['logger'] for m in report.messages}
    assert 'invlimits.api.system' in loggers
    assert 'invlimits.api.poset' in loggers
    return True


def replace_handlers():
    first, second = RunReport(command=['first']), RunReport(command=['second'])
    get_logger(first)
    logger = get_logger(second)
    handlers = [h for h in logger.handlers if isinstance(h, ReportLogHandler)]
    assert len(handlers) == 1 and handlers[0].report is second

    logger.info('only in the second report')
    assert first.messages == []
    return True


@pytest.mark.depends(name='logging')
def test_logging():
    """
    Test the logging module.
    Messages of all levels are collected into the run report
    and the handler level filters them.
    """
    logger = logging.getLogger('invlimits')
    level = logger.level
    try:
        assert log_every_level(RunReport(command=['test']))
        assert log_with_loglevel(RunReport(command=['test']))
        assert log_from_api(RunReport(command=['test']))
        assert replace_handlers()
    finally:
        logger.setLevel(level)
