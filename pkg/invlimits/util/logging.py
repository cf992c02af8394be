"""
Logging to the run report
-------------------------

invlimits collects every log event emitted through the builtin
:any:`logging` module below the ``invlimits`` logger into the
:class:`RunReport <invlimits.cmd._util.RunReport>` of a CLI run.
This way the JSON report written by ``--out`` holds the warnings
of the loaders and checks next to the result.
You need to pass the report to :func:`get_logger` to enable it.

"""
import logging
from datetime import datetime as dt


class ReportLogHandler(logging.Handler):
    def __init__(self, report, level=logging.INFO):
        # initialize the base handler
        logging.Handler.__init__(self, level=level)

        # store the report
        self.report = report

    def emit(self, record: logging.LogRecord):
        self.report.messages.append({
            'tstamp': dt.fromtimestamp(record.created).isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage()
        })


def get_logger(report, level=logging.INFO):
    """
    Get a logger that collects into the given report.
    Handlers of earlier reports are removed.
    """
    logger = logging.getLogger('invlimits')
    for handler in list(logger.handlers):
        if isinstance(handler, ReportLogHandler):
            logger.removeHandler(handler)

    # add handler
    logger.addHandler(ReportLogHandler(report, level=level))
    if logger.level == logging.NOTSET or logger.level > level:
        logger.setLevel(level)

    return logger
