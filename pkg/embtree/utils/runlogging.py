import json
import logging
import pathlib
import sys
from time import gmtime, strftime
from typing import Optional

DATEFMT = "%Y/%m/%dT%H:%M:%SZ"


def init_logging(logfile: Optional[pathlib.Path] = None, verbose: bool = False) -> None:
    logger = logging.getLogger("embtree")
    logger.setLevel(logging.DEBUG)
    # init_logging may be called several times from tests
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    console = logging.StreamHandler(sys.stderr)
    console.setLevel(logging.DEBUG if verbose else logging.WARNING)
    console.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    logger.addHandler(console)

    if logfile:
        out = logging.FileHandler(
            filename=logfile,
            encoding="utf-8",
        )
        out.setLevel(logging.DEBUG)
        out.setFormatter(CustomJsonFormatter(datefmt=DATEFMT))
        logger.addHandler(out)


def runlog() -> logging.Logger:
    return logging.getLogger("embtree")


class CustomJsonFormatter(logging.Formatter):
    dropped_keys = {
        "name",
        "pathname",
        "filename",
        "module",
        "exc_info",
        "exc_text",
        "stack_info",
        "lineno",
        "funcName",
        "msecs",
        "threadName",
        "processName",
        "msg",
        "args",
        "taskName",
    }

    def format(self, record: logging.LogRecord) -> str:
        super().format(record)
        output = {
            k: v for k, v in record.__dict__.items() if k not in self.dropped_keys
        }
        output["timestamp"] = strftime(DATEFMT, gmtime(record.created))
        return json.dumps(output, default=str)
