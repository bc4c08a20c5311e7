import logging
import multiprocessing
import os
import sys
from typing import Any, Callable, NoReturn, Sequence

DEFAULT_EXACT_CAP = 2000
DEFAULT_WORKERS = 1


class EmbtreeError(Exception):
    """Base class of every error raised by the library."""


class ParameterError(EmbtreeError, ValueError):
    """Invalid ensemble or query parameters."""


class CapExceededError(ParameterError):
    """An exact or exhaustive computation was asked beyond its cap."""


class ModeError(ParameterError):
    """An exact-only operation received log-space data."""


def fatal(message) -> NoReturn:
    logging.getLogger("embtree").error(message)
    sys.exit(1)


def env_int(name: str, default: int) -> int:
    """Read a positive integer from the environment, falling back to default."""
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    if not raw.isnumeric() or int(raw) < 1:
        raise ParameterError(f"{name}={raw!r} is not a positive integer")
    return int(raw)


def exact_cap() -> int:
    """Largest n accepted by exact rational operations."""
    return env_int("EMBTREE_EXACT_CAP", DEFAULT_EXACT_CAP)


def default_workers() -> int:
    return env_int("EMBTREE_WORKERS", DEFAULT_WORKERS)


def run_chunks(
    worker: Callable[[tuple], Any], tasks: Sequence[tuple], workers: int
) -> list[Any]:
    """worker(task) for every task, in task order, serially or on a process pool.

    worker must be a module-level function so it pickles.
    """
    if workers <= 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]
    with multiprocessing.Pool(processes=min(workers, len(tasks))) as pool:
        return pool.map(worker, tasks)
