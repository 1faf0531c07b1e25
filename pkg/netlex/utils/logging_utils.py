"""Logging & Monitoring

loguru sinks for the CLI plus an operation timer that records elapsed time and
resident memory. The library itself stays silent (``logger.disable("netlex")``
in the package root) until ``setup_logging`` enables it.
"""

import sys
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional

import psutil
from loguru import logger

LOG_FILE_NAME = "netlex.log"

_sink_ids: List[int] = []


class LogFormatter:
    """Log line formats for the console and file sinks."""

    @staticmethod
    def console_format() -> str:
        return (
            "<green>{time:HH:mm:ss.SSS}</green> | "
            "<level>{level: <8}</level> | "
            "<level>{message}</level>"
        )

    @staticmethod
    def file_format() -> str:
        return "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} | {message} | {extra}"


def setup_logging(level: str = "INFO", log_dir: Optional[Path] = None) -> None:
    """
    Route netlex logs to stderr and, when ``log_dir`` is given, to ``netlex.log`` there.

    Calling it again replaces the sinks installed by the previous call.
    """
    shutdown_logging()
    logger.remove()
    logger.enable("netlex")
    _sink_ids.append(
        logger.add(
            sys.stderr,
            format=LogFormatter.console_format(),
            level=level.upper(),
            colorize=None,
            backtrace=False,
            diagnose=False,
        )
    )
    if log_dir is not None:
        Path(log_dir).mkdir(parents=True, exist_ok=True)
        _sink_ids.append(
            logger.add(
                Path(log_dir) / LOG_FILE_NAME,
                format=LogFormatter.file_format(),
                level="DEBUG",
                encoding="utf-8",
                backtrace=True,
                diagnose=False,
            )
        )


def shutdown_logging() -> None:
    """Remove the sinks installed by ``setup_logging``."""
    while _sink_ids:
        try:
            logger.remove(_sink_ids.pop())
        except ValueError:
            pass


def resident_memory_mb() -> float:
    return psutil.Process().memory_info().rss / (1024 * 1024)


@contextmanager
def log_operation(operation_name: str, **context) -> Iterator[None]:
    """Log start and finish of an operation with elapsed time and RSS."""
    bound = logger.bind(operation=operation_name, **context)
    start_time = time.perf_counter()
    bound.debug(f"Starting: {operation_name}")
    try:
        yield
    except Exception as e:
        duration = time.perf_counter() - start_time
        bound.bind(duration=duration).error(
            f"Failed: {operation_name} after {duration:.3f}s ({type(e).__name__})"
        )
        raise
    duration = time.perf_counter() - start_time
    memory = resident_memory_mb()
    bound.bind(duration=duration, rss_mb=memory).info(
        f"Completed: {operation_name} in {duration:.3f}s (RSS {memory:.1f} MB)"
    )
