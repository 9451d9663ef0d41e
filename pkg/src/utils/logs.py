"""Logging setup: loguru as the sink, stdlib records routed into it."""

import logging
import sys
from pathlib import Path
from typing import Optional

from loguru import logger


class InterceptHandler(logging.Handler):
    """Forward stdlib logging records to loguru"""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = logging.currentframe(), 2
        while frame and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(
            level, record.getMessage()
        )


def setup_logging(level: str = "INFO", log_file: Optional[str] = None) -> None:
    """
    Configure loguru for the command line run

    Args:
        level: Minimum level for the stderr sink
        log_file: Optional file path; rotated at 10 MB, five files kept
    """
    logger.remove()
    # stdout carries results, so logs always go to stderr
    logger.add(
        sys.stderr,
        level=level.upper(),
        format="{time:HH:mm:ss} | {level} | {name} - {message}",
    )

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        logger.add(log_file, rotation="10 MB", retention=5, level="DEBUG")

    logging.basicConfig(handlers=[InterceptHandler()], level=0, force=True)
