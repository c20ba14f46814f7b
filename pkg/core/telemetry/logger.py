"""
Logging setup - structlog over the stdlib logging module

Records go to stderr; stdout carries keystream, CSV and report output.
"""

import logging
import sys
from pathlib import Path
from typing import Optional

import structlog

LOG_FORMAT = '%(asctime)s | %(name)s | %(levelname)s | %(message)s'


def configure_logging(level: str = 'INFO', log_file: Optional[str] = None) -> None:
    """
    Configure stdlib handlers and the structlog processor chain

    Args:
        level: Log level name
        log_file: Optional path of an additional UTF-8 log file
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))

    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.processors.format_exc_info,
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


def get_logger(name: str):
    return structlog.get_logger(name)
