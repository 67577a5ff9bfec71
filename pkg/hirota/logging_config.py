"""Logging configuration for the hirota package."""

import logging
import sys
from typing import Optional

LEVEL_MAP = {
    'DEBUG': logging.DEBUG,
    'INFO': logging.INFO,
    'WARNING': logging.WARNING,
    'ERROR': logging.ERROR,
    'CRITICAL': logging.CRITICAL
}


def configure_logging(log_level: Optional[str] = None,
                      log_format: Optional[str] = None,
                      date_format: Optional[str] = None) -> None:
    """
    Configure logging with flexible level setting.

    Log records go to stderr so that results printed on stdout stay
    machine-readable.

    Args:
        log_level (str, optional): Logging level to set.
            Defaults to settings.DEFAULT_LOG_LEVEL if not specified.
        log_format (str, optional): Record format. Defaults to settings.LOG_FORMAT.
        date_format (str, optional): Date format. Defaults to settings.LOG_DATE_FORMAT.
    """
    import settings

    if log_level:
        log_level = log_level.upper()
        if log_level not in LEVEL_MAP:
            print(f"Invalid log level: {log_level}. Defaulting to {settings.DEFAULT_LOG_LEVEL}.",
                  file=sys.stderr)
            log_level = settings.DEFAULT_LOG_LEVEL
    else:
        log_level = settings.DEFAULT_LOG_LEVEL

    logging.basicConfig(
        level=LEVEL_MAP.get(log_level, logging.WARNING),
        format=log_format or settings.LOG_FORMAT,
        datefmt=date_format or settings.LOG_DATE_FORMAT,
        stream=sys.stderr,
        force=True
    )


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger for a specific module.

    Args:
        name (str): Name of the module/component

    Returns:
        logging.Logger: Configured logger instance
    """
    return logging.getLogger(name)
