import logging
import os

from .angles import Radians, fmt_angle

LEVEL_ENV = "FOLDFRONT_LOG_LEVEL"


def get_logger(name: str) -> logging.Logger:
    logger = logging.getLogger(name)
    if not logger.level:
        logger.setLevel(os.environ.get(LEVEL_ENV, "WARNING").upper())
    if not logger.handlers:
        handler = logging.StreamHandler()
        formatter = logging.Formatter('[%(levelname)s] %(name)s: %(message)s')
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    return logger


def set_level(level: int | str) -> None:
    """Apply a level to every foldfront logger created so far."""
    for name in list(logging.root.manager.loggerDict):
        if name == "foldfront" or name.startswith("foldfront."):
            logging.getLogger(name).setLevel(level)


def format_angle_for_logging(rad: Radians) -> str:
    """
    Format a radian angle for logging display.

    Args:
        rad: Angle in radians

    Returns:
        Formatted string like "148.75°"
    """
    return f"{fmt_angle(rad)}°"
