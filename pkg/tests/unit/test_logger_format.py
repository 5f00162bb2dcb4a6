import logging
import math

from foldfront.engine.logger import format_angle_for_logging, get_logger, set_level


class TestLoggerFormat:
    """Test logger setup and angle formatting for logging."""

    def test_format_angle_for_logging(self):
        assert format_angle_for_logging(math.radians(148.75)) == "148.75°"
        assert format_angle_for_logging(math.pi) == "180°"
        assert format_angle_for_logging(-0.0) == "0°"

    def test_get_logger_adds_one_handler(self):
        logger = get_logger("foldfront.test_handlers")
        again = get_logger("foldfront.test_handlers")
        assert logger is again
        assert len(logger.handlers) == 1
        assert logger.handlers[0].formatter._fmt == "[%(levelname)s] %(name)s: %(message)s"

    def test_set_level_reaches_foldfront_loggers(self):
        logger = get_logger("foldfront.test_levels")
        other = logging.getLogger("elsewhere.test_levels")
        other.setLevel(logging.ERROR)
        set_level(logging.DEBUG)
        try:
            assert logger.level == logging.DEBUG
            assert other.level == logging.ERROR
        finally:
            set_level(logging.WARNING)
