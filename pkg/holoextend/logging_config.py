import logging
import sys
from pathlib import Path
from typing import Optional

# Global variables to store the logging configuration
_logging_initialized = False
_log_filename: Optional[Path] = None

DEFAULT_LEVEL = "WARNING"
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(name)s - %(message)s"


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None, force: bool = False) -> Optional[Path]:
    """Set up logging to standard error and, when requested, to a file.

    The library is silent below WARNING by default; the CLI reconfigures with
    ``force=True`` once the ``--log-level`` and ``--log-file`` flags are known.
    """
    global _logging_initialized, _log_filename

    if _logging_initialized and not force:
        return _log_filename

    level_name = (level or DEFAULT_LEVEL).upper()
    numeric_level = getattr(logging, level_name, None)
    if not isinstance(numeric_level, int):
        raise ValueError(f"Unknown log level: {level}")

    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]

    _log_filename = None
    if log_file:
        _log_filename = Path(log_file)
        _log_filename.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(_log_filename, mode="w", encoding="utf-8"))

    logging.basicConfig(level=numeric_level, format=LOG_FORMAT, handlers=handlers, force=True)
    logging.getLogger("holoextend").setLevel(numeric_level)

    _logging_initialized = True

    logger = logging.getLogger(__name__)
    if _log_filename is not None:
        logger.info(f"📝 Logging initialized at {level_name} - writing to {_log_filename}")
    else:
        logger.debug(f"📝 Logging initialized at {level_name}")

    return _log_filename


def get_logger(name=None):
    """Get a logger with the centralized configuration."""
    if not _logging_initialized:
        setup_logging()

    if name is None:
        name = __name__

    return logging.getLogger(name)
