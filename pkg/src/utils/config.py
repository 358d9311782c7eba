import logging
import os

_logger = logging.getLogger(__name__)

JOBS_ENV = "PERMLAB_JOBS"
LOG_LEVEL_ENV = "PERMLAB_LOG_LEVEL"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def default_jobs() -> int:
    """
    Worker count from PERMLAB_JOBS.

    Returns:
        int: A positive integer; unset, non-numeric or non-positive values give 1.
    """
    raw = os.environ.get(JOBS_ENV)
    if raw is None or raw.strip() == "":
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        _logger.warning("%s=%r is not an integer, using 1", JOBS_ENV, raw)
        return 1
    if jobs < 1:
        _logger.warning("%s=%r is not positive, using 1", JOBS_ENV, raw)
        return 1
    return jobs


def log_level() -> int:
    name = os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.WARNING


def configure_logging() -> None:
    # stdout carries command output only
    logging.basicConfig(level=log_level(), format=LOG_FORMAT)
