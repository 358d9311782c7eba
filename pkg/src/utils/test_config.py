import logging

from .config import default_jobs, log_level


def test_default_jobs(monkeypatch):
    # (environment value, expected jobs, test name)
    test_cases = [
        (None, 1, "Unset"),
        ("4", 4, "Four"),
        ("", 1, "Empty"),
        ("many", 1, "Not a number"),
        ("0", 1, "Zero"),
        ("-2", 1, "Negative"),
    ]
    for value, expected, test_name in test_cases:
        if value is None:
            monkeypatch.delenv("PERMLAB_JOBS", raising=False)
        else:
            monkeypatch.setenv("PERMLAB_JOBS", value)
        assert default_jobs() == expected, f"Test failed: {test_name}"


def test_log_level(monkeypatch):
    test_cases = [
        (None, logging.WARNING, "Unset"),
        ("debug", logging.DEBUG, "Lowercase name"),
        ("INFO", logging.INFO, "Uppercase name"),
        ("LOUD", logging.WARNING, "Unknown name"),
    ]
    for value, expected, test_name in test_cases:
        if value is None:
            monkeypatch.delenv("PERMLAB_LOG_LEVEL", raising=False)
        else:
            monkeypatch.setenv("PERMLAB_LOG_LEVEL", value)
        assert log_level() == expected, f"Test failed: {test_name}"
