"""Tests for logging setup."""

import logging

from semibandit.utils.logger import get_logger, setup_logger


def test_setup_logger_with_file(tmp_path):
    log_file = tmp_path / "run.log"
    logger = setup_logger(level="debug", log_file=str(log_file))
    assert logger.level == logging.DEBUG
    assert len(logger.handlers) == 2
    get_logger("semibandit.harness.runner").info("hello from the runner")
    for handler in logger.handlers:
        handler.flush()
    assert "semibandit.harness.runner - INFO - hello from the runner" in log_file.read_text()
    for handler in logger.handlers:
        handler.close()


def test_setup_logger_replaces_handlers():
    setup_logger()
    logger = setup_logger(level="nonsense")
    assert len(logger.handlers) == 1
    assert logger.level == logging.INFO


def test_get_logger_nests_under_package():
    assert get_logger().name == "semibandit"
    assert get_logger("semibandit.envs.gaps").name == "semibandit.envs.gaps"
    assert get_logger("scripts.sweep").name == "semibandit.scripts.sweep"


def test_numeric_level_and_no_propagation():
    logger = setup_logger(level=logging.WARNING)
    assert logger.level == logging.WARNING
    assert logger.propagate is False
