"""Tests for logging utilities."""

import logging
from pathlib import Path

import pytest

from fixpoint_bounds.logging import PACKAGE_LOGGER
from fixpoint_bounds.logging import clear_logger_cache
from fixpoint_bounds.logging import get_logger
from fixpoint_bounds.logging import setup_logging


class TestLogging:
    """Test logging utilities."""

    def teardown_method(self) -> None:
        """Clear logger cache after each test."""
        clear_logger_cache()

    def test_get_logger_singleton(self) -> None:
        """Test that get_logger returns the same instance for same name."""
        logger1 = get_logger("test.module")
        logger2 = get_logger("test.module")

        assert logger1 is logger2
        assert logger1.name == "test.module"

    def test_get_logger_different_names(self) -> None:
        """Test that different names return different loggers."""
        logger1 = get_logger("test.module1")
        logger2 = get_logger("test.module2")

        assert logger1 is not logger2
        assert logger1.name != logger2.name

    def test_get_logger_no_duplicate_handlers(self) -> None:
        """Test that multiple calls don't add duplicate handlers."""
        logger1 = get_logger("test.module")
        initial_handler_count = len(logger1.handlers)

        logger2 = get_logger("test.module")

        assert logger1 is logger2
        assert len(logger2.handlers) == initial_handler_count
        assert initial_handler_count > 0

    def test_get_logger_with_file(self, tmp_path: Path) -> None:
        """Test logger with file output."""
        log_file = tmp_path / "logs" / "test.log"
        logger = get_logger("test.module", log_file=log_file)

        logger.warning("Refuted %d profiles", 4)
        for handler in logger.handlers:
            handler.flush()

        content = log_file.read_text()
        assert "Refuted 4 profiles" in content
        assert "test.module" in content

    def test_get_logger_levels(self) -> None:
        """Test different logging levels."""
        assert get_logger("test.debug", level="DEBUG").level == logging.DEBUG
        assert get_logger("test.info", level="INFO").level == logging.INFO
        assert get_logger("test.warning", level="WARNING").level == logging.WARNING

    def test_default_level_from_settings(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """FIXPOINT_LOG_LEVEL is the fallback level."""
        from fixpoint_bounds.settings import get_settings

        monkeypatch.setenv("FIXPOINT_LOG_LEVEL", "ERROR")
        get_settings.cache_clear()
        assert get_logger("test.from_env").level == logging.ERROR

    def test_no_propagation(self) -> None:
        """Test that loggers don't propagate to prevent duplicates."""
        assert get_logger("test.module").propagate is False

    def test_plain_console_writes_stderr(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Console logging never touches stdout."""
        logger = get_logger("test.plain", level="INFO", rich_console=False)

        logger.info("Loaded CP5")

        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Loaded CP5" in captured.err

    def test_setup_logging_reconfigures_package(self) -> None:
        """setup_logging reaches module loggers handed out earlier."""
        module_logger = get_logger(f"{PACKAGE_LOGGER}.certifier")
        assert module_logger.level == logging.WARNING

        logger = setup_logging(level="DEBUG")

        assert logger.name == PACKAGE_LOGGER
        assert logger.level == logging.DEBUG
        assert not logger.propagate
        assert module_logger.level == logging.DEBUG

    def test_clear_cache(self) -> None:
        """Test that cache clearing works."""
        logger1 = get_logger("test.module")
        clear_logger_cache()

        assert logger1.handlers == []
        logger2 = get_logger("test.module")
        assert logger1 is logger2
        assert logger2.handlers
