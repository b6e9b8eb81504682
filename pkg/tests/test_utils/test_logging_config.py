"""
Tests for logging setup: levels, stderr console output and the rotating log file.
"""

import json
import logging
from logging.handlers import RotatingFileHandler

import pytest

from src.cli.main import EXIT_OK, main
from src.utils.logging_config import get_log_level, get_logger, setup_logging


@pytest.fixture(autouse=True)
def reset_root_logger():
    yield
    root = logging.getLogger()
    root.handlers.clear()
    root.setLevel(logging.WARNING)


class TestGetLogLevel:
    """Tests for LOG_LEVEL parsing."""

    def test_default_is_warning(self, monkeypatch):
        """Test an unset LOG_LEVEL keeps reports quiet."""
        monkeypatch.delenv("LOG_LEVEL", raising=False)
        assert get_log_level() == logging.WARNING

    @pytest.mark.parametrize(
        "value, level",
        [("debug", logging.DEBUG), ("Info", logging.INFO), ("WARN", logging.WARNING), ("error", logging.ERROR)],
    )
    def test_names(self, monkeypatch, value, level):
        """Test level names are case-insensitive and WARN is accepted."""
        monkeypatch.setenv("LOG_LEVEL", value)
        assert get_log_level() == level

    def test_unknown_name_falls_back_to_info(self, monkeypatch):
        """Test an unknown name gives INFO."""
        monkeypatch.setenv("LOG_LEVEL", "chatty")
        assert get_log_level() == logging.INFO


class TestConsoleOutput:
    """Tests that log lines go to stderr and never to stdout."""

    def test_messages_go_to_stderr(self, capsys):
        """Test a module warning lands on stderr only."""
        setup_logging(level=logging.INFO)
        get_logger("src.classify.classifier").warning("Routes disagree for x+1 at n=2")

        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Routes disagree" in captured.err
        assert "src.classify.classifier" in captured.err

    def test_level_filters_console(self, capsys):
        """Test messages below the configured level are dropped."""
        setup_logging(level=logging.WARNING)
        get_logger("src.repfit").info("Fitted 60 atoms")
        assert capsys.readouterr().err == ""

    def test_setup_replaces_handlers(self):
        """Test repeated setup leaves a single console handler."""
        setup_logging()
        setup_logging()
        assert len(logging.getLogger().handlers) == 1

    def test_verbose_json_run_keeps_stdout_clean(self, capsys, monkeypatch):
        """Test -v logs to stderr while stdout stays a parseable report."""
        monkeypatch.setenv("LOG_LEVEL", "WARNING")
        code = main(["classify", "--symbol", "x+1", "--order", "4", "--json", "-v"])

        captured = capsys.readouterr()
        assert code == EXIT_OK
        assert json.loads(captured.out)["classification"]["symbol"] == "x + 1"
        assert "Classified x + 1" in captured.err


class TestLogFile:
    """Tests for the optional rotating log file."""

    def test_file_handler_rotates(self, tmp_path):
        """Test the file handler is rotating with the given limits."""
        log_file = tmp_path / "logs" / "wtsa.log"
        setup_logging(level=logging.INFO, log_file=str(log_file), max_bytes=1024, backup_count=2)

        handlers = [h for h in logging.getLogger().handlers if isinstance(h, RotatingFileHandler)]
        assert len(handlers) == 1
        assert handlers[0].maxBytes == 1024
        assert handlers[0].backupCount == 2
        assert log_file.parent.is_dir()

    def test_file_receives_formatted_lines(self, tmp_path):
        """Test file lines carry level, logger name and message."""
        log_file = tmp_path / "wtsa.log"
        setup_logging(level=logging.INFO, log_file=str(log_file))
        get_logger("src.bridge").info("Built 16 weights")
        get_logger("src.bridge").debug("hidden")

        content = log_file.read_text()
        assert "INFO" in content
        assert "src.bridge | Built 16 weights" in content
        assert "hidden" not in content
