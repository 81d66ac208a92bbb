from __future__ import annotations

import logging

from wkqfa.logging_config import configure_logging, resolve_log_dir, shutdown_logging


def test_configure_logging_creates_file_and_writes_records(tmp_path) -> None:
    ctx = configure_logging(verbose=True, command="test", log_dir=tmp_path / "logs")
    logger = logging.getLogger("wkqfa.test")
    logger.debug("hello from test")
    shutdown_logging()

    content = ctx.log_path.read_text(encoding="utf-8")

    assert ctx.log_path.exists()
    assert "hello from test" in content
    assert "[wkqfa.test]" in content


def test_non_verbose_logging_drops_debug_records(tmp_path) -> None:
    ctx = configure_logging(verbose=False, command="test", log_dir=tmp_path / "logs")
    logger = logging.getLogger("wkqfa.test")
    logger.debug("hidden detail")
    logger.info("visible summary")
    shutdown_logging()

    content = ctx.log_path.read_text(encoding="utf-8")

    assert "hidden detail" not in content
    assert "visible summary" in content


def test_startup_record_names_the_command(tmp_path) -> None:
    ctx = configure_logging(verbose=False, command="lang", log_dir=tmp_path)
    shutdown_logging()

    first = ctx.log_path.read_text(encoding="utf-8").splitlines()[0]

    assert first.endswith(": lang")
    assert "INFO [wkqfa]" in first


def test_log_dir_can_come_from_the_environment(tmp_path, monkeypatch) -> None:
    monkeypatch.setenv("WKQFA_LOG_DIR", str(tmp_path / "env-logs"))

    assert resolve_log_dir() == (tmp_path / "env-logs").resolve()
    assert resolve_log_dir(tmp_path / "explicit") == (tmp_path / "explicit").resolve()
