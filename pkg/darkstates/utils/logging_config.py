"""
Structured logging setup

All log output goes to stderr (or a file) so that stdout carries only the
JSON payloads emitted by the CLI.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import IO, Any, Optional

import structlog

from darkstates.core.config import LoggingConfig

_log_file: Optional[IO[str]] = None


def _stderr_logger(*_: Any) -> structlog.PrintLogger:
    # sys.stderr is looked up per call so redirected streams are honoured
    return structlog.PrintLogger(file=sys.stderr)


def setup_logging(
    level: str = "INFO",
    fmt: str = "structured",
    output: str = "console",
    file_path: Optional[str] = None,
) -> None:
    """Configure structlog for the whole process"""
    global _log_file

    factory: Any = _stderr_logger
    if output == "file" and file_path:
        path = Path(file_path).expanduser()
        path.parent.mkdir(parents=True, exist_ok=True)
        if _log_file is not None:
            _log_file.close()
        _log_file = path.open("a", encoding="utf-8")
        factory = structlog.PrintLoggerFactory(file=_log_file)

    renderer: Any
    if fmt == "plain":
        renderer = structlog.dev.ConsoleRenderer(colors=False)
    else:
        renderer = structlog.processors.JSONRenderer(sort_keys=True)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            logging.getLevelName(level.upper())
        ),
        logger_factory=factory,
        cache_logger_on_first_use=False,
    )


def configure_from(config: LoggingConfig) -> None:
    setup_logging(config.level, config.format, config.output, config.file_path)


def get_logger(name: str) -> Any:
    return structlog.get_logger(name)
