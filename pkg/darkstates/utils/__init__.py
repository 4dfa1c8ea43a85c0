"""Shared utilities"""

from darkstates.utils.logging_config import configure_from, get_logger, setup_logging

__all__ = ["configure_from", "get_logger", "setup_logging"]
