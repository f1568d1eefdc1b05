"""Logging setup and formatting helpers."""

from .log_formats import MESSAGE_ONLY, RUN_CONTEXT
from .logging_context import LoggingFormatContext
from .setup_logging import setup_logging
