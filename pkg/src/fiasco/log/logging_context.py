"""Logging format context operations."""

from logging import Formatter, Logger
from typing import Dict, Optional


class LoggingFormatContext:
    """
    Context manager for a different logging format.

    Use in a 'with' statement to temporarily use a different logging
    format for the handlers currently attached to a logger. The original
    formatter of every handler is put back on exit.

    Parameters
    ----------
    logger : logging.Logger
        The logger instance whose handlers will temporarily be modified.
        When the logger has no handlers of its own (e.g. a module logger
        that propagates), the root logger's handlers are used.
    new_formatter: logging.Formatter
        Logging Formatter instance that will be applied to the handlers.
    """

    def __init__(self, logger: Logger, new_formatter: Formatter):
        self.logger = logger
        self.new_formatter = new_formatter
        self._old_formatters: Dict[int, Optional[Formatter]] = {}

    def _handlers(self):
        logger = self.logger
        while logger is not None and not logger.handlers and logger.propagate:
            logger = logger.parent
        return [] if logger is None else list(logger.handlers)

    def __enter__(self):
        """Set new formatter for current logging handlers."""
        for handler in self._handlers():
            self._old_formatters[id(handler)] = handler.formatter
            handler.setFormatter(self.new_formatter)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """Restore original formatters."""
        for handler in self._handlers():
            if id(handler) in self._old_formatters:
                handler.setFormatter(self._old_formatters[id(handler)])
        self._old_formatters.clear()
