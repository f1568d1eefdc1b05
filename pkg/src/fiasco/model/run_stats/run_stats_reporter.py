"""Log an end-of-run summary of a report."""

from __future__ import annotations

import datetime
import logging
from typing import TYPE_CHECKING

import numpy as np

from ...log import MESSAGE_ONLY, LoggingFormatContext

if TYPE_CHECKING:
    from .report import Report

logger = logging.getLogger(__name__)


class ReportLogger:
    """
    Logger of a report's summary table.

    Parameters
    ----------
    report : Report
        Report to summarize.
    """

    def __init__(self, report: Report):
        self.report = report

    def log_summary(self) -> None:
        """Log accuracy and cost per method."""
        with LoggingFormatContext(logger, MESSAGE_ONLY):
            logger.info('')
            logger.info(f'Methods: {len(self.report.methods)}, '
                        f'seeds: {len(self.report.spec.seeds)}')
            for method in self.report.methods:
                self._log_method(method)
            logger.info('')

    def _log_method(self, method: str) -> None:
        timelines = self.report.timelines_of(method)
        avg = np.array([t.avg_inc_accuracy for t in timelines])
        final = np.array([t.rows[-1].accuracy for t in timelines])
        train_time = sum((t.train_time for t in timelines), datetime.timedelta())
        explore_time = sum((t.exploration_time for t in timelines), datetime.timedelta())
        logger.info(f'{method}:')
        logger.info(f'\tAverage incremental accuracy: {avg.mean():.4f} ± {avg.std():.4f}')
        logger.info(f'\tFinal accuracy: {final.mean():.4f}')
        logger.info(f'\tTrain time: {train_time} / exploration time: {explore_time}')
