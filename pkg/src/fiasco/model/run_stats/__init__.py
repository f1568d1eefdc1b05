"""Per-run metrics timeline, cost tracking and report emission."""

from .run_stats import (ExplorationRecord, MetricsRow, MetricsTimeline, TrainingRecord,
                        METRICS_COLUMNS, open_exploration, open_training)
from .report import Report, SUMMARY_COLUMNS, emit_report
from .run_stats_reporter import ReportLogger
