"""Experiment harness: run every (method, seed) pair of a spec."""

import logging
from multiprocessing import Pool
from typing import List, Tuple

from .config.models import MethodSpec, RunSpec
from .log import RUN_CONTEXT, LoggingFormatContext
from .model.feature_store import FeatureDataset, load_source
from .model.run_stats import MetricsTimeline, Report, ReportLogger, emit_report
from .model.world import build_world, run_experiment

logger = logging.getLogger(__name__)

_Task = Tuple[FeatureDataset, RunSpec, MethodSpec, int]


def _run_task(task: _Task) -> MetricsTimeline:
    dataset, spec, method, seed = task
    try:
        return run_experiment(dataset, spec.world, method, spec.n_p, spec.distance_threshold,
                              spec.train, seed, spec.diagonal_covariance)
    except Exception as err:
        raise RuntimeError(f'Method {method.name}, seed {seed}: {err}') from err


class Harness:
    """
    Coordinator of the runs described by a RunSpec.

    Parameters
    ----------
    spec : RunSpec
        Fully resolved run specification.
    """

    def __init__(self, spec: RunSpec):
        self.spec = spec
        self._dataset = None

    @property
    def dataset(self) -> FeatureDataset:
        """The dataset shared by all runs, loaded on first use."""
        if self._dataset is None:
            self._dataset = load_source(self.spec.dataset)
            logger.info(f'Dataset: {self.dataset.class_count} classes, dim {self.dataset.dim}, '
                        f'{len(self.dataset.train)} train / {len(self.dataset.test)} test')
        return self._dataset

    def tasks(self) -> List[_Task]:
        """One task per (method, seed), methods outermost."""
        return [(self.dataset, self.spec, method, seed)
                for method in self.spec.methods for seed in self.spec.seeds]

    def run(self) -> Report:
        """
        Execute all runs and collect their timelines.

        Runs are spread over ``spec.workers`` processes when more than one
        worker is configured; results are identical either way.

        Returns
        -------
        Report
        """
        tasks = self.tasks()
        logger.info(f'Starting {len(tasks)} runs with {self.spec.workers} worker(s)')
        if self.spec.workers > 1:
            # worker log lines carry the process name
            with LoggingFormatContext(logger, RUN_CONTEXT), Pool(self.spec.workers) as pool:
                timelines = pool.map(_run_task, tasks)
        else:
            timelines = [_run_task(task) for task in tasks]

        report = Report(self.spec)
        for (_, _, method, seed), timeline in zip(tasks, timelines):
            report.timelines[(method.name, seed)] = timeline
        for seed in self.spec.seeds:
            report.world_layouts[seed] = build_world(self.dataset, self.spec.world, seed).to_dict()
        return report


def run(spec: RunSpec) -> Report:
    """
    Run a spec, write its report files and log a summary.

    Parameters
    ----------
    spec : RunSpec
        Fully resolved run specification.

    Returns
    -------
    Report
    """
    report = Harness(spec).run()
    emit_report(report, spec.out_dir)
    ReportLogger(report).log_summary()
    return report
