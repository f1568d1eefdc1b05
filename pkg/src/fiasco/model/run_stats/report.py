"""Aggregate run timelines into a report and write it to disk."""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Tuple

import pandas as pd

from .run_stats import METRICS_COLUMNS, MetricsTimeline
from ...config.models import RunSpec
from ...util.io import ensure_writable_dir, write_json_file

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ['method', 'avg_inc_accuracy', 'final_accuracy', 'final_train_points',
                   'performance_decay', 'avg_train_millis']


@dataclass
class Report:
    """
    Timelines of every (method, seed) run of a spec.

    Attributes
    ----------
    spec : RunSpec
        Fully resolved spec that produced the runs.
    timelines : dict
        MetricsTimeline per (method name, seed).
    world_layouts : dict
        Layout dump per seed.
    """

    spec: RunSpec
    timelines: Dict[Tuple[str, int], MetricsTimeline] = field(default_factory=dict)
    world_layouts: Dict[int, Dict] = field(default_factory=dict)

    @property
    def methods(self) -> List[str]:
        """Method names in spec order."""
        return [m.name for m in self.spec.methods]

    def timelines_of(self, method: str) -> List[MetricsTimeline]:
        """Timelines of a method in seed order."""
        return [self.timelines[(method, seed)] for seed in self.spec.seeds]

    def seed_averaged(self, method: str) -> pd.DataFrame:
        """
        Timeline averaged over seeds, per increment.

        Parameters
        ----------
        method : str
            Method name.

        Returns
        -------
        pandas.DataFrame
            Metrics CSV columns; every column except ``increment`` is the
            mean over seeds.
        """
        frames = pd.concat([t.to_df() for t in self.timelines_of(method)], ignore_index=True)
        averaged = frames.groupby('increment', as_index=False, sort=True).mean()
        return averaged[METRICS_COLUMNS]

    def summary_df(self) -> pd.DataFrame:
        """One summary row per method, recomputable from the metrics files."""
        records = []
        for method in self.methods:
            per_seed = []
            for timeline in self.timelines_of(method):
                df = timeline.to_df()
                trained = df.loc[df['increment'] > 0, 'train_millis']
                per_seed.append({
                    'avg_inc_accuracy': df['avg_inc_accuracy'].iloc[-1],
                    'final_accuracy': df['accuracy'].iloc[-1],
                    'final_train_points': df['train_points'].iloc[-1],
                    'performance_decay': df['accuracy'].iloc[0] - df['accuracy'].iloc[-1],
                    'avg_train_millis': trained.mean() if len(trained) else 0.0,
                })
            means = pd.DataFrame(per_seed).mean()
            records.append({'method': method, **means.to_dict()})
        return pd.DataFrame(records, columns=SUMMARY_COLUMNS)


def emit_report(report: Report, out_dir: Path) -> List[Path]:
    """
    Write all report files.

    Writes ``metrics_<method>_<seed>.csv`` per run,
    ``timeline_<method>.csv`` per method, ``summary.csv``,
    ``world_<seed>.json`` per seed and ``config.json`` holding the
    resolved spec.

    Parameters
    ----------
    report : Report
        Complete report.
    out_dir : pathlib.Path
        Output directory, created if missing.

    Returns
    -------
    list of pathlib.Path
        Files written.
    """
    ensure_writable_dir(out_dir)
    written = []
    for (method, seed), timeline in sorted(report.timelines.items()):
        path = out_dir / f'metrics_{method}_{seed}.csv'
        timeline.to_df().to_csv(path, index=False)
        written.append(path)
    for method in report.methods:
        path = out_dir / f'timeline_{method}.csv'
        report.seed_averaged(method).to_csv(path, index=False)
        written.append(path)

    path = out_dir / 'summary.csv'
    report.summary_df().to_csv(path, index=False)
    written.append(path)

    for seed, layout in sorted(report.world_layouts.items()):
        path = out_dir / f'world_{seed}.json'
        write_json_file(layout, path)
        written.append(path)

    path = out_dir / 'config.json'
    write_json_file(json.loads(report.spec.json()), path)
    written.append(path)
    logger.info(f'Wrote {len(written)} report files to {out_dir}')
    return written
