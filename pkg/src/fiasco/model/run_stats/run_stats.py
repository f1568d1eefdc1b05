"""Metrics timeline and train/exploration cost records of one run."""

import datetime
import logging
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import ContextManager, List, Optional

import pandas as pd

logger = logging.getLogger(__name__)

METRICS_COLUMNS = ['increment', 'accuracy', 'avg_inc_accuracy',
                   'train_points', 'train_millis', 'harvested']


@dataclass
class _TimedRecord:
    increment: int = 0
    start: datetime.datetime = field(default_factory=datetime.datetime.now)
    end: Optional[datetime.datetime] = None

    @property
    def duration(self) -> Optional[datetime.timedelta]:
        """Time between start and end."""
        if self.end is not None:
            return self.end - self.start

    @property
    def millis(self) -> int:
        """Duration in whole milliseconds (0 while open)."""
        if self.duration is None:
            return 0
        return int(self.duration.total_seconds() * 1000)

    def end_now(self):
        """Set current time as the end time."""
        self.end = datetime.datetime.now()


@dataclass
class TrainingRecord(_TimedRecord):
    """Wall-clock cost of one classifier retrain."""

    train_points: int = 0


@dataclass
class ExplorationRecord(_TimedRecord):
    """Wall-clock cost of one exploration interval."""

    harvested: int = 0


@dataclass(frozen=True)
class MetricsRow:
    """One evaluation point of a run."""

    increment: int
    accuracy: float
    avg_inc_accuracy: float
    train_points: int
    train_millis: int
    harvested: int


class MetricsTimeline:
    """
    Evaluation rows and cost records of one (method, seed) run.

    Attributes
    ----------
    method : str
        Method name.
    seed : int
        Run seed.
    rows : list of MetricsRow
        Evaluations in increment order.
    trainings : list of TrainingRecord
        Every retrain of the run.
    explorations : list of ExplorationRecord
        Every exploration interval of the run.
    """

    def __init__(self, method: str, seed: int):
        self.method = method
        self.seed = seed
        self.rows: List[MetricsRow] = []
        self.trainings: List[TrainingRecord] = []
        self.explorations: List[ExplorationRecord] = []

    def __len__(self) -> int:
        return len(self.rows)

    def add_evaluation(self, increment: int, accuracy: float, train_points: int,
                       train_millis: int, harvested: int) -> MetricsRow:
        """
        Append a row; its average incremental accuracy is the running mean.

        Parameters
        ----------
        increment : int
            Intervals completed.
        accuracy : float
            Test accuracy over all environment classes.
        train_points : int
            Size of the learner's latest training set.
        train_millis : int
            Training time since the previous row.
        harvested : int
            Examples delivered to the learner so far.

        Returns
        -------
        MetricsRow
        """
        accuracies = [r.accuracy for r in self.rows] + [accuracy]
        row = MetricsRow(increment, accuracy, sum(accuracies) / len(accuracies),
                         train_points, train_millis, harvested)
        self.rows.append(row)
        return row

    @property
    def avg_inc_accuracy(self) -> float:
        """Average incremental accuracy of the whole run."""
        return self.rows[-1].avg_inc_accuracy

    @property
    def train_time(self) -> datetime.timedelta:
        return sum((t.duration for t in self.trainings if t.end), datetime.timedelta())

    @property
    def exploration_time(self) -> datetime.timedelta:
        return sum((e.duration for e in self.explorations if e.end), datetime.timedelta())

    def to_df(self) -> pd.DataFrame:
        """pandas.DataFrame with the metrics CSV columns."""
        return pd.DataFrame([asdict(r) for r in self.rows], columns=METRICS_COLUMNS)


@contextmanager
def open_training(timeline: MetricsTimeline, increment: int) -> ContextManager[TrainingRecord]:
    """
    Time a retrain and add it to the timeline.

    Parameters
    ----------
    timeline : MetricsTimeline
        Timeline collecting the record.
    increment : int
        Current increment.

    Yields
    ------
    TrainingRecord
        Record to fill in with the training set size.
    """
    record = TrainingRecord(increment=increment)
    try:
        yield record
    finally:
        if record.end is None:
            record.end_now()
        timeline.trainings.append(record)


@contextmanager
def open_exploration(timeline: MetricsTimeline, increment: int
                     ) -> ContextManager[ExplorationRecord]:
    """Time an exploration interval and add it to the timeline."""
    record = ExplorationRecord(increment=increment)
    try:
        yield record
    finally:
        if record.end is None:
            record.end_now()
        timeline.explorations.append(record)
