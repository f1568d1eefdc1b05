"""One (method, seed) experiment run."""

import logging

from .learners import Learner, make_learner
from .simulation import run_interval
from .world import World, build_world
from ..classifier import evaluate
from ..feature_store import FeatureDataset, LabeledBatch
from ..navigation import AgentState
from ..run_stats import MetricsTimeline, open_exploration, open_training
from ...config.models import LabelMode, MethodSpec, TrainConfig, WorldConfig
from ...util.seeding import Stream, make_rng

logger = logging.getLogger(__name__)


def _train(learner: Learner, batch: LabeledBatch, timeline: MetricsTimeline,
           increment: int) -> int:
    with open_training(timeline, increment) as record:
        learner.learn(batch, increment)
        record.train_points = learner.train_points
    return record.millis


def run_experiment(dataset: FeatureDataset,
                   cfg: WorldConfig,
                   method: MethodSpec,
                   n_p: int,
                   distance_threshold: float,
                   train_cfg: TrainConfig,
                   seed: int,
                   diagonal_covariance: bool = False,
                   ) -> MetricsTimeline:
    """
    Run the exploration and learning protocol for one method and seed.

    The learner is evaluated at increment 0, then every interval explores,
    hands the harvested batch to the learner (which retrains and re-ranks
    the classes), restocks the world and, every ``eval_every`` intervals,
    evaluates over all environment classes.

    Parameters
    ----------
    dataset : FeatureDataset
        Feature vectors filling the world and the test set.
    cfg : WorldConfig
        Environment and loop settings.
    method : MethodSpec
        Learner kind, ACS policy and force split.
    n_p : int
        Pseudo-exemplars per class (FIASco).
    distance_threshold : float
        Cluster distance threshold D (FIASco).
    train_cfg : TrainConfig
        Classifier settings.
    seed : int
        Run seed.
    diagonal_covariance : bool, default False
        Track only cluster covariance diagonals (FIASco).

    Returns
    -------
    MetricsTimeline
        Counts are deterministic for a fixed seed; timings are not.
    """
    world: World = build_world(dataset, cfg, seed)
    learner = make_learner(method, world.env_classes, dataset.dim, train_cfg, seed,
                           distance_threshold, n_p, diagonal_covariance)
    agent = AgentState.at(world.start)
    rng = make_rng(seed, Stream.ESCAPE)
    timeline = MetricsTimeline(method.name, seed)
    harvested = 0
    train_millis = 0

    if cfg.label_mode == LabelMode.PREDICTED:
        bootstrap = world.take_bootstrap(cfg.bootstrap_per_class)
        harvested += len(bootstrap)
        train_millis += _train(learner, bootstrap, timeline, 0)
        world.restock()
        logger.info(f'Bootstrapped {method.name} on {len(bootstrap)} examples')

    timeline.add_evaluation(0, evaluate(learner.classifier, dataset.test, world.env_classes),
                            learner.train_points, train_millis, harvested)
    train_millis = 0

    for increment in range(1, cfg.num_intervals + 1):
        try:
            with open_exploration(timeline, increment) as exploration:
                batch = run_interval(world, agent, learner, cfg, rng)
                exploration.harvested = len(batch)
            if len(batch):
                harvested += len(batch)
                train_millis += _train(learner, batch, timeline, increment)
            world.restock()
            if increment % cfg.eval_every == 0:
                accuracy = evaluate(learner.classifier, dataset.test, world.env_classes)
                row = timeline.add_evaluation(increment, accuracy, learner.train_points,
                                              train_millis, harvested)
                train_millis = 0
                logger.info(f'{method.name} seed {seed} increment {increment}: '
                            f'accuracy {row.accuracy:.4f}, train points {row.train_points}, '
                            f'harvested {row.harvested}')
        except Exception as err:
            raise RuntimeError(f'Increment {increment} failed: {err}') from err
    return timeline
