"""Simulated environment, learners and the experiment protocol."""

from .layout import Building, build_layout, default_buildings, lattice_shape
from .world import Container, Sighting, World, build_world, distance
from .learners import BatchLearner, FiascoLearner, Learner, make_learner
from .simulation import run_interval
from .experiment import run_experiment
