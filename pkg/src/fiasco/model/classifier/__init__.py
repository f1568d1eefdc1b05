"""One-vs-rest linear classifier (hinge loss, SGD)."""

from .linear_classifier import LinearClassifier, evaluate, predict
from .sgd import fit, hinge_objective, stability_bound, train
from .training_set import build_training_set
