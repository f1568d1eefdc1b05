"""Seed derivation helpers."""

from enum import IntEnum

import numpy as np


class Stream(IntEnum):
    """Independent random streams used within one experiment run."""

    WORLD_LAYOUT = 1
    HARVEST = 2
    ESCAPE = 3
    RANKING = 4
    PSEUDO_EXEMPLARS = 5
    TRAINING = 6
    RELOCATION = 7
    REDISTRICT = 8


def derive_seed(seed: int, stream: int, *extra: int) -> int:
    """
    Derive a reproducible 32-bit seed for a named stream.

    Parameters
    ----------
    seed : int
        Run seed.
    stream : int
        Stream identifier, usually a ``Stream`` member.
    *extra : int
        Further integers (e.g. the increment) mixed into the seed.

    Returns
    -------
    int
        Seed in [0, 2**32).
    """
    sequence = np.random.SeedSequence([int(seed), int(stream), *map(int, extra)])
    return int(sequence.generate_state(1)[0])


def make_rng(seed: int, stream: int, *extra: int) -> np.random.Generator:
    """Return a numpy Generator for the derived seed."""
    return np.random.default_rng(derive_seed(seed, stream, *extra))
