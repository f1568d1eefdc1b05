"""Few-shot incremental learning with active class selection."""

from ._version import __version__
from .harness import Harness, run

__all__ = ['__version__', 'Harness', 'run']
