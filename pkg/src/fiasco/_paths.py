"""
Module for all relative path constants.

These are the paths as they are expected to be present in the directory
from which experiments are launched.
"""

from pathlib import Path

# Config file used by setup_logging
LOG_CONFIG_PATH = Path('./config/logging.yml')

# Default directory for reports; log files are written inside it
DEFAULT_OUT_DIR = Path('./results')

# Log files are written to this subdirectory of the output directory
LOG_SUBDIR = 'logs'
