"""Storage module for custom logging formats."""

from logging import Formatter


MESSAGE_ONLY = Formatter('%(message)s')

# Used for the per-interval progress lines of a single run
RUN_CONTEXT = Formatter('%(asctime)s %(levelname)s [%(processName)s] %(message)s')
