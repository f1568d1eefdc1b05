"""Run configuration package."""

from .resolve import resolve_run_spec, parse_seeds
