"""Command-line interface."""

import json
import logging
from pathlib import Path
from typing import Dict, Optional, Tuple

import click
from pydantic import ValidationError

from . import harness
from ._version import __version__
from .config import parse_seeds, resolve_run_spec
from .config.models import (PRESETS, AcsPolicy, EscapeMode, ForceSplit, LabelMode,
                            MemoryTrainSet, SynthConfig)
from .log import setup_logging
from .model.feature_store import gen_synthetic, write_class_names, write_dataset

logger = logging.getLogger(__name__)


def _choice(enum) -> click.Choice:
    return click.Choice([member.value for member in enum])


def _parse_synth(params: Tuple[str, ...]) -> Dict[str, str]:
    settings = {}
    for param in params:
        for item in param.split(','):
            if not item.strip():
                continue
            key, sep, value = item.partition('=')
            if not sep:
                raise click.BadParameter(f'expected key=value, got "{item}"',
                                         param_hint='--synth')
            settings[key.strip()] = value.strip()
    return settings


@click.group()
@click.version_option(__version__)
def main():
    """Few-shot incremental learning with active class selection in a gridworld."""


def _resolve(config: Optional[Path], preset: Optional[str], **overrides):
    try:
        if overrides.get('seeds') is not None:
            overrides['seeds'] = parse_seeds(overrides['seeds'])
        return resolve_run_spec(config, preset, overrides)
    except (ValidationError, ValueError, FileNotFoundError) as e:
        raise click.ClickException(str(e)) from e


_spec_options = [
    click.option('--config', '-c', type=click.Path(exists=True, dir_okay=False),
                 default=None, help='JSON or YAML run config file.'),
    click.option('--preset', type=click.Choice(sorted(PRESETS)), default=None,
                 help='Benchmark preset for the distance threshold and pseudo-exemplars.'),
    click.option('--acs', type=_choice(AcsPolicy), default=None,
                 help='Active class selection policy for every method.'),
    click.option('--force-split', type=_choice(ForceSplit), default=None,
                 help='Force per rank quartile for every method.'),
    click.option('--memory-train-set', type=_choice(MemoryTrainSet), default=None,
                 help='Memory items the incremental learner trains on.'),
    click.option('--seeds', default=None, help='Seeds, e.g. 0..9 or 1,2,5.'),
    click.option('--label-mode', type=_choice(LabelMode), default=None),
    click.option('--intervals', 'num_intervals', type=click.IntRange(min=0), default=None,
                 help='Number of exploration intervals.'),
    click.option('--steps', 'steps_per_interval', type=click.IntRange(min=0), default=None,
                 help='Agent steps per interval (Oracle mode).'),
    click.option('--escape', 'escape_mode', type=_choice(EscapeMode), default=None,
                 help='Return to start by reset or by walking.'),
    click.option('--out', 'out_dir', type=click.Path(file_okay=False), default=None,
                 help='Output directory.'),
    click.option('--workers', type=click.IntRange(min=1), default=None,
                 help='Parallel (method, seed) runs.'),
]


def spec_options(func):
    """Attach the run spec options to a command."""
    for option in reversed(_spec_options):
        func = option(func)
    return func


def _to_overrides(config, preset, **flags):
    config_path = Path(config) if config else None
    if flags.get('out_dir') is not None:
        flags['out_dir'] = Path(flags['out_dir'])
    return config_path, preset, flags


@main.command()
@spec_options
@click.option('--log-level', default='INFO',
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR']))
def run(config, preset, log_level, **flags):
    """Run every configured method for every seed and write the report."""
    config_path, preset, overrides = _to_overrides(config, preset, **flags)
    spec = _resolve(config_path, preset, **overrides)
    setup_logging(spec.out_dir, log_level)
    logging.getLogger('fiasco').setLevel(log_level)
    logger.info(f'fiasco {__version__}: {len(spec.methods)} method(s), seeds {spec.seeds}')
    try:
        harness.run(spec)
    except Exception as e:
        logger.exception('Run failed')
        raise click.ClickException(str(e)) from e


@main.command()
@spec_options
def validate(config, preset, **flags):
    """Resolve the run config and print it without running anything."""
    config_path, preset, overrides = _to_overrides(config, preset, **flags)
    spec = _resolve(config_path, preset, **overrides)
    click.echo(json.dumps(json.loads(spec.json()), indent=2))


@main.command('gen-data')
@click.option('--synth', multiple=True,
              help='Generator settings as key=value pairs, e.g. class_count=10,dim=8.')
@click.option('--seed', type=click.IntRange(min=0), default=0, show_default=True)
@click.option('--out', 'out_path', type=click.Path(dir_okay=False), required=True,
              help='Feature file to write.')
@click.option('--class-names', 'names_path', type=click.Path(dir_okay=False), default=None,
              help='Also write a class_id,name sidecar file.')
def gen_data(synth, seed, out_path, names_path):
    """Generate a synthetic feature file."""
    try:
        cfg = SynthConfig(**_parse_synth(synth))
    except ValidationError as e:
        raise click.ClickException(str(e)) from e
    dataset = gen_synthetic(cfg, seed)
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    write_dataset(dataset, out_path)
    if names_path is not None:
        write_class_names([f'class_{c}' for c in dataset.classes], Path(names_path))
    click.echo(f'Wrote {len(dataset.train)} train and {len(dataset.test)} test vectors '
               f'of {dataset.class_count} classes to {out_path}')


if __name__ == '__main__':
    main()
