"""Run spec resolution: defaults < preset < config file < command-line flags."""

import copy
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from .models import PRESETS, RunSpec
from .models.run_config import _default_methods
from ..util.io import read_yaml_file

logger = logging.getLogger(__name__)

# Flat flag name -> path inside the nested config document
_WORLD_FLAGS = {'label_mode', 'num_intervals', 'steps_per_interval', 'escape_mode'}
_METHOD_FLAGS = {'acs', 'force_split', 'memory_train_set'}
_TOP_LEVEL_FLAGS = {'seeds', 'out_dir', 'workers', 'distance_threshold', 'n_p'}


def parse_seeds(text: str) -> List[int]:
    """
    Parse a seed list such as ``0..9``, ``1,2,5`` or ``7``.

    Parameters
    ----------
    text : str
        Inclusive range ``a..b`` or comma-separated integers.

    Returns
    -------
    list of int
    """
    text = text.strip()
    try:
        if '..' in text:
            first, last = (int(part) for part in text.split('..', 1))
            if last < first:
                raise ValueError(f'Empty seed range: {text}')
            return list(range(first, last + 1))
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError as e:
        raise ValueError(f'Invalid seed specification "{text}": {e}') from e


def _merge(base: Dict, update: Dict) -> Dict:
    merged = copy.deepcopy(base)
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def apply_overrides(document: Dict, overrides: Dict[str, Any]) -> Dict:
    """
    Apply flat command-line overrides to a nested config document.

    Method-level flags (``acs``, ``force_split``, ``memory_train_set``)
    are applied to every configured method.

    Parameters
    ----------
    document : dict
        Nested config (as read from file).
    overrides : dict
        Flag name to value; None values are ignored.

    Returns
    -------
    dict
        A new document with the overrides applied.
    """
    document = copy.deepcopy(document)
    for key, value in overrides.items():
        if value is None:
            continue
        if key in _WORLD_FLAGS:
            document.setdefault('world', {})[key] = value
        elif key in _METHOD_FLAGS:
            methods = document.get('methods') or [m.dict() for m in _default_methods()]
            for method in methods:
                method[key] = value
            document['methods'] = methods
        elif key in _TOP_LEVEL_FLAGS:
            document[key] = value
        else:
            raise ValueError(f'Unknown override: {key}')
        logger.debug(f'Override {key}={value}')
    return document


def resolve_run_spec(config_path: Optional[Path] = None,
                     preset: Optional[str] = None,
                     overrides: Optional[Dict[str, Any]] = None,
                     ) -> RunSpec:
    """
    Resolve a fully explicit RunSpec.

    Parameters
    ----------
    config_path : pathlib.Path, optional
        JSON or YAML run config file.
    preset : str, optional
        Name of a benchmark preset in PRESETS.
    overrides : dict, optional
        Flat command-line overrides.

    Returns
    -------
    RunSpec
    """
    document: Dict = {}
    if preset is not None:
        if preset not in PRESETS:
            raise ValueError(f'Unknown preset "{preset}", choose from {sorted(PRESETS)}')
        document = _merge(document, PRESETS[preset])
    if config_path is not None:
        logger.info(f'Reading run config from {config_path}')
        document = _merge(document, read_yaml_file(config_path))
    document = apply_overrides(document, overrides or {})
    return RunSpec(**document)
