"""I/O utility module."""

import hashlib
import json
from pathlib import Path
from typing import Any, Dict

import yaml


def read_yaml_file(path: Path) -> Dict:
    """
    Read yaml (or JSON) file and return as dict.

    JSON is a subset of YAML, so run configs in either format can be
    read with this function.

    Parameters
    ----------
    path : pathlib.Path
        File to read.

    Returns
    -------
    dict
        Contents of the file as dict.
    """
    if not path.exists():
        raise FileNotFoundError(f'Config file not found: {path}')
    with path.open('rt', encoding='utf-8') as f:
        contents = yaml.safe_load(f.read())
    if contents is None:
        return {}
    if not isinstance(contents, dict):
        raise ValueError(f'Expected a mapping at the top level of {path}')
    return contents


def write_json_file(contents: Any, out_path: Path) -> None:
    """
    Write JSON-serializable contents to a file.

    Keys are written in insertion order with a two-space indent, so
    identical contents always produce identical bytes.

    Parameters
    ----------
    contents : Any
        JSON-serializable object.
    out_path : pathlib.Path
        Output file.

    Returns
    -------
    None
    """
    with out_path.open('w', encoding='utf-8') as out:
        json.dump(contents, out, indent=2)
        out.write('\n')


def ensure_writable_dir(directory: Path) -> Path:
    """
    Create directory (and parents) if needed and check it is writable.

    Parameters
    ----------
    directory : pathlib.Path
        Directory to prepare.

    Returns
    -------
    pathlib.Path
        The same directory.
    """
    try:
        directory.mkdir(parents=True, exist_ok=True)
        marker = directory / '.write_check'
        marker.touch()
        marker.unlink()
    except OSError as e:
        raise OSError(f'Output directory is not writable: {directory} ({e})') from e
    return directory


def get_file_checksum(path: Path, chunk_size: int = 1 << 16) -> str:
    """
    Get SHA-256 checksum of a file.

    Parameters
    ----------
    path : pathlib.Path
        File to get checksum of.
    chunk_size : int, default 65536
        Number of bytes read per iteration.

    Returns
    -------
    str
        Resulting hex digest.
    """
    digest = hashlib.sha256()
    with path.open('rb') as f:
        for chunk in iter(lambda: f.read(chunk_size), b''):
            digest.update(chunk)
    return digest.hexdigest()
