"""Logging setup."""

import logging.config
import time
from pathlib import Path
from typing import Optional

from .._paths import LOG_CONFIG_PATH, LOG_SUBDIR
from ..util.io import read_yaml_file


def setup_logging(out_dir: Path,
                  level: str = 'INFO',
                  config_path: Optional[Path] = None,
                  ) -> Optional[Path]:
    """
    Set up logging configuration.

    If a logging config file is present, it is loaded with
    ``logging.config.dictConfig`` and its ``file`` handler (if any) is
    pointed at a timestamped log file in ``<out_dir>/logs``. Otherwise a
    basic console configuration is used.

    Parameters
    ----------
    out_dir : pathlib.Path
        Experiment output directory.
    level : str, default 'INFO'
        Root log level for the basic configuration.
    config_path : pathlib.Path, optional
        dictConfig YAML file. Defaults to ./config/logging.yml.

    Returns
    -------
    pathlib.Path or None
        The log file, if file logging was configured.
    """
    config_path = config_path or LOG_CONFIG_PATH
    if not config_path.exists():
        logging.basicConfig(level=level.upper(),
                            format='%(asctime)s %(levelname)s %(name)s: %(message)s')
        return None

    log_dir = out_dir / LOG_SUBDIR
    log_dir.mkdir(parents=True, exist_ok=True)
    time_string = time.strftime('%Y-%m-%dT%H%M%S')
    logfile = log_dir / f'{time_string}.log'

    config = read_yaml_file(config_path)
    handlers = config.get('handlers', {})
    if 'file' in handlers:
        handlers['file']['filename'] = str(logfile)
    logging.config.dictConfig(config)
    return logfile if 'file' in handlers else None
