"""
Feature file reading and writing.

Format (CSV, UTF-8)::

    # dim=<d> classes=<k>
    # split=train
    class_id,f0,f1,...,f<d-1>
    ...
    # split=test
    class_id,f0,f1,...,f<d-1>

A file may hold only one split; train and test can then be read from
two files with their own headers.
"""

import csv
import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from .dataset import FeatureDataset, LabeledBatch

logger = logging.getLogger(__name__)

_HEADER = re.compile(r'^#\s*dim=(\d+)\s+classes=(\d+)\s*$')
_SPLIT = re.compile(r'^#\s*split=(train|test)\s*$')


def _format_value(value: float) -> str:
    # repr gives the shortest string that parses back to the same float
    return repr(float(value))


def _parse_file(path: Path) -> Tuple[int, int, Dict[str, LabeledBatch]]:
    if not path.exists():
        raise FileNotFoundError(f'Feature file not found: {path}')

    rows: Dict[str, Tuple[List[List[float]], List[int]]] = {}
    dim = class_count = None
    split: Optional[str] = None
    with path.open('rt', encoding='utf-8', newline='') as f:
        for line_no, line in enumerate(f, start=1):
            text = line.strip()
            if line_no == 1:
                match = _HEADER.match(text)
                if match is None:
                    raise ValueError(f'{path.name}, line 1: expected "# dim=<d> classes=<k>", '
                                     f'got "{text}"')
                dim, class_count = int(match.group(1)), int(match.group(2))
                if dim == 0 or class_count == 0:
                    raise ValueError(f'{path.name}, line 1: dim and classes must be positive')
                continue
            if not text:
                continue
            if text.startswith('#'):
                match = _SPLIT.match(text)
                if match is None:
                    raise ValueError(f'{path.name}, line {line_no}: unrecognized marker "{text}"')
                split = match.group(1)
                rows.setdefault(split, ([], []))
                continue
            if split is None:
                raise ValueError(f'{path.name}, line {line_no}: data row before "# split=" marker')
            features, labels = rows[split]
            record = next(csv.reader([text]))
            if len(record) != dim + 1:
                raise ValueError(f'{path.name}, line {line_no}: expected {dim + 1} columns, '
                                 f'got {len(record)}')
            try:
                class_id = int(record[0])
                values = [float(v) for v in record[1:]]
            except ValueError as e:
                raise ValueError(f'{path.name}, line {line_no}: non-numeric value ({e})') from e
            if not 0 <= class_id < class_count:
                raise ValueError(f'{path.name}, line {line_no}: class_id {class_id} out of '
                                 f'range [0, {class_count})')
            if not np.all(np.isfinite(values)):
                raise ValueError(f'{path.name}, line {line_no}: non-finite feature value')
            features.append(values)
            labels.append(class_id)

    if dim is None:
        raise ValueError(f'{path.name}: empty feature file')
    batches = {name: (LabeledBatch(np.array(feats, dtype=np.float64).reshape(-1, dim),
                                   np.array(labels, dtype=np.int64)))
               for name, (feats, labels) in rows.items()}
    return dim, class_count, batches


def load_dataset(path: Path,
                 test_path: Optional[Path] = None,
                 class_names_path: Optional[Path] = None,
                 ) -> FeatureDataset:
    """
    Load a feature dataset from one or two feature files.

    Parameters
    ----------
    path : pathlib.Path
        Feature file holding the train split (and optionally the test
        split).
    test_path : pathlib.Path, optional
        Separate feature file holding the test split.
    class_names_path : pathlib.Path, optional
        ``class_id,name`` sidecar CSV.

    Returns
    -------
    FeatureDataset
        Examples appear in file order.
    """
    dim, class_count, batches = _parse_file(path)
    if test_path is not None:
        test_dim, test_classes, test_batches = _parse_file(test_path)
        if (test_dim, test_classes) != (dim, class_count):
            raise ValueError(f'{test_path.name} declares dim={test_dim} classes={test_classes}, '
                             f'{path.name} declares dim={dim} classes={class_count}')
        if 'test' not in test_batches:
            raise ValueError(f'{test_path.name} has no "# split=test" section')
        if 'test' in batches:
            raise ValueError(f'Test split given both in {path.name} and {test_path.name}')
        batches['test'] = test_batches['test']

    train = batches.get('train', LabeledBatch.empty(dim))
    test = batches.get('test', LabeledBatch.empty(dim))
    names = None
    if class_names_path is not None:
        names = read_class_names(class_names_path, class_count)
    dataset = FeatureDataset(dim=dim, class_count=class_count, train=train, test=test,
                             class_names=names)
    logger.info(f'Loaded {path.name}: {class_count} classes, dim={dim}, '
                f'{len(train)} train / {len(test)} test examples')
    return dataset


def _write_rows(writer, batch: LabeledBatch) -> None:
    for label, vector in zip(batch.labels, batch.features):
        writer.writerow([str(int(label))] + [_format_value(v) for v in vector])


def write_dataset(dataset: FeatureDataset, path: Path) -> None:
    """
    Write a dataset as a single feature file holding both splits.

    Parameters
    ----------
    dataset : FeatureDataset
        Dataset to write.
    path : pathlib.Path
        Output file.

    Returns
    -------
    None
    """
    with path.open('w', encoding='utf-8', newline='') as out:
        out.write(f'# dim={dataset.dim} classes={dataset.class_count}\n')
        writer = csv.writer(out, lineterminator='\n')
        out.write('# split=train\n')
        _write_rows(writer, dataset.train)
        if len(dataset.test):
            out.write('# split=test\n')
            _write_rows(writer, dataset.test)


def read_class_names(path: Path, class_count: int) -> List[str]:
    """
    Read the ``class_id,name`` sidecar file.

    Classes without an entry are named after their id.

    Parameters
    ----------
    path : pathlib.Path
        Sidecar CSV.
    class_count : int
        Number of classes in the dataset.

    Returns
    -------
    list of str
        Names indexed by class id.
    """
    if not path.exists():
        raise FileNotFoundError(f'Class name file not found: {path}')
    names = [str(c) for c in range(class_count)]
    with path.open('rt', encoding='utf-8', newline='') as f:
        for line_no, record in enumerate(csv.reader(f), start=1):
            if not record:
                continue
            if len(record) != 2:
                raise ValueError(f'{path.name}, line {line_no}: expected 2 columns, '
                                 f'got {len(record)}')
            try:
                class_id = int(record[0])
            except ValueError as e:
                raise ValueError(f'{path.name}, line {line_no}: non-numeric class_id') from e
            if not 0 <= class_id < class_count:
                raise ValueError(f'{path.name}, line {line_no}: class_id {class_id} out of '
                                 f'range [0, {class_count})')
            names[class_id] = record[1]
    return names


def write_class_names(names: List[str], path: Path) -> None:
    """Write the ``class_id,name`` sidecar file."""
    with path.open('w', encoding='utf-8', newline='') as out:
        writer = csv.writer(out, lineterminator='\n')
        for class_id, name in enumerate(names):
            writer.writerow([class_id, name])
