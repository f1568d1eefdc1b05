from pathlib import Path
from typing import Dict

import pandas as pd
import pytest
from src.fiasco import Harness, run
from src.fiasco.config.models import RunSpec


@pytest.fixture
def spec(small_run_config: Dict, tmp_path: Path) -> RunSpec:
    return RunSpec(**small_run_config, out_dir=tmp_path)


def test_one_task_per_method_and_seed(spec: RunSpec):
    tasks = Harness(spec).tasks()
    assert [(method.name, seed) for _, _, method, seed in tasks] == [
        ('fiasco_low-class-weight', 1), ('fiasco_low-class-weight', 2),
        ('batch-svm_uniform', 1), ('batch-svm_uniform', 2),
    ]


def test_run_writes_report(spec: RunSpec, tmp_path: Path):
    report = run(spec)
    assert set(report.timelines) == {(m, s) for m in report.methods for s in spec.seeds}
    metrics = pd.read_csv(tmp_path / 'metrics_fiasco_low-class-weight_1.csv')
    assert metrics['increment'].tolist() == [0, 1, 2, 3]
    assert (tmp_path / 'world_2.json').exists()
    assert RunSpec.parse_file(tmp_path / 'config.json') == spec
    summary = pd.read_csv(tmp_path / 'summary.csv')
    assert summary['method'].tolist() == report.methods


def test_workers_give_identical_results(spec: RunSpec):
    serial = Harness(spec).run()
    parallel = Harness(spec.copy(update={'workers': 2})).run()
    for key, timeline in serial.timelines.items():
        expected = timeline.to_df().drop(columns=['train_millis'])
        actual = parallel.timelines[key].to_df().drop(columns=['train_millis'])
        assert expected.equals(actual)


def test_failing_run_names_method_and_seed(spec: RunSpec):
    harness = Harness(spec.copy(update={'world': spec.world.copy(
        update={'containers_per_building': 1})}))
    with pytest.raises(RuntimeError, match='Method fiasco_low-class-weight, seed 1'):
        harness.run()
