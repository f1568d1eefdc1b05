"""Run spec models and validation."""

from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, PositiveInt, PositiveFloat, conint, validator, root_validator

from ..._paths import DEFAULT_OUT_DIR
from .enums import AcsPolicy, ForceSplit, LearnerKind, MemoryTrainSet
from .synth_config import SynthConfig
from .train_config import TrainConfig
from .world_config import WorldConfig

# Distance threshold and pseudo-exemplars per class used for the two
# benchmark feature sets.
PRESETS: Dict[str, Dict[str, float]] = {
    'cifar': {'distance_threshold': 17.0, 'n_p': 5},
    'grocery': {'distance_threshold': 15.0, 'n_p': 40},
}


class DatasetSource(BaseModel):
    """Feature file(s) or synthetic generator settings."""

    path: Optional[Path] = None
    test_path: Optional[Path] = None
    class_names_path: Optional[Path] = None
    synth: Optional[SynthConfig] = None
    synth_seed: conint(ge=0) = 0  # type: ignore
    max_classes: Optional[PositiveInt] = None

    class Config:
        extra = 'forbid'
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def exactly_one_source(cls, values: Dict) -> Dict:
        """Either a feature file or a synthetic config must be given."""
        if values.get('path') is None and values.get('synth') is None:
            values['synth'] = SynthConfig()
        if values.get('path') is not None and values.get('synth') is not None:
            raise ValueError('Provide either a feature file path or synth settings, not both')
        if values.get('test_path') is not None and values.get('path') is None:
            raise ValueError('test_path requires path')
        return values

    @property
    def is_synthetic(self) -> bool:
        """True if the dataset is generated rather than read from file."""
        return self.synth is not None


class MethodSpec(BaseModel):
    """A learner kind paired with its class selection policy."""

    learner: LearnerKind = LearnerKind.FIASCO
    acs: AcsPolicy = AcsPolicy.LOW_CLASS_WEIGHT
    force_split: ForceSplit = ForceSplit.MOD1
    memory_train_set: MemoryTrainSet = MemoryTrainSet.BOTH
    redistrict_folds: conint(ge=2) = 3  # type: ignore

    class Config:
        extra = 'forbid'
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def redistrict_needs_stored_features(cls, values: Dict) -> Dict:
        """Redistricting retrains on stored raw features: batch learner only."""
        if values['acs'] == AcsPolicy.REDISTRICT and values['learner'] != LearnerKind.BATCH_SVM:
            raise ValueError('The redistrict policy requires the batch-svm learner')
        return values

    @property
    def name(self) -> str:
        """Identifier used in file names and reports."""
        return f'{self.learner.value}_{self.acs.value}'


def _default_methods() -> List[MethodSpec]:
    return [MethodSpec(learner=LearnerKind.FIASCO, acs=AcsPolicy.LOW_CLASS_WEIGHT),
            MethodSpec(learner=LearnerKind.BATCH_SVM, acs=AcsPolicy.UNIFORM)]


class RunSpec(BaseModel):
    """Data schema and validator of a complete experiment run."""

    dataset: DatasetSource = DatasetSource()
    world: WorldConfig = WorldConfig()
    methods: List[MethodSpec] = None  # type: ignore
    distance_threshold: PositiveFloat = 8.0
    n_p: PositiveInt = 5
    diagonal_covariance: bool = False
    train: TrainConfig = TrainConfig()
    seeds: List[conint(ge=0)] = [0]  # type: ignore
    out_dir: Path = DEFAULT_OUT_DIR
    workers: PositiveInt = 1

    class Config:
        extra = 'forbid'
        allow_mutation = False

    @validator('methods', pre=True, always=True)
    def default_methods(cls, methods: Optional[List]) -> List:
        """Compare FIASco low-class-weight against uniform batch SVM by default."""
        if methods is None:
            return _default_methods()
        return methods

    @validator('methods')
    def unique_methods(cls, methods: List[MethodSpec]) -> List[MethodSpec]:
        """
        Check at least one method is given and method names are unique.

        Parameters
        ----------
        methods : list of MethodSpec
            Methods to compare.

        Returns
        -------
        list of MethodSpec
            The validated methods.
        """
        if not methods:
            raise ValueError('At least one method is required')
        names = [m.name for m in methods]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ValueError(f'Duplicate methods: {duplicates}')
        return methods

    @validator('seeds')
    def unique_seeds(cls, seeds: List[int]) -> List[int]:
        """Check at least one seed is given and seeds are unique."""
        if not seeds:
            raise ValueError('At least one seed is required')
        if len(set(seeds)) != len(seeds):
            raise ValueError(f'Duplicate seeds in {seeds}')
        return seeds
