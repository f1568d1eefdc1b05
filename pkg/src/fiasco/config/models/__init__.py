"""Configuration file models package."""

from .enums import AcsPolicy, ForceSplit, LabelMode, EscapeMode, LearnerKind, MemoryTrainSet
from .synth_config import SynthConfig
from .train_config import TrainConfig
from .world_config import WorldConfig, Rect
from .run_config import DatasetSource, MethodSpec, RunSpec, PRESETS
