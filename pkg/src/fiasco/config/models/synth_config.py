"""Synthetic feature generator config."""

from pydantic import BaseModel, PositiveInt, PositiveFloat, validator


class SynthConfig(BaseModel):
    """Parameters of the synthetic feature-vector generator."""

    class_count: PositiveInt = 40
    dim: PositiveInt = 32
    clusters_per_class: PositiveInt = 2
    examples_per_class: PositiveInt = 60
    intra_cluster_stddev: PositiveFloat = 1.0
    inter_class_separation: PositiveFloat = 12.0
    test_fraction: float = 0.1

    class Config:
        extra = 'forbid'
        allow_mutation = False

    @validator('test_fraction')
    def fraction_in_open_interval(cls, value: float) -> float:
        """Test fraction must lie strictly between 0 and 1."""
        if not 0 < value < 1:
            raise ValueError(f'test_fraction must be in (0, 1), got {value}')
        return value

    @validator('examples_per_class')
    def enough_examples_to_split(cls, value: int) -> int:
        """Every class needs at least one train and one test example."""
        if value < 2:
            raise ValueError(f'examples_per_class must be at least 2, got {value}')
        return value
