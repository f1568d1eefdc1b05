"""Linear classifier training config."""

from pydantic import BaseModel, PositiveInt, PositiveFloat, NonNegativeFloat, conint


class TrainConfig(BaseModel):
    """
    Hyperparameters of the one-vs-rest hinge-loss classifier.

    The learning rate at update t is
    ``learning_rate / (1 + l2 * learning_rate * t)``.
    """

    epochs: PositiveInt = 50
    learning_rate: PositiveFloat = 0.01
    l2: NonNegativeFloat = 1e-4
    seed: conint(ge=0) = 0  # type: ignore

    class Config:
        extra = 'forbid'
        allow_mutation = False
