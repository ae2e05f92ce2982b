from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from config import (
    ES_MAX_EVALUATIONS,
    ILS_RESTARTS,
    ILS_OUTER_ITERATIONS,
    ILS_SHC_STEPS,
    ILS_INITIAL_STEP_SIGMA,
    ILS_SIGMA_DECAY,
    ILS_KICK_SIGMA,
    DEFAULT_SEED,
)


class ESConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    points_per_dim: int = Field(..., ge=1, json_schema_extra={"example": 64})
    max_evaluations: int = Field(default=ES_MAX_EVALUATIONS, ge=1)


class ILSConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    restarts: int = Field(default=ILS_RESTARTS, ge=1)
    outer_iterations: int = Field(default=ILS_OUTER_ITERATIONS, ge=0)
    shc_steps_per_iteration: int = Field(default=ILS_SHC_STEPS, ge=0)
    initial_step_sigma: float = Field(default=ILS_INITIAL_STEP_SIGMA, gt=0)
    sigma_decay: float = Field(default=ILS_SIGMA_DECAY, gt=0, le=1)
    kick_sigma: float = Field(default=ILS_KICK_SIGMA, gt=0)
    seed: int = DEFAULT_SEED


class TraceEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: tuple[float, ...]
    value: float


class OptResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    best_params: tuple[float, ...]
    best_value: float
    evaluations: int
    trace: Optional[tuple[TraceEntry, ...]] = None
