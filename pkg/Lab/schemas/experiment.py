from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config import DEFAULT_SEED
from schemas.optimizer import ESConfig, ILSConfig
from schemas.problem import Family
from schemas.qaoa import Backend, ModelLabel, StateProbability

GAP_TOLERANCE = 1e-6


class OptimizerKind(str, Enum):
    ES  = "es"
    ILS = "ils"


class OutputFormat(str, Enum):
    CSV   = "csv"
    TABLE = "table"


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    instance: str = Field(..., json_schema_extra={"example": "maxcut-4-cyclic"})  # Nom registre ou chemin
    model: ModelLabel = ModelLabel.P2
    optimizer: OptimizerKind = OptimizerKind.ES
    es: Optional[ESConfig] = None      # None = grille par défaut du modèle
    ils: Optional[ILSConfig] = None    # None = hyperparamètres par défaut
    backend: Backend = Backend.EXACT
    shots: Optional[int] = None
    seed: int = DEFAULT_SEED
    output: OutputFormat = OutputFormat.TABLE
    out: Optional[str] = None

    @model_validator(mode="after")
    def _check_backend(self) -> "ExperimentConfig":
        if self.backend == Backend.SAMPLED and (self.shots is None or self.shots < 1):
            raise ValueError("le backend sampled exige shots >= 1")
        return self


class ResultRow(BaseModel):
    """Une ligne des tableaux de résultats — colonnes EEV Local / Optimum / Opt-Loc."""
    model_config = ConfigDict(frozen=True)

    instance: str
    model: ModelLabel
    optimizer: OptimizerKind
    eev: float
    optimum: float
    gap: float
    best_params: tuple[float, ...]
    evaluations: int
    seed: Optional[int] = None
    family: Optional[Family] = None
    # Enrichissements affichés en console — absents du CSV
    optimal_probability: Optional[float] = None
    best_bitstring: Optional[str] = None
    top_states: tuple[StateProbability, ...] = ()

    @model_validator(mode="after")
    def _check_gap(self) -> "ResultRow":
        if abs(self.gap - (self.optimum - self.eev)) > GAP_TOLERANCE:
            raise ValueError(f"gap {self.gap} != optimum - eev ({self.optimum} - {self.eev})")
        return self


class SuiteAverage(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: Family
    optimizer: OptimizerKind
    average_gap: float
    rows: int


class SuiteReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: tuple[ResultRow, ...]
    averages: tuple[SuiteAverage, ...]
