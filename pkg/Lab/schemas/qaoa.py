import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, field_validator

TWO_PI = 2.0 * math.pi


class ModelLabel(str, Enum):
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"


class LayerKind(str, Enum):
    PHASE = "phase"
    MIX   = "mix"


class PhaseMode(str, Enum):
    FUSED = "fused"   # Diagonale e^{-iγC(z)} appliquée en une multiplication
    GATES = "gates"   # Blocs CNOT–RZ–CNOT + RZ de champ


class Backend(str, Enum):
    EXACT   = "exact"
    SAMPLED = "sampled"


# Ordre d'exécution — la couche de phase agit avant le mélangeur
ANSATZ_SCHEDULES: dict[ModelLabel, tuple[LayerKind, ...]] = {
    ModelLabel.P2: (LayerKind.PHASE, LayerKind.MIX),
    ModelLabel.P3: (LayerKind.PHASE, LayerKind.MIX, LayerKind.MIX),
    ModelLabel.P4: (LayerKind.PHASE, LayerKind.MIX, LayerKind.PHASE, LayerKind.MIX),
}

# Noms affichés des paramètres, dans l'ordre du vecteur
PARAMETER_NAMES: dict[ModelLabel, tuple[str, ...]] = {
    ModelLabel.P2: ("gamma", "beta"),
    ModelLabel.P3: ("gamma", "beta1", "beta2"),
    ModelLabel.P4: ("gamma1", "beta1", "gamma2", "beta2"),
}


class AnsatzModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: ModelLabel
    schedule: tuple[LayerKind, ...]

    @classmethod
    def from_label(cls, label: ModelLabel | str) -> "AnsatzModel":
        label = ModelLabel(label)
        return cls(label=label, schedule=ANSATZ_SCHEDULES[label])

    @property
    def parameter_count(self) -> int:
        return len(self.schedule)

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return PARAMETER_NAMES[self.label]


def canonical_angle(value: float) -> float:
    angle = math.fmod(value, TWO_PI)
    if angle < 0.0:
        angle += TWO_PI
    # -1e-17 + 2π arrondit à 2π — ramené au représentant 0
    return 0.0 if angle >= TWO_PI else angle


class ParameterPoint(BaseModel):
    """Angles γ/β du modèle, ramenés dans [0, 2π) à la construction."""
    model_config = ConfigDict(frozen=True)

    values: tuple[float, ...]

    @field_validator("values")
    @classmethod
    def _canonicalize(cls, values: tuple[float, ...]) -> tuple[float, ...]:
        if not all(math.isfinite(v) for v in values):
            raise ValueError(f"angle non fini : {values}")
        return tuple(canonical_angle(v) for v in values)


class EEVReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    eev: float
    method: Backend
    shots: Optional[int] = None
    seed: Optional[int] = None


class StateProbability(BaseModel):
    model_config = ConfigDict(frozen=True)

    bitstring: str
    probability: float
    cost: float
    optimal: bool


class MeasuredSolution(BaseModel):
    """Meilleur état observé parmi les mesures — étape finale du QAOA."""
    model_config = ConfigDict(frozen=True)

    bitstring: str
    cost: float
    count: int
    shots: int
    seed: int


class GateOp(BaseModel):
    """Une porte du circuit développé."""
    model_config = ConfigDict(frozen=True)

    name: str                      # "h", "rx", "rz", "cnot"
    qubits: tuple[int, ...]        # (cible,) ou (contrôle, cible)
    angle: Optional[float] = None
