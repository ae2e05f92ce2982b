import math
from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator


class TopologyKind(str, Enum):
    LINEAR   = "linear"
    CYCLIC   = "cyclic"
    COMPLETE = "complete"


class Family(str, Enum):
    MAXCUT = "maxcut"
    ISING  = "ising"


class Direction(str, Enum):
    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


# Sens d'optimisation imposé par la famille — Max-Cut maximise, ISM minimise l'énergie
FAMILY_DIRECTION = {
    Family.MAXCUT: Direction.MAXIMIZE,
    Family.ISING:  Direction.MINIMIZE,
}


class Topology(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: TopologyKind
    n_nodes: int
    edges: tuple[tuple[int, int], ...]   # Paires (i, j) avec i < j, triées

    @model_validator(mode="after")
    def _check_edges(self) -> "Topology":
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("arêtes dupliquées")
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"boucle sur le nœud {i}")
            if not (0 <= i < self.n_nodes and 0 <= j < self.n_nodes):
                raise ValueError(f"arête ({i}, {j}) hors des {self.n_nodes} nœuds")
        return self


class ProblemInstance(BaseModel):
    """
    Graphe + famille de coût. `couplings` est aligné sur `topology.edges`,
    `fields` (ISM uniquement) sur les nœuds.
    """
    model_config = ConfigDict(frozen=True)

    name: Optional[str] = None
    topology: Topology
    family: Family
    couplings: tuple[float, ...]
    fields: Optional[tuple[float, ...]] = None
    direction: Direction
    declared_optimum: Optional[float] = None

    @model_validator(mode="after")
    def _check_family(self) -> "ProblemInstance":
        if len(self.couplings) != len(self.topology.edges):
            raise ValueError(
                f"{len(self.couplings)} couplages pour {len(self.topology.edges)} arêtes"
            )
        if not all(math.isfinite(j) for j in self.couplings):
            raise ValueError("couplage J non fini")
        if self.direction != FAMILY_DIRECTION[self.family]:
            raise ValueError(f"sens {self.direction.value} incompatible avec {self.family.value}")

        if self.family == Family.MAXCUT and self.fields is not None:
            raise ValueError("une instance maxcut ne porte pas de champ h")
        if self.family == Family.ISING:
            if self.fields is None or len(self.fields) != self.topology.n_nodes:
                raise ValueError(f"une instance ising exige {self.topology.n_nodes} champs h")
            if not all(math.isfinite(h) for h in self.fields):
                raise ValueError("champ h non fini")
        return self

    @property
    def n_nodes(self) -> int:
        return self.topology.n_nodes

    @property
    def label(self) -> str:
        return self.name or f"{self.family.value}-{self.n_nodes}-{self.topology.kind.value}"


class SpinAssignment(BaseModel):
    """Bitstring affiché P1 à gauche ; bit 0 → spin +1, bit 1 → spin −1."""
    model_config = ConfigDict(frozen=True)

    bits: str

    @model_validator(mode="after")
    def _check_bits(self) -> "SpinAssignment":
        if not self.bits or set(self.bits) - {"0", "1"}:
            raise ValueError(f"bitstring invalide : '{self.bits}'")
        return self

    @property
    def spins(self) -> np.ndarray:
        return 1 - 2 * np.array([int(b) for b in self.bits], dtype=np.int64)


class OracleResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    argopt: tuple[str, ...]   # Ordre canonique : tri lexicographique
