"""
Objectif boîte noire F(γ, β) vu par les optimiseurs.

Le compteur d'évaluations est protégé par un verrou — une même instance
d'Objective peut être appelée depuis plusieurs threads.
"""

import threading
import logging
from typing import Callable, Optional

import numpy as np

from exceptions import ArgumentError
from problems.problem_service import cost_diagonal
from qaoa.qaoa_service import evolve_amplitudes
from schemas.problem import Direction, ProblemInstance
from schemas.qaoa import AnsatzModel, Backend
from simulation.statevector_service import multinomial_counts

logger = logging.getLogger(__name__)


class Objective:
    def __init__(
        self,
        dimension: int,
        direction: Direction,
        function: Callable[[np.ndarray], float],
        name: str = "objective",
    ):
        if dimension < 1:
            raise ArgumentError(f"Dimension de l'objectif >= 1 attendue (reçu {dimension})")
        self.dimension = dimension
        self.direction = Direction(direction)
        self.name = name
        self._function = function
        self._eval_count = 0
        self._lock = threading.Lock()

    @property
    def eval_count(self) -> int:
        with self._lock:
            return self._eval_count

    def __call__(self, params: np.ndarray) -> float:
        value = float(self._function(np.asarray(params, dtype=float)))
        with self._lock:
            self._eval_count += 1
        return value

    def is_better(self, candidate: float, incumbent: float) -> bool:
        # Amélioration stricte — un plateau ne fait pas bouger l'incumbent
        if self.direction == Direction.MAXIMIZE:
            return candidate > incumbent
        return candidate < incumbent


def make_eev_objective(
    instance: ProblemInstance,
    model: AnsatzModel,
    backend: Backend = Backend.EXACT,
    shots: Optional[int] = None,
    seed: Optional[int] = None,
) -> Objective:
    """
    EEV du modèle sur l'instance. En backend sampled, chaque évaluation
    réutilise la même graine : l'objectif reste une fonction déterministe
    des paramètres.
    """
    diagonal = cost_diagonal(instance)
    n_qubits = instance.n_nodes
    schedule = model.schedule

    if Backend(backend) == Backend.EXACT:
        def function(values: np.ndarray) -> float:
            amplitudes = evolve_amplitudes(diagonal, n_qubits, schedule, values)
            return float((np.abs(amplitudes) ** 2) @ diagonal)
    else:
        if shots is None or shots < 1:
            raise ArgumentError(f"Backend sampled : shots >= 1 attendu (reçu {shots})")
        if seed is None:
            raise ArgumentError("Backend sampled : graine obligatoire")

        def function(values: np.ndarray) -> float:
            amplitudes = evolve_amplitudes(diagonal, n_qubits, schedule, values)
            counts = multinomial_counts(amplitudes, shots, seed)
            return float(counts @ diagonal / shots)

    return Objective(
        dimension=model.parameter_count,
        direction=instance.direction,
        function=function,
        name=f"eev[{instance.label}|{model.label.value}|{Backend(backend).value}]",
    )
