"""
Recherche exhaustive (ES) sur la grille uniforme du tore [0, 2π)^d.

Point k d'un axe : 2πk / points_per_dim (2π exclu, car 2π ≡ 0).
Parcours lexicographique + amélioration stricte : à égalité, le plus petit
tuple de paramètres l'emporte, quel que soit l'ordre d'évaluation.
"""

import itertools
import logging
import math
import time

import numpy as np

from exceptions import ArgumentError, BudgetError
from optimizers.objective import Objective
from schemas.optimizer import ESConfig, OptResult, TraceEntry

logger = logging.getLogger(__name__)


def grid_axis(points_per_dim: int) -> np.ndarray:
    return 2.0 * math.pi * np.arange(points_per_dim) / points_per_dim


def exhaustive_search(obj: Objective, cfg: ESConfig, record_trace: bool = False) -> OptResult:
    if obj.dimension < 1 or cfg.points_per_dim < 1:
        raise ArgumentError("ES : dimension et points_per_dim doivent être >= 1")

    total = cfg.points_per_dim ** obj.dimension
    if total > cfg.max_evaluations:
        raise BudgetError(
            f"ES : {cfg.points_per_dim}^{obj.dimension} = {total} évaluations "
            f"> plafond {cfg.max_evaluations}"
        )

    start_time = time.time()
    start_count = obj.eval_count
    axis = grid_axis(cfg.points_per_dim)
    logger.info(f"ES | {obj.name} | dimension={obj.dimension} | points={cfg.points_per_dim} | total={total}")

    best_params = None
    best_value = None
    trace = []

    for indices in itertools.product(range(cfg.points_per_dim), repeat=obj.dimension):
        params = axis[list(indices)]
        value = obj(params)
        if best_value is None or obj.is_better(value, best_value):
            best_params, best_value = params, value
            if record_trace:
                trace.append(TraceEntry(params=tuple(float(p) for p in params), value=value))

    duration = round(time.time() - start_time, 2)
    logger.info(f"ES terminé en {duration}s | meilleur={best_value:.6f}")

    return OptResult(
        best_params=tuple(float(p) for p in best_params),
        best_value=best_value,
        evaluations=obj.eval_count - start_count,
        trace=tuple(trace) if record_trace else None,
    )
