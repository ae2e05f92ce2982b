"""
==============================================================================
local_search.py — Hill climbing stochastique (SHC) et recherche locale itérée (ILS)
==============================================================================
SHC : à chaque pas, proposition = incumbent + N(0, σ) par coordonnée,
      ramenée modulo 2π (le domaine est un tore) ; acceptée uniquement si
      strictement meilleure.

ILS : pour chaque redémarrage —
        1. point de départ uniforme dans [0, 2π)^d, puis SHC
        2. outer_iterations fois : perturbation de l'incumbent par
           N(0, kick_sigma), SHC avec le σ courant, acceptation si meilleur,
           puis σ ← σ · sigma_decay (la zone de recherche locale rétrécit)
      Le meilleur résultat tous redémarrages confondus est retourné.

Graines : chaque redémarrage reçoit un flux dérivé de cfg.seed
(SeedSequence.spawn) — résultat indépendant de l'ordre d'exécution.
==============================================================================
"""

import logging
import math
import time
from typing import Optional, Sequence

import numpy as np

from exceptions import ArgumentError
from optimizers.objective import Objective
from schemas.optimizer import ILSConfig, OptResult, TraceEntry

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


def _wrap(params: np.ndarray) -> np.ndarray:
    wrapped = np.mod(params, TWO_PI)
    wrapped[wrapped >= TWO_PI] = 0.0
    return wrapped


def _record(trace: Optional[list], params: np.ndarray, value: float) -> None:
    if trace is not None:
        trace.append(TraceEntry(params=tuple(float(p) for p in params), value=value))


def _climb(
    obj: Objective,
    start: np.ndarray,
    start_value: float,
    steps: int,
    sigma: float,
    rng: np.random.Generator,
    trace: Optional[list],
) -> tuple[np.ndarray, float]:
    current, current_value = start, start_value
    for _ in range(steps):
        candidate = _wrap(current + rng.normal(0.0, sigma, obj.dimension))
        value = obj(candidate)
        if obj.is_better(value, current_value):
            current, current_value = candidate, value
            _record(trace, current, current_value)
    return current, current_value


def stochastic_hill_climb(
    obj: Objective,
    start: Sequence[float],
    steps: int,
    sigma: float,
    seed: int,
    record_trace: bool = True,
) -> OptResult:
    if steps < 0:
        raise ArgumentError(f"SHC : steps >= 0 attendu (reçu {steps})")
    start = _wrap(np.asarray(start, dtype=float).copy())
    if start.shape != (obj.dimension,):
        raise ArgumentError(f"SHC : point de départ de dimension {start.shape}, attendu ({obj.dimension},)")

    start_count = obj.eval_count
    rng = np.random.default_rng(seed)
    trace: Optional[list] = [] if record_trace else None

    start_value = obj(start)
    _record(trace, start, start_value)
    best, best_value = _climb(obj, start, start_value, steps, sigma, rng, trace)

    return OptResult(
        best_params=tuple(float(p) for p in best),
        best_value=best_value,
        evaluations=obj.eval_count - start_count,
        trace=tuple(trace) if record_trace else None,
    )


def _run_restart(
    obj: Objective,
    cfg: ILSConfig,
    rng: np.random.Generator,
    trace: Optional[list],
) -> tuple[np.ndarray, float]:
    start = rng.uniform(0.0, TWO_PI, obj.dimension)
    start_value = obj(start)
    _record(trace, start, start_value)

    sigma = cfg.initial_step_sigma
    incumbent, incumbent_value = _climb(
        obj, start, start_value, cfg.shc_steps_per_iteration, sigma, rng, trace
    )

    for _ in range(cfg.outer_iterations):
        kicked = _wrap(incumbent + rng.normal(0.0, cfg.kick_sigma, obj.dimension))
        kicked_value = obj(kicked)
        candidate, candidate_value = _climb(
            obj, kicked, kicked_value, cfg.shc_steps_per_iteration, sigma, rng, None
        )
        if obj.is_better(candidate_value, incumbent_value):
            incumbent, incumbent_value = candidate, candidate_value
            _record(trace, incumbent, incumbent_value)
        sigma *= cfg.sigma_decay

    return incumbent, incumbent_value


def iterated_local_search(obj: Objective, cfg: ILSConfig, record_trace: bool = False) -> OptResult:
    if cfg.restarts < 1:
        raise ArgumentError(f"ILS : au moins un redémarrage (reçu {cfg.restarts})")

    start_time = time.time()
    start_count = obj.eval_count
    logger.info(
        f"ILS | {obj.name} | restarts={cfg.restarts} | iterations={cfg.outer_iterations} | "
        f"shc_steps={cfg.shc_steps_per_iteration} | seed={cfg.seed}"
    )

    trace: Optional[list] = [] if record_trace else None
    best, best_value = None, None

    for child in np.random.SeedSequence(cfg.seed).spawn(cfg.restarts):
        params, value = _run_restart(obj, cfg, np.random.default_rng(child), trace)
        if best_value is None or obj.is_better(value, best_value):
            best, best_value = params, value

    duration = round(time.time() - start_time, 2)
    logger.info(f"ILS terminé en {duration}s | meilleur={best_value:.6f} | évaluations={obj.eval_count - start_count}")

    return OptResult(
        best_params=tuple(float(p) for p in best),
        best_value=best_value,
        evaluations=obj.eval_count - start_count,
        trace=tuple(trace) if record_trace else None,
    )
