"""
==============================================================================
runner_service.py — Exécution des expériences et des suites
==============================================================================
Étapes d'une expérience :
  1. Résolution de l'instance (registre ou fichier), optimum confirmé par l'oracle
  2. Objectif = EEV(instance, modèle, ·) dans le sens de l'instance
  3. Optimisation ES ou ILS, sur le backend exact ou échantillonné
  4. EEV rapportée TOUJOURS réévaluée en exact au meilleur point —
     le bruit de l'estimateur ne se mélange pas à celui de l'optimiseur
  5. Ligne de résultat : gap = optimum − eev, probabilité de l'optimum,
     états les plus probables, meilleure solution mesurée
==============================================================================
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

import numpy as np

from config import DEFAULT_SEED, DEFAULT_SHOTS, ES_POINTS_PER_DIM, SUITE_WORKERS, TOP_STATES
from exceptions import ArgumentError, SuiteError
from experiments.job_manager import JobTracker
from experiments.registry import PUBLISHED_COMBINATIONS, resolve_instance
from optimizers.exhaustive_search import exhaustive_search, grid_axis
from optimizers.local_search import iterated_local_search
from optimizers.objective import make_eev_objective
from problems.problem_service import oracle_optimum
from qaoa.qaoa_service import (
    best_measured_solution,
    exact_expectation,
    opt_gap,
    optimal_probability,
    top_states,
)
from schemas.experiment import (
    ExperimentConfig,
    OptimizerKind,
    ResultRow,
    SuiteAverage,
    SuiteReport,
)
from schemas.optimizer import ESConfig, ILSConfig
from schemas.problem import ProblemInstance
from schemas.qaoa import AnsatzModel, Backend, ModelLabel

logger = logging.getLogger(__name__)


def default_es_config(model: ModelLabel, points_per_dim: Optional[int] = None) -> ESConfig:
    return ESConfig(points_per_dim=points_per_dim or ES_POINTS_PER_DIM[ModelLabel(model).value])


def _optimum(instance: ProblemInstance) -> float:
    # Le registre a déjà confronté l'optimum déclaré à l'oracle
    if instance.declared_optimum is not None:
        return instance.declared_optimum
    return oracle_optimum(instance).value


def run_experiment(cfg: ExperimentConfig, instance: Optional[ProblemInstance] = None) -> ResultRow:
    start_time = time.time()
    instance = instance or resolve_instance(cfg.instance)
    model = AnsatzModel.from_label(cfg.model)

    logger.info(
        f"Expérience | instance={instance.label} | modèle={model.label.value} | "
        f"optimiseur={cfg.optimizer.value} | backend={cfg.backend.value} | seed={cfg.seed}"
    )

    objective = make_eev_objective(
        instance, model,
        backend=cfg.backend,
        shots=cfg.shots,
        seed=cfg.seed if cfg.backend == Backend.SAMPLED else None,
    )

    if cfg.optimizer == OptimizerKind.ES:
        result = exhaustive_search(objective, cfg.es or default_es_config(model.label))
        row_seed = cfg.seed if cfg.backend == Backend.SAMPLED else None
    else:
        ils = (cfg.ils or ILSConfig()).model_copy(update={"seed": cfg.seed})
        result = iterated_local_search(objective, ils)
        row_seed = cfg.seed

    eev = exact_expectation(instance, model, result.best_params).eev
    optimum = _optimum(instance)
    measured = best_measured_solution(instance, model, result.best_params, cfg.shots or DEFAULT_SHOTS, cfg.seed)

    row = ResultRow(
        instance=instance.label,
        model=model.label,
        optimizer=cfg.optimizer,
        eev=eev,
        optimum=optimum,
        gap=opt_gap(eev, optimum, instance.direction),
        best_params=result.best_params,
        evaluations=result.evaluations,
        seed=row_seed,
        family=instance.family,
        optimal_probability=optimal_probability(instance, model, result.best_params),
        best_bitstring=measured.bitstring,
        top_states=tuple(top_states(instance, model, result.best_params, TOP_STATES)),
    )

    duration = round(time.time() - start_time, 2)
    logger.info(f"Expérience terminée en {duration}s | eev={eev:.4f} | gap={row.gap:.4f}")
    return row


# ── Suites ────────────────────────────────────────────────────────────────────

def published_combinations(optimizers: Sequence[OptimizerKind]) -> list[tuple[str, ModelLabel, OptimizerKind]]:
    return [
        (name, model, OptimizerKind(optimizer))
        for optimizer in optimizers
        for name, model in PUBLISHED_COMBINATIONS[OptimizerKind(optimizer)]
    ]


def suite_averages(rows: Sequence[ResultRow]) -> list[SuiteAverage]:
    """Moyenne des gaps par (famille, optimiseur) — ordre de première apparition."""
    groups: dict[tuple, list[float]] = {}
    for row in rows:
        groups.setdefault((row.family, row.optimizer), []).append(row.gap)
    return [
        SuiteAverage(family=family, optimizer=optimizer, average_gap=float(np.mean(gaps)), rows=len(gaps))
        for (family, optimizer), gaps in groups.items()
    ]


def run_combinations(
    combinations: Sequence[tuple[str, ModelLabel, OptimizerKind]],
    seed: int = DEFAULT_SEED,
    points_per_dim: Optional[int] = None,
    ils: Optional[ILSConfig] = None,
    workers: int = SUITE_WORKERS,
) -> SuiteReport:
    if not combinations:
        raise ArgumentError("Suite vide : aucune combinaison instance × modèle × optimiseur")

    tracker = JobTracker()
    jobs = []
    for name, model, optimizer in combinations:
        model = ModelLabel(model)
        optimizer = OptimizerKind(optimizer)
        cfg = ExperimentConfig(
            instance=name,
            model=model,
            optimizer=optimizer,
            es=default_es_config(model, points_per_dim) if optimizer == OptimizerKind.ES else None,
            ils=ils,
            seed=seed,
        )
        jobs.append((tracker.create_job(f"{name}/{model.value}/{optimizer.value}"), cfg))

    logger.info(f"Suite | {len(jobs)} ligne(s) | workers={workers}")

    def _run_job(job_id: int, cfg: ExperimentConfig) -> None:
        tracker.start_job(job_id)
        try:
            tracker.complete_job(job_id, run_experiment(cfg))
        except Exception as e:
            logger.error(f"Ligne {tracker.get_job(job_id)['label']} échouée : {e}")
            tracker.fail_job(job_id, str(e))

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        list(pool.map(lambda job: _run_job(*job), jobs))

    stats = tracker.get_stats()
    logger.info(f"Suite terminée | {stats['done']}/{stats['total']} ligne(s) | erreurs={stats['error']}")

    failures = tracker.failures()
    if failures:
        raise SuiteError(failures)

    rows = tracker.rows_in_order()
    return SuiteReport(rows=tuple(rows), averages=tuple(suite_averages(rows)))


def run_suite(
    instances: Sequence[str],
    models: Sequence[ModelLabel],
    optimizers: Sequence[OptimizerKind],
    seed: int = DEFAULT_SEED,
    points_per_dim: Optional[int] = None,
    ils: Optional[ILSConfig] = None,
    workers: int = SUITE_WORKERS,
) -> SuiteReport:
    """Produit cartésien optimiseur × instance × modèle, dans cet ordre."""
    if not instances or not models or not optimizers:
        raise ArgumentError("run_suite : listes d'instances, de modèles et d'optimiseurs non vides requises")
    combinations = [
        (name, ModelLabel(model), OptimizerKind(optimizer))
        for optimizer in optimizers
        for name in instances
        for model in models
    ]
    return run_combinations(combinations, seed, points_per_dim, ils, workers)


# ── Paysage ───────────────────────────────────────────────────────────────────

def landscape(
    instance: ProblemInstance,
    model: AnsatzModel,
    points_per_dim: int,
    axes: tuple[int, int] = (0, 1),
    fixed: Optional[Sequence[float]] = None,
) -> list[tuple[float, float, float]]:
    """EEV exacte sur une grille 2-D de deux coordonnées, les autres figées."""
    if points_per_dim < 1:
        raise ArgumentError(f"points_per_dim >= 1 attendu (reçu {points_per_dim})")
    first, second = axes
    if first == second or not all(0 <= a < model.parameter_count for a in axes):
        raise ArgumentError(f"Axes {axes} invalides pour {model.parameter_count} paramètres")

    base = list(fixed) if fixed is not None else [0.0] * model.parameter_count
    if len(base) != model.parameter_count:
        raise ArgumentError(f"{len(base)} valeurs figées pour {model.parameter_count} paramètres")

    objective = make_eev_objective(instance, model)
    axis = grid_axis(points_per_dim)
    points = []
    for a in axis:
        for b in axis:
            values = np.array(base, dtype=float)
            values[first], values[second] = a, b
            points.append((float(a), float(b), objective(values)))
    return points
