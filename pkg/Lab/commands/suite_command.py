import logging
from typing import List, Optional

import typer

from commands.errors import cli_errors
from config import DEFAULT_SEED, SUITE_WORKERS
from experiments.emit_service import emit
from experiments.registry import REGISTRY_ORDER
from experiments.runner_service import published_combinations, run_combinations, run_suite
from schemas.experiment import OptimizerKind, OutputFormat
from schemas.qaoa import ModelLabel

logger = logging.getLogger(__name__)


def suite(
    optimizer: Optional[List[OptimizerKind]] = typer.Option(None, "--optimizer", help="Répétable — es et ils par défaut"),
    instance: Optional[List[str]] = typer.Option(None, "--instance", help="Répétable — combinaisons publiées par défaut"),
    model: Optional[List[ModelLabel]] = typer.Option(None, "--model", help="Répétable — avec --instance"),
    seed: int = typer.Option(DEFAULT_SEED, "--seed"),
    points_per_dim: Optional[int] = typer.Option(None, "--points-per-dim", min=1, help="Grille ES commune à tous les modèles"),
    workers: int = typer.Option(SUITE_WORKERS, "--workers", min=1, help="Lignes exécutées en parallèle"),
    output: OutputFormat = typer.Option(OutputFormat.TABLE, "--format"),
    out: Optional[str] = typer.Option(None, "--out"),
):
    """Reproduction des tableaux ES / ILS et de leurs moyennes par famille."""
    with cli_errors():
        optimizers = optimizer or [OptimizerKind.ES, OptimizerKind.ILS]

        if instance or model:
            # Instances ou modèles explicites : produit cartésien complet
            report = run_suite(
                instances=instance or list(REGISTRY_ORDER),
                models=model or [ModelLabel.P2],
                optimizers=optimizers,
                seed=seed,
                points_per_dim=points_per_dim,
                workers=workers,
            )
        else:
            report = run_combinations(
                published_combinations(optimizers),
                seed=seed,
                points_per_dim=points_per_dim,
                workers=workers,
            )

        emit(report.rows, output, out, averages=report.averages)
