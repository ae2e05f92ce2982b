import logging
from typing import Optional

import typer

from commands.errors import cli_errors
from config import DEFAULT_SEED
from exceptions import ArgumentError
from experiments.config_loader import load_experiment_config
from experiments.emit_service import emit
from experiments.runner_service import default_es_config, run_experiment
from schemas.experiment import ExperimentConfig, OptimizerKind, OutputFormat
from schemas.qaoa import Backend, ModelLabel

logger = logging.getLogger(__name__)


def run(
    instance: Optional[str] = typer.Option(None, "--instance", help="Nom du registre ou chemin d'un fichier d'instance"),
    model: Optional[ModelLabel] = typer.Option(None, "--model", help="Modèle d'ansatz"),
    optimizer: Optional[OptimizerKind] = typer.Option(None, "--optimizer", help="es ou ils"),
    points_per_dim: Optional[int] = typer.Option(None, "--points-per-dim", min=1, help="Résolution de la grille ES"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Graine (ILS et backend échantillonné)"),
    shots: Optional[int] = typer.Option(None, "--shots", min=1, help="Optimise sur l'EEV échantillonnée"),
    output: Optional[OutputFormat] = typer.Option(None, "--format", help="csv ou table"),
    out: Optional[str] = typer.Option(None, "--out", help="Fichier de sortie (console sinon)"),
    config: Optional[str] = typer.Option(None, "--config", help="ExperimentConfig YAML ; les options la surchargent"),
):
    """Une expérience : instance × modèle × optimiseur → une ligne de résultat."""
    with cli_errors():
        overrides = {
            "instance": instance,
            "model": model,
            "optimizer": optimizer,
            "seed": seed,
            "shots": shots,
            "backend": Backend.SAMPLED if shots is not None else None,
            "output": output,
            "out": out,
        }

        if config:
            cfg = load_experiment_config(config, overrides)
        else:
            if instance is None:
                raise ArgumentError("--instance est obligatoire sans --config")
            cfg = ExperimentConfig(
                instance=instance,
                model=model or ModelLabel.P2,
                optimizer=optimizer or OptimizerKind.ES,
                seed=DEFAULT_SEED if seed is None else seed,
                shots=shots,
                backend=Backend.SAMPLED if shots is not None else Backend.EXACT,
                output=output or OutputFormat.TABLE,
                out=out,
            )

        if points_per_dim is not None:
            cfg = cfg.model_copy(update={"es": default_es_config(cfg.model, points_per_dim)})

        row = run_experiment(cfg)
        emit([row], cfg.output, cfg.out)
