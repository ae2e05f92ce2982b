import sys
from typing import List, Optional

import typer

from commands.errors import cli_errors
from exceptions import ArgumentError
from experiments.emit_service import landscape_to_csv, write_text
from experiments.registry import resolve_instance
from experiments.runner_service import landscape
from schemas.qaoa import AnsatzModel, ModelLabel


def landscape_cmd(
    instance: str = typer.Option(..., "--instance"),
    model: ModelLabel = typer.Option(ModelLabel.P2, "--model"),
    points_per_dim: int = typer.Option(32, "--points-per-dim", min=1),
    axes: Optional[str] = typer.Option(None, "--axes", help="Deux indices de paramètres, ex. '0,1'"),
    fixed: Optional[List[float]] = typer.Option(None, "--fixed", help="Répétable — valeur de chaque paramètre hors axes"),
    out: Optional[str] = typer.Option(None, "--out", help="Fichier CSV (stdout sinon)"),
):
    """EEV exacte sur une grille 2-D, en CSV x,y,eev pour tracé externe."""
    with cli_errors():
        selected = (0, 1)
        if axes:
            try:
                first, second = (int(part) for part in axes.split(","))
            except ValueError:
                raise ArgumentError(f"--axes attend deux entiers 'i,j' (reçu '{axes}')")
            selected = (first, second)

        points = landscape(
            resolve_instance(instance),
            AnsatzModel.from_label(model),
            points_per_dim,
            axes=selected,
            fixed=fixed or None,
        )
        text = landscape_to_csv(points)
        if out:
            write_text(text, out)
        else:
            sys.stdout.write(text)
