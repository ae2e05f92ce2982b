from typing import List

import typer

from commands.errors import cli_errors
from experiments.registry import resolve_instance
from qaoa.circuit_builder import build_circuit, format_circuit
from schemas.qaoa import AnsatzModel, ModelLabel


def circuit(
    instance: str = typer.Option(..., "--instance"),
    model: ModelLabel = typer.Option(ModelLabel.P2, "--model"),
    param: List[float] = typer.Option(..., "--param", help="Répétable — un angle par paramètre du modèle, en radians"),
):
    """Liste ordonnée des portes : colonne H, blocs CNOT–RZ–CNOT, RZ de champ, colonne RX."""
    with cli_errors():
        gates = build_circuit(resolve_instance(instance), AnsatzModel.from_label(model), param)
        for line in format_circuit(gates):
            typer.echo(line)
