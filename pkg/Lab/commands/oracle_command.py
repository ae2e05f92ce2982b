import typer
from rich.console import Console
from rich.table import Table

from commands.errors import cli_errors
from experiments.registry import resolve_instance
from problems.problem_service import oracle_optimum


def oracle(
    instance: str = typer.Option(..., "--instance", help="Nom du registre ou chemin d'un fichier d'instance"),
):
    """Optimum exact et ensemble des états optimaux, par énumération des 2^n affectations."""
    with cli_errors():
        problem = resolve_instance(instance)
        result = oracle_optimum(problem)

        table = Table(title=f"Oracle — {problem.label}")
        table.add_column("Sens")
        table.add_column("Optimum", justify="right")
        table.add_column("États optimaux (P1 à gauche)")
        table.add_row(problem.direction.value, f"{result.value:g}", " ".join(result.argopt))
        Console().print(table)
