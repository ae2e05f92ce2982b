import logging

from config import LOG_LEVEL

# Logging initialisé en premier pour capturer les erreurs d'import éventuelles
logging.basicConfig(
    level=LOG_LEVEL,
    format="%(asctime)s | %(name)s | %(levelname)s | %(message)s"
)
logger = logging.getLogger(__name__)

import typer

from commands.circuit_command import circuit
from commands.landscape_command import landscape_cmd
from commands.oracle_command import oracle
from commands.run_command import run
from commands.suite_command import suite

app = typer.Typer(
    name="qaoa-lab",
    help="Laboratoire QAOA — Max-Cut et modèle d'Ising, recherche exhaustive et ILS",
    no_args_is_help=True,
    add_completion=False,
)

# Enregistrement des sous-commandes — chaque module gère ses propres options
app.command(name="run")(run)
app.command(name="suite")(suite)
app.command(name="oracle")(oracle)
app.command(name="landscape")(landscape_cmd)
app.command(name="circuit")(circuit)


if __name__ == "__main__":
    app()
