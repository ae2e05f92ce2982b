import logging
from contextlib import contextmanager

import typer

from exceptions import LabError

logger = logging.getLogger(__name__)


@contextmanager
def cli_errors():
    """Traduit LabError / OSError en une ligne sur stderr et code de sortie 1."""
    try:
        yield
    except (LabError, OSError) as e:
        logger.error(f"{type(e).__name__} : {e}")
        typer.echo(f"erreur : {e}", err=True)
        raise typer.Exit(code=1)
