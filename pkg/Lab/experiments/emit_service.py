"""
==============================================================================
emit_service.py — Sortie des résultats (CSV ou tableau console)
==============================================================================
CSV : colonnes fixes, une ligne par ResultRow, aucun horodatage — deux
exécutions avec la même graine produisent des fichiers identiques octet
pour octet.

    instance,model,optimizer,eev,optimum,gap,evaluations,seed,params

  - réels écrits avec repr() (relecture exacte)
  - params : angles en radians séparés par ';', 6 décimales
  - seed vide quand l'expérience est déterministe (ES exact)

Console : tableaux rich au format des compilations ES / ILS
(EEV Local, Optimum, Opt-Loc) et des moyennes par famille.
==============================================================================
"""

import csv
import io
import logging
import os
import sys
from typing import Optional, Sequence

from rich.console import Console
from rich.table import Table

from config import PARAMS_DECIMALS
from exceptions import ArgumentError, EmitError
from schemas.experiment import OptimizerKind, OutputFormat, ResultRow, SuiteAverage
from schemas.problem import Family
from schemas.qaoa import ModelLabel

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("instance", "model", "optimizer", "eev", "optimum", "gap", "evaluations", "seed", "params")
LANDSCAPE_COLUMNS = ("x", "y", "eev")

_OPTIMIZER_TITLES = {
    OptimizerKind.ES:  "Recherche exhaustive (ES)",
    OptimizerKind.ILS: "Recherche locale itérée (ILS)",
}
_FAMILY_TITLES = {
    Family.ISING:  "ISM",
    Family.MAXCUT: "Max-Cut",
}


# ── CSV ───────────────────────────────────────────────────────────────────────

def _format_params(params: Sequence[float]) -> str:
    return ";".join(f"{p:.{PARAMS_DECIMALS}f}" for p in params)


def rows_to_csv(rows: Sequence[ResultRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([
            row.instance,
            row.model.value,
            row.optimizer.value,
            repr(row.eev),
            repr(row.optimum),
            repr(row.gap),
            row.evaluations,
            "" if row.seed is None else row.seed,
            _format_params(row.best_params),
        ])
    return buffer.getvalue()


def parse_csv(text: str) -> list[ResultRow]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ArgumentError(f"En-tête CSV inattendu : {reader.fieldnames}")

    rows = []
    for record in reader:
        rows.append(ResultRow(
            instance=record["instance"],
            model=ModelLabel(record["model"]),
            optimizer=OptimizerKind(record["optimizer"]),
            eev=float(record["eev"]),
            optimum=float(record["optimum"]),
            gap=float(record["gap"]),
            evaluations=int(record["evaluations"]),
            seed=int(record["seed"]) if record["seed"] else None,
            best_params=tuple(float(p) for p in record["params"].split(";") if p),
        ))
    return rows


def landscape_to_csv(points: Sequence[tuple[float, float, float]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(LANDSCAPE_COLUMNS)
    for x, y, eev in points:
        writer.writerow([f"{x:.{PARAMS_DECIMALS}f}", f"{y:.{PARAMS_DECIMALS}f}", repr(eev)])
    return buffer.getvalue()


def write_text(text: str, path: str) -> None:
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        raise EmitError(f"Écriture impossible vers {path} : {e.strerror or e}")
    logger.info(f"Résultats écrits | path={path} | octets={len(text.encode('utf-8'))}")


# ── Tableaux console ──────────────────────────────────────────────────────────

def results_table(rows: Sequence[ResultRow], title: Optional[str] = None) -> Table:
    table = Table(title=title)
    table.add_column("Instance")
    table.add_column("Modèle")
    table.add_column("EEV Local", justify="right")
    table.add_column("Optimum", justify="right")
    table.add_column("Opt-Loc", justify="right")
    table.add_column("P(optimum)", justify="right")
    table.add_column("Meilleure mesure")
    table.add_column("Paramètres")
    table.add_column("Évals", justify="right")

    for row in rows:
        table.add_row(
            row.instance,
            row.model.value,
            f"{row.eev:.4f}",
            f"{row.optimum:g}",
            f"{row.gap:.4f}",
            "" if row.optimal_probability is None else f"{row.optimal_probability:.3f}",
            row.best_bitstring or "",
            ", ".join(f"{p:.3f}" for p in row.best_params),
            str(row.evaluations),
        )
    return table


def averages_table(averages: Sequence[SuiteAverage]) -> Table:
    table = Table(title="Moyennes Opt-Loc par famille")
    table.add_column("Optimiseur")
    table.add_column("Famille")
    table.add_column("Lignes", justify="right")
    table.add_column("Opt-Loc moyen", justify="right")
    for average in averages:
        table.add_row(
            average.optimizer.value.upper(),
            _FAMILY_TITLES[average.family],
            str(average.rows),
            f"{average.average_gap:.4f}",
        )
    return table


def top_states_table(row: ResultRow) -> Table:
    table = Table(title=f"États les plus probables — {row.instance} {row.model.value}")
    table.add_column("|z⟩")
    table.add_column("Probabilité", justify="right")
    table.add_column("C(z)", justify="right")
    table.add_column("Optimal")
    for state in row.top_states:
        table.add_row(
            state.bitstring,
            f"{state.probability:.4f}",
            f"{state.cost:g}",
            "oui" if state.optimal else "",
        )
    return table


def render(
    rows: Sequence[ResultRow],
    averages: Sequence[SuiteAverage] = (),
    console: Optional[Console] = None,
) -> None:
    console = console or Console()
    # Un tableau par optimiseur, dans l'ordre d'apparition
    optimizers = list(dict.fromkeys(row.optimizer for row in rows))
    for optimizer in optimizers:
        subset = [row for row in rows if row.optimizer == optimizer]
        console.print(results_table(subset, title=_OPTIMIZER_TITLES[optimizer]))
    if len(rows) == 1 and rows[0].top_states:
        console.print(top_states_table(rows[0]))
    if averages:
        console.print(averages_table(averages))


def emit(
    rows: Sequence[ResultRow],
    output: OutputFormat,
    path: Optional[str] = None,
    averages: Sequence[SuiteAverage] = (),
    console: Optional[Console] = None,
) -> None:
    if OutputFormat(output) == OutputFormat.CSV:
        text = rows_to_csv(rows)
        if path:
            write_text(text, path)
        else:
            sys.stdout.write(text)
        return

    if path:
        # Tableau rendu en texte brut dans le fichier
        with io.StringIO() as buffer:
            render(rows, averages, Console(file=buffer, width=160, color_system=None))
            write_text(buffer.getvalue(), path)
        return
    render(rows, averages, console)
