"""
Lecture / écriture des fichiers d'instance (texte UTF-8, une clé=valeur par ligne).

    family=maxcut|ising
    topology=linear|cyclic|complete
    n=<entier>
    j=<réel>              # couplage uniforme, 1.0 par défaut
    j_edges=i,j,valeur    # couplage d'une arête — répétable
    h=<liste>             # ising uniquement, n valeurs séparées par des virgules
    optimum=<réel>        # optimum déclaré, vérifié par l'oracle au chargement
    name=<libellé>        # optionnel

Les commentaires commencent par '#'. Toute erreur de syntaxe nomme sa ligne.
"""

import logging
import math
import os
from typing import Optional

from pydantic import ValidationError

from config import DEFAULT_COUPLING
from exceptions import ArgumentError, InstanceParseError, IntegrityError
from problems.problem_service import build_topology, oracle_optimum
from schemas.problem import Family, FAMILY_DIRECTION, ProblemInstance, TopologyKind

logger = logging.getLogger(__name__)

_SCALAR_KEYS = {"family", "topology", "n", "j", "h", "optimum", "name"}
_OPTIMUM_TOLERANCE = 1e-9


def _parse_float(text: str, line_number: int, line: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise InstanceParseError(f"réel invalide '{text}'", line_number, line)
    if not math.isfinite(value):
        raise InstanceParseError(f"valeur non finie '{text}'", line_number, line)
    return value


def parse_instance(text: str, verify: bool = True) -> ProblemInstance:
    values: dict[str, tuple[str, int, str]] = {}
    edge_overrides: list[tuple[str, int, str]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if "=" not in content:
            raise InstanceParseError("'clé=valeur' attendu", line_number, raw)

        key, value = (part.strip() for part in content.split("=", 1))
        if key == "j_edges":
            edge_overrides.append((value, line_number, raw))
        elif key in _SCALAR_KEYS:
            if key in values:
                raise InstanceParseError(f"clé '{key}' répétée", line_number, raw)
            values[key] = (value, line_number, raw)
        else:
            raise InstanceParseError(f"clé inconnue '{key}'", line_number, raw)

    for required in ("family", "topology", "n"):
        if required not in values:
            raise InstanceParseError(f"clé obligatoire absente : '{required}'")

    family_text, family_line, family_raw = values["family"]
    try:
        family = Family(family_text)
    except ValueError:
        raise InstanceParseError(f"famille inconnue '{family_text}'", family_line, family_raw)

    kind_text, kind_line, kind_raw = values["topology"]
    try:
        kind = TopologyKind(kind_text)
    except ValueError:
        raise InstanceParseError(f"topologie inconnue '{kind_text}'", kind_line, kind_raw)

    n_text, n_line, n_raw = values["n"]
    try:
        n_nodes = int(n_text)
        topology = build_topology(kind, n_nodes)
    except (ValueError, ArgumentError) as e:
        raise InstanceParseError(str(e), n_line, n_raw)

    # Couplage uniforme puis surcharges arête par arête
    uniform = DEFAULT_COUPLING
    if "j" in values:
        uniform = _parse_float(*values["j"])
    couplings = {edge: uniform for edge in topology.edges}

    for value, line_number, raw in edge_overrides:
        parts = [p.strip() for p in value.split(",")]
        if len(parts) != 3:
            raise InstanceParseError("j_edges attend 'i,j,valeur'", line_number, raw)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise InstanceParseError(f"nœuds invalides '{parts[0]},{parts[1]}'", line_number, raw)
        edge = (min(i, j), max(i, j))
        if edge not in couplings:
            raise InstanceParseError(f"({i}, {j}) n'est pas une arête de la topologie", line_number, raw)
        couplings[edge] = _parse_float(parts[2], line_number, raw)

    fields: Optional[tuple[float, ...]] = None
    if "h" in values:
        h_text, h_line, h_raw = values["h"]
        if family != Family.ISING:
            raise InstanceParseError("h n'est autorisé que pour family=ising", h_line, h_raw)
        fields = tuple(_parse_float(part.strip(), h_line, h_raw) for part in h_text.split(","))
        if len(fields) != n_nodes:
            raise InstanceParseError(f"{len(fields)} valeurs h pour {n_nodes} nœuds", h_line, h_raw)
    elif family == Family.ISING:
        raise InstanceParseError("family=ising exige une ligne h=")

    declared = _parse_float(*values["optimum"]) if "optimum" in values else None
    name = values["name"][0] if "name" in values else None

    try:
        instance = ProblemInstance(
            name=name,
            topology=topology,
            family=family,
            couplings=tuple(couplings[edge] for edge in topology.edges),
            fields=fields,
            direction=FAMILY_DIRECTION[family],
            declared_optimum=declared,
        )
    except ValidationError as e:
        raise InstanceParseError(f"instance invalide : {e.errors()[0]['msg']}")

    if verify:
        verify_declared_optimum(instance)
    return instance


def verify_declared_optimum(instance: ProblemInstance) -> None:
    if instance.declared_optimum is None:
        return
    oracle = oracle_optimum(instance)
    if abs(oracle.value - instance.declared_optimum) > _OPTIMUM_TOLERANCE:
        raise IntegrityError(
            f"{instance.label} : optimum déclaré {instance.declared_optimum} "
            f"≠ optimum oracle {oracle.value}"
        )


def load_instance(path: str) -> ProblemInstance:
    if not os.path.exists(path):
        raise ArgumentError(f"Fichier d'instance introuvable : {path}")
    with open(path, encoding="utf-8") as f:
        text = f.read()

    try:
        instance = parse_instance(text)
    except InstanceParseError as e:
        # Préfixe le chemin — la ligne est déjà dans le message
        raise InstanceParseError(f"{path} : {e}")

    if instance.name is None:
        stem = os.path.splitext(os.path.basename(path))[0]
        instance = instance.model_copy(update={"name": stem})
    logger.info(f"Instance chargée : {instance.label} ({path})")
    return instance


def dump_instance(instance: ProblemInstance) -> str:
    lines = []
    if instance.name:
        lines.append(f"name={instance.name}")
    lines += [
        f"family={instance.family.value}",
        f"topology={instance.topology.kind.value}",
        f"n={instance.n_nodes}",
    ]

    distinct = set(instance.couplings)
    if len(distinct) == 1:
        lines.append(f"j={instance.couplings[0]!r}")
    else:
        for (i, j), value in zip(instance.topology.edges, instance.couplings):
            lines.append(f"j_edges={i},{j},{value!r}")

    if instance.fields is not None:
        lines.append("h=" + ",".join(repr(h) for h in instance.fields))
    if instance.declared_optimum is not None:
        lines.append(f"optimum={instance.declared_optimum!r}")
    return "\n".join(lines) + "\n"
