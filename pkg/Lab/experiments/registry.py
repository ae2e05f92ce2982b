"""
Registre des six instances publiées, chargées depuis instances/*.txt.

Chaque optimum déclaré est confirmé par l'oracle au premier accès —
une divergence lève IntegrityError avant toute expérience.
"""

import logging
import os
from functools import lru_cache

from config import INSTANCES_DIR
from exceptions import LookupFailure
from problems.instance_parser import load_instance
from schemas.experiment import OptimizerKind
from schemas.problem import ProblemInstance
from schemas.qaoa import ModelLabel

logger = logging.getLogger(__name__)

# Ordre des tableaux de résultats : ISM puis Max-Cut, tailles croissantes
REGISTRY_ORDER = (
    "ism-3-linear",
    "ism-4-cyclic",
    "ism-5-complete",
    "maxcut-3-linear",
    "maxcut-4-cyclic",
    "maxcut-5-complete",
)

# Combinaisons imprimées dans les tableaux ES et ILS — l'ILS ajoute P4 sur ism-4-cyclic
PUBLISHED_COMBINATIONS: dict[OptimizerKind, tuple[tuple[str, ModelLabel], ...]] = {
    OptimizerKind.ES: (
        ("ism-3-linear", ModelLabel.P2),
        ("ism-4-cyclic", ModelLabel.P2),
        ("ism-4-cyclic", ModelLabel.P3),
        ("ism-5-complete", ModelLabel.P2),
        ("ism-5-complete", ModelLabel.P3),
        ("ism-5-complete", ModelLabel.P4),
        ("maxcut-3-linear", ModelLabel.P2),
        ("maxcut-4-cyclic", ModelLabel.P2),
        ("maxcut-4-cyclic", ModelLabel.P3),
        ("maxcut-4-cyclic", ModelLabel.P4),
        ("maxcut-5-complete", ModelLabel.P2),
        ("maxcut-5-complete", ModelLabel.P3),
        ("maxcut-5-complete", ModelLabel.P4),
    ),
    OptimizerKind.ILS: (
        ("ism-3-linear", ModelLabel.P2),
        ("ism-4-cyclic", ModelLabel.P2),
        ("ism-4-cyclic", ModelLabel.P3),
        ("ism-4-cyclic", ModelLabel.P4),
        ("ism-5-complete", ModelLabel.P2),
        ("ism-5-complete", ModelLabel.P3),
        ("ism-5-complete", ModelLabel.P4),
        ("maxcut-3-linear", ModelLabel.P2),
        ("maxcut-4-cyclic", ModelLabel.P2),
        ("maxcut-4-cyclic", ModelLabel.P3),
        ("maxcut-4-cyclic", ModelLabel.P4),
        ("maxcut-5-complete", ModelLabel.P2),
        ("maxcut-5-complete", ModelLabel.P3),
        ("maxcut-5-complete", ModelLabel.P4),
    ),
}


@lru_cache(maxsize=1)
def registry() -> dict[str, ProblemInstance]:
    instances = {}
    for name in REGISTRY_ORDER:
        instances[name] = load_instance(os.path.join(INSTANCES_DIR, f"{name}.txt"))
    logger.info(f"Registre prêt : {len(instances)} instances vérifiées par l'oracle")
    return instances


def get_instance(name: str) -> ProblemInstance:
    instances = registry()
    if name not in instances:
        raise LookupFailure(f"Instance inconnue : '{name}'. Disponibles : {', '.join(REGISTRY_ORDER)}")
    return instances[name]


def resolve_instance(selector: str) -> ProblemInstance:
    # Nom du registre en priorité, sinon chemin de fichier
    if selector in REGISTRY_ORDER:
        return get_instance(selector)
    if os.path.exists(selector):
        return load_instance(selector)
    return get_instance(selector)
