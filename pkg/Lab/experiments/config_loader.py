"""Chargement d'une ExperimentConfig depuis un fichier YAML."""

import logging
import os
from typing import Any

import yaml
from pydantic import ValidationError

from exceptions import ArgumentError
from schemas.experiment import ExperimentConfig

logger = logging.getLogger(__name__)


def load_experiment_config(path: str, overrides: dict[str, Any] | None = None) -> ExperimentConfig:
    """
    Lit le YAML puis applique les surcharges de la ligne de commande.
    Les surcharges à None sont ignorées — le fichier garde la main.
    """
    if not os.path.exists(path):
        raise ArgumentError(f"Fichier de configuration introuvable : {path}")

    with open(path, encoding="utf-8") as f:
        try:
            data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ArgumentError(f"{path} : YAML invalide ({e})")

    if not isinstance(data, dict):
        raise ArgumentError(f"{path} : un dictionnaire YAML est attendu à la racine")

    data.update({key: value for key, value in (overrides or {}).items() if value is not None})
    try:
        cfg = ExperimentConfig.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ArgumentError(f"{path} : {location} — {first['msg']}")

    logger.info(f"Configuration chargée | path={path} | instance={cfg.instance} | optimiseur={cfg.optimizer.value}")
    return cfg
