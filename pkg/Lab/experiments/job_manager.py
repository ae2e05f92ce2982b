"""
==============================================================================
job_manager.py — Suivi d'état des lignes d'une suite d'expériences
==============================================================================
RESPONSABILITÉS :
  - Créer un job par ligne (instance × modèle × optimiseur)
  - Mettre à jour le statut de chaque job depuis les threads d'exécution
  - Conserver la ligne produite ou le message d'erreur
  - Restituer les résultats dans l'ordre de déclaration, pas de complétion

CYCLE DE VIE D'UN JOB :
  PENDING → PROCESSING → DONE
  PENDING → PROCESSING → ERROR
==============================================================================
"""

import time
import threading
import logging
from enum import Enum
from typing import Any, Dict, Optional

from schemas.experiment import ResultRow

logger = logging.getLogger(__name__)


class JobStatus(str, Enum):
    """États d'une ligne de suite — la valeur sert de clé dans get_stats()."""
    PENDING    = "pending"
    PROCESSING = "processing"
    DONE       = "done"
    ERROR      = "error"


class JobTracker:
    """
    Registre en mémoire des jobs d'UNE suite.

    Les jobs sont numérotés dans l'ordre de création — c'est l'ordre du
    produit cartésien déclaré, réutilisé pour sérialiser la sortie.
    """

    def __init__(self) -> None:
        self._jobs: Dict[int, Dict[str, Any]] = {}
        # Mutex — les lignes s'exécutent dans un pool de threads
        self._lock = threading.Lock()

    def create_job(self, label: str) -> int:
        with self._lock:
            job_id = len(self._jobs)
            self._jobs[job_id] = {
                "job_id":      job_id,
                "label":       label,
                "status":      JobStatus.PENDING,
                "created_at":  time.time(),
                "finished_at": None,
                "row":         None,
                "error":       None,
            }
        return job_id

    def get_job(self, job_id: int) -> Optional[Dict[str, Any]]:
        # Copie — évite les mutations hors verrou
        with self._lock:
            job = self._jobs.get(job_id)
            return dict(job) if job else None

    def start_job(self, job_id: int) -> None:
        with self._lock:
            if job_id not in self._jobs:
                return
            self._jobs[job_id]["status"] = JobStatus.PROCESSING

    def complete_job(self, job_id: int, row: ResultRow) -> None:
        with self._lock:
            if job_id not in self._jobs:
                return
            self._jobs[job_id]["status"]      = JobStatus.DONE
            self._jobs[job_id]["row"]         = row
            self._jobs[job_id]["finished_at"] = time.time()

    def fail_job(self, job_id: int, error_message: str) -> None:
        with self._lock:
            if job_id not in self._jobs:
                return
            self._jobs[job_id]["status"]      = JobStatus.ERROR
            self._jobs[job_id]["error"]       = error_message
            self._jobs[job_id]["finished_at"] = time.time()

    def rows_in_order(self) -> list[ResultRow]:
        with self._lock:
            return [
                self._jobs[job_id]["row"]
                for job_id in sorted(self._jobs)
                if self._jobs[job_id]["status"] == JobStatus.DONE
            ]

    def failures(self) -> list[tuple[str, str]]:
        with self._lock:
            return [
                (job["label"], job["error"])
                for _, job in sorted(self._jobs.items())
                if job["status"] == JobStatus.ERROR
            ]

    def get_stats(self) -> Dict[str, int]:
        """
        Snapshot des compteurs par statut, ex. :
            {"total": 13, "pending": 0, "processing": 2, "done": 10, "error": 1}
        """
        with self._lock:
            stats: Dict[str, int] = {
                "total":      len(self._jobs),
                "pending":    0,
                "processing": 0,
                "done":       0,
                "error":      0,
            }
            for job in self._jobs.values():
                stats[job["status"].value] += 1
        return stats
