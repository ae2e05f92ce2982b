"""
Hiérarchie d'erreurs du laboratoire.

Chaque classe hérite aussi de l'exception native correspondante — un appelant
peut attraper `ValueError` ou `SizeError` indifféremment.
La couche CLI (commands/) attrape `LabError` et la traduit en code de sortie 1.
"""


class LabError(Exception):
    pass


class SizeError(LabError, ValueError):
    """Nombre de qubits hors limites ou tableau de mauvaise longueur."""


class QubitIndexError(LabError, IndexError):
    """Indice de qubit hors registre, ou contrôle == cible."""


class ArgumentError(LabError, ValueError):
    pass


class UsageError(LabError, TypeError):
    """Opération appelée sur la mauvaise famille de problème."""


class BudgetError(LabError, RuntimeError):
    pass


class LookupFailure(LabError, LookupError):
    pass


class IntegrityError(LabError, RuntimeError):
    """Optimum déclaré différent de l'optimum calculé par l'oracle."""


class InstanceParseError(LabError, ValueError):
    def __init__(self, reason: str, line_number: int | None = None, line: str | None = None):
        self.line_number = line_number
        self.line = line
        if line_number is None:
            super().__init__(reason)
        else:
            super().__init__(f"ligne {line_number} : {reason} — « {(line or '').strip()} »")


class EmitError(LabError, OSError):
    pass


class SuiteError(LabError, RuntimeError):
    def __init__(self, failures: list[tuple[str, str]]):
        self.failures = failures
        details = "; ".join(f"{label} → {error}" for label, error in failures)
        super().__init__(f"{len(failures)} ligne(s) en échec : {details}")
