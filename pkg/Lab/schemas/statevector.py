import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator


class Statevector(BaseModel):
    """
    Registre de n qubits sous forme d'amplitudes complexes denses.

    Convention little-endian : le qubit q correspond au bit q de l'indice
    de base (qubit 0 = bit de poids faible, nœud P1 du graphe = qubit 0).
    Les portes de simulation/statevector_service.py modifient `amplitudes`
    en place — chaque appelant possède son propre état.
    """
    # ndarray n'est pas un type pydantic — vérification isinstance uniquement
    model_config = ConfigDict(arbitrary_types_allowed=True)

    n_qubits: int
    amplitudes: np.ndarray

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _as_complex(cls, value) -> np.ndarray:
        # Sans copie si le tableau est déjà complexe : les portes restent en place
        return np.asarray(value, dtype=complex)

    @model_validator(mode="after")
    def _check_dimension(self) -> "Statevector":
        if self.amplitudes.shape != (2 ** self.n_qubits,):
            raise ValueError(
                f"{self.amplitudes.shape[0]} amplitudes pour {self.n_qubits} qubits "
                f"(attendu {2 ** self.n_qubits})"
            )
        return self

    @property
    def dimension(self) -> int:
        return self.amplitudes.shape[0]

    def copy(self) -> "Statevector":
        return Statevector(n_qubits=self.n_qubits, amplitudes=self.amplitudes.copy())
