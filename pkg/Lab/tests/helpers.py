import numpy as np

from schemas.statevector import Statevector


def random_state(n_qubits: int, seed: int) -> Statevector:
    """État normalisé aléatoire — entrée des tests de propriétés."""
    rng = np.random.default_rng(seed)
    amplitudes = rng.normal(size=2 ** n_qubits) + 1j * rng.normal(size=2 ** n_qubits)
    amplitudes /= np.linalg.norm(amplitudes)
    return Statevector(n_qubits=n_qubits, amplitudes=amplitudes)
