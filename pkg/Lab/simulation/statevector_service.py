"""
==============================================================================
statevector_service.py — Simulateur statevector dense
==============================================================================
RESPONSABILITÉS :
  - Créer les états |0…0⟩ et |s⟩ = H^{⊗n}|0…0⟩
  - Appliquer le jeu de portes des circuits QAOA : H, RX, RZ, CNOT,
    phase diagonale fusionnée
  - Probabilités de mesure et échantillonnage reproductible (graine)
  - Conversions indice ↔ bitstring affiché, comparaison à phase globale près

CONVENTIONS :
  Indice little-endian — le qubit q est le bit q de l'indice de base.
  Bitstring affiché P1 à gauche : "011" = qubit 0 à 0, qubits 1 et 2 à 1.
  RX(β) = e^{+iβX} = [[cos β, i sin β], [i sin β, cos β]] (angle plein).
  RZ(θ) = diag(e^{-iθ/2}, e^{+iθ/2}) (demi-angle).

Les portes modifient le tableau d'amplitudes EN PLACE et renvoient le même
Statevector — copier l'état avant si l'original doit être conservé.
==============================================================================
"""

import math
import logging

import numpy as np

from config import MIN_QUBITS, MAX_QUBITS, NORM_TOLERANCE
from exceptions import ArgumentError, QubitIndexError, SizeError
from schemas.statevector import Statevector

logger = logging.getLogger(__name__)

_SQRT2_INV = 1.0 / math.sqrt(2.0)


# ── Validations ───────────────────────────────────────────────────────────────

def _check_size(n_qubits: int) -> None:
    if not (MIN_QUBITS <= n_qubits <= MAX_QUBITS):
        raise SizeError(
            f"Nombre de qubits hors limites : {n_qubits} "
            f"(autorisé {MIN_QUBITS}..{MAX_QUBITS})"
        )


def _check_qubit(sv: Statevector, q: int) -> None:
    if not (0 <= q < sv.n_qubits):
        raise QubitIndexError(f"Qubit {q} hors du registre de {sv.n_qubits} qubits")


def _check_angle(angle: float) -> None:
    if not math.isfinite(angle):
        raise ArgumentError(f"Angle non fini : {angle}")


# ── Noyaux sur tableaux bruts ─────────────────────────────────────────────────

def _pair_view(amplitudes: np.ndarray, n_qubits: int, q: int) -> np.ndarray:
    # Vue (haut, bit q, bas) — l'axe du milieu porte le bit q de l'indice
    return amplitudes.reshape(2 ** (n_qubits - 1 - q), 2, 2 ** q)


def apply_matrix_1q(amplitudes: np.ndarray, n_qubits: int, q: int, matrix: np.ndarray) -> None:
    view = _pair_view(amplitudes, n_qubits, q)
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :].copy()
    view[:, 0, :] = matrix[0, 0] * a0 + matrix[0, 1] * a1
    view[:, 1, :] = matrix[1, 0] * a0 + matrix[1, 1] * a1


def rx_matrix(beta: float) -> np.ndarray:
    c, s = math.cos(beta), math.sin(beta)
    return np.array([[c, 1j * s], [1j * s, c]], dtype=complex)


def rx_all_inplace(amplitudes: np.ndarray, n_qubits: int, beta: float) -> None:
    """Même RX(β) sur chaque qubit — chemin rapide du mélangeur."""
    c, s = math.cos(beta), 1j * math.sin(beta)
    for q in range(n_qubits):
        view = _pair_view(amplitudes, n_qubits, q)
        a0 = view[:, 0, :].copy()
        a1 = view[:, 1, :]
        view[:, 0, :] = c * a0 + s * a1
        view[:, 1, :] = s * a0 + c * a1


# ── Préparation ───────────────────────────────────────────────────────────────

def new_zero(n_qubits: int) -> Statevector:
    _check_size(n_qubits)
    amplitudes = np.zeros(2 ** n_qubits, dtype=complex)
    amplitudes[0] = 1.0
    return Statevector(n_qubits=n_qubits, amplitudes=amplitudes)


def new_uniform(n_qubits: int) -> Statevector:
    _check_size(n_qubits)
    dimension = 2 ** n_qubits
    amplitudes = np.full(dimension, 1.0 / math.sqrt(dimension), dtype=complex)
    return Statevector(n_qubits=n_qubits, amplitudes=amplitudes)


def basis_state(n_qubits: int, index: int) -> Statevector:
    sv = new_zero(n_qubits)
    if not (0 <= index < sv.dimension):
        raise SizeError(f"Indice de base {index} hors de [0, {sv.dimension})")
    sv.amplitudes[0] = 0.0
    sv.amplitudes[index] = 1.0
    return sv


# ── Portes ────────────────────────────────────────────────────────────────────

def apply_h(sv: Statevector, q: int) -> Statevector:
    _check_qubit(sv, q)
    view = _pair_view(sv.amplitudes, sv.n_qubits, q)
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :]
    view[:, 0, :] = (a0 + a1) * _SQRT2_INV
    view[:, 1, :] = (a0 - a1) * _SQRT2_INV
    return sv


def apply_rx(sv: Statevector, q: int, beta: float) -> Statevector:
    _check_qubit(sv, q)
    _check_angle(beta)
    apply_matrix_1q(sv.amplitudes, sv.n_qubits, q, rx_matrix(beta))
    return sv


def apply_rz(sv: Statevector, q: int, theta: float) -> Statevector:
    _check_qubit(sv, q)
    _check_angle(theta)
    view = _pair_view(sv.amplitudes, sv.n_qubits, q)
    view[:, 0, :] *= np.exp(-0.5j * theta)
    view[:, 1, :] *= np.exp(0.5j * theta)
    return sv


def apply_cnot(sv: Statevector, control: int, target: int) -> Statevector:
    _check_qubit(sv, control)
    _check_qubit(sv, target)
    if control == target:
        raise QubitIndexError(f"Contrôle et cible identiques : {control}")

    # Permutation involutive — échange des paires où le bit de contrôle vaut 1
    index = np.arange(sv.dimension)
    source = np.where((index >> control) & 1, index ^ (1 << target), index)
    sv.amplitudes[:] = sv.amplitudes[source]
    return sv


def apply_diagonal_phase(sv: Statevector, phase_per_basis: np.ndarray) -> Statevector:
    phases = np.asarray(phase_per_basis, dtype=float)
    if phases.shape != (sv.dimension,):
        raise SizeError(f"{phases.shape} phases pour un état de dimension {sv.dimension}")
    if not np.all(np.isfinite(phases)):
        raise ArgumentError("Phase non finie dans la diagonale")
    sv.amplitudes *= np.exp(1j * phases)
    return sv


# ── Mesure ────────────────────────────────────────────────────────────────────

def probabilities(sv: Statevector) -> np.ndarray:
    return np.abs(sv.amplitudes) ** 2


def multinomial_counts(amplitudes: np.ndarray, shots: int, seed: int) -> np.ndarray:
    """Noyau brut de l'échantillonnage : occurrences par indice de base, tableau dense."""
    probs = np.abs(amplitudes) ** 2
    probs = probs / probs.sum()   # Absorbe la dérive numérique de la norme
    rng = np.random.default_rng(seed)
    return rng.multinomial(shots, probs)


def sample(sv: Statevector, shots: int, seed: int) -> dict[int, int]:
    """
    Tire `shots` mesures dans la base de calcul.
    Retourne {indice de base: nombre d'occurrences}, indices absents = 0.
    """
    if shots < 1:
        raise ArgumentError(f"shots doit être >= 1 (reçu {shots})")

    counts = multinomial_counts(sv.amplitudes, shots, seed)
    return {int(index): int(count) for index, count in enumerate(counts) if count}


# ── Conversions et comparaison ────────────────────────────────────────────────

def index_to_bitstring(index: int, n_qubits: int) -> str:
    return "".join(str((index >> q) & 1) for q in range(n_qubits))


def bitstring_to_index(bits: str) -> int:
    if not bits or set(bits) - {"0", "1"}:
        raise ArgumentError(f"Bitstring invalide : '{bits}'")
    return sum(int(bit) << q for q, bit in enumerate(bits))


def global_phase_distance(a: Statevector | np.ndarray, b: Statevector | np.ndarray) -> float:
    """
    Distance L∞ après alignement des phases globales : chaque état est
    multiplié par la phase qui rend réelle positive sa première amplitude
    non nulle (repérée sur `a`).
    """
    va = a.amplitudes if isinstance(a, Statevector) else np.asarray(a)
    vb = b.amplitudes if isinstance(b, Statevector) else np.asarray(b)
    if va.shape != vb.shape:
        raise SizeError(f"Dimensions différentes : {va.shape} / {vb.shape}")

    magnitudes = np.abs(va)
    reference = int(np.argmax(magnitudes > 1e-6 * magnitudes.max()))

    def _aligned(v: np.ndarray) -> np.ndarray:
        pivot = v[reference]
        if abs(pivot) == 0.0:
            return v
        return v * (np.conj(pivot) / abs(pivot))

    return float(np.max(np.abs(_aligned(va) - _aligned(vb))))


def equal_up_to_global_phase(a: Statevector, b: Statevector, atol: float = NORM_TOLERANCE) -> bool:
    return global_phase_distance(a, b) < atol
