"""
==============================================================================
qaoa_service.py — Préparation de |ψ_γβ⟩ et valeur d'énergie attendue (EEV)
==============================================================================
RESPONSABILITÉS :
  - Opérateur de phase U(C,γ) = e^{−iγC} : diagonale fusionnée ou portes
  - Opérateur de mélange U(B,β) = Π_q RX_q(β), RX(β) = e^{+iβX}
  - Préparation de l'état selon le modèle P2 / P3 / P4 à partir de |s⟩
  - EEV exacte (Σ p(z)·C(z)) et EEV échantillonnée (moyenne sur les mesures)
  - Lecture du résultat : états les plus probables, probabilité de l'optimum,
    meilleure solution mesurée

C(z) est la diagonale d'évaluation : nombre d'arêtes coupées (Max-Cut) ou
énergie ISM — les mêmes valeurs que la colonne Optimum.
==============================================================================
"""

import logging
from typing import Sequence

import numpy as np

from exceptions import ArgumentError, SizeError
from problems.problem_service import cost_diagonal, oracle_optimum
from qaoa.circuit_builder import mixing_gates, phase_gates, run_gates
from schemas.problem import Direction, ProblemInstance
from schemas.qaoa import (
    AnsatzModel,
    Backend,
    EEVReport,
    LayerKind,
    MeasuredSolution,
    ParameterPoint,
    PhaseMode,
    StateProbability,
)
from schemas.statevector import Statevector
from simulation.statevector_service import (
    apply_diagonal_phase,
    bitstring_to_index,
    index_to_bitstring,
    new_uniform,
    probabilities,
    rx_all_inplace,
    sample,
)

logger = logging.getLogger(__name__)


def _values(model: AnsatzModel, params: ParameterPoint | Sequence[float]) -> tuple[float, ...]:
    values = params.values if isinstance(params, ParameterPoint) else tuple(float(v) for v in params)
    if len(values) != model.parameter_count:
        raise ArgumentError(
            f"Modèle {model.label.value} : {model.parameter_count} paramètres attendus, "
            f"{len(values)} reçus"
        )
    return values


# ── Opérateurs ────────────────────────────────────────────────────────────────

def apply_phase_operator(
    sv: Statevector,
    instance: ProblemInstance,
    gamma: float,
    mode: PhaseMode = PhaseMode.FUSED,
) -> Statevector:
    if sv.n_qubits != instance.n_nodes:
        raise SizeError(f"État de {sv.n_qubits} qubits pour une instance de {instance.n_nodes} nœuds")

    if PhaseMode(mode) == PhaseMode.FUSED:
        return apply_diagonal_phase(sv, -gamma * cost_diagonal(instance))
    return run_gates(sv, phase_gates(instance, gamma))


def apply_mixing_operator(sv: Statevector, beta: float) -> Statevector:
    return run_gates(sv, mixing_gates(sv.n_qubits, beta))


def prepare_state(
    instance: ProblemInstance,
    model: AnsatzModel,
    params: ParameterPoint | Sequence[float],
    mode: PhaseMode = PhaseMode.FUSED,
) -> Statevector:
    values = _values(model, params)
    sv = new_uniform(instance.n_nodes)
    for layer, angle in zip(model.schedule, values):
        if layer == LayerKind.PHASE:
            apply_phase_operator(sv, instance, angle, mode)
        else:
            apply_mixing_operator(sv, angle)
    return sv


def evolve_amplitudes(
    diagonal: np.ndarray,
    n_qubits: int,
    schedule: Sequence[LayerKind],
    values: Sequence[float],
) -> np.ndarray:
    """
    Chemin rapide des optimiseurs : mêmes opérations que prepare_state
    sur un tableau brut, sans validation ni objets intermédiaires.
    """
    amplitudes = np.full(2 ** n_qubits, 2.0 ** (-n_qubits / 2), dtype=complex)
    for layer, angle in zip(schedule, values):
        if layer == LayerKind.PHASE:
            amplitudes *= np.exp(-1j * angle * diagonal)
        else:
            rx_all_inplace(amplitudes, n_qubits, angle)
    return amplitudes


# ── Valeur attendue ───────────────────────────────────────────────────────────

def exact_expectation(
    instance: ProblemInstance,
    model: AnsatzModel,
    params: ParameterPoint | Sequence[float],
) -> EEVReport:
    sv = prepare_state(instance, model, params)
    eev = float(probabilities(sv) @ cost_diagonal(instance))
    return EEVReport(eev=eev, method=Backend.EXACT)


def estimate_from_state(sv: Statevector, diagonal: np.ndarray, shots: int, seed: int) -> float:
    """Cœur de l'estimateur : moyenne de C sur `shots` mesures de `sv`."""
    counts = sample(sv, shots, seed)
    total = sum(count * diagonal[index] for index, count in counts.items())
    return float(total / shots)


def sampled_expectation(
    instance: ProblemInstance,
    model: AnsatzModel,
    params: ParameterPoint | Sequence[float],
    shots: int,
    seed: int,
) -> EEVReport:
    if shots < 1:
        raise ArgumentError(f"shots doit être >= 1 (reçu {shots})")
    sv = prepare_state(instance, model, params)
    eev = estimate_from_state(sv, cost_diagonal(instance), shots, seed)
    return EEVReport(eev=eev, method=Backend.SAMPLED, shots=shots, seed=seed)


def opt_gap(eev: float, optimum: float, direction: Direction) -> float:
    # Toujours optimum − eev : positif en maximisation, négatif en minimisation
    return optimum - eev


# ── Lecture du résultat ───────────────────────────────────────────────────────

def top_states(
    instance: ProblemInstance,
    model: AnsatzModel,
    params: ParameterPoint | Sequence[float],
    k: int,
) -> list[StateProbability]:
    if k < 1:
        raise ArgumentError(f"k doit être >= 1 (reçu {k})")

    probs = probabilities(prepare_state(instance, model, params))
    diagonal = cost_diagonal(instance)
    optimal = set(oracle_optimum(instance).argopt)

    # Tri stable : probabilité décroissante, puis indice croissant
    order = np.argsort(-probs, kind="stable")[:k]
    states = []
    for index in order:
        bits = index_to_bitstring(int(index), instance.n_nodes)
        states.append(StateProbability(
            bitstring=bits,
            probability=float(probs[index]),
            cost=float(diagonal[index]),
            optimal=bits in optimal,
        ))
    return states


def optimal_probability(
    instance: ProblemInstance,
    model: AnsatzModel,
    params: ParameterPoint | Sequence[float],
) -> float:
    probs = probabilities(prepare_state(instance, model, params))
    optimal = [bitstring_to_index(bits) for bits in oracle_optimum(instance).argopt]
    return float(probs[optimal].sum())


def best_measured_solution(
    instance: ProblemInstance,
    model: AnsatzModel,
    params: ParameterPoint | Sequence[float],
    shots: int,
    seed: int,
) -> MeasuredSolution:
    """Mesure l'état optimisé et retient le meilleur C(z') observé."""
    sv = prepare_state(instance, model, params)
    counts = sample(sv, shots, seed)
    diagonal = cost_diagonal(instance)

    sign = 1.0 if instance.direction == Direction.MAXIMIZE else -1.0
    # Égalités départagées par l'indice le plus petit
    best_index = max(counts, key=lambda index: (sign * diagonal[index], -index))
    return MeasuredSolution(
        bitstring=index_to_bitstring(best_index, instance.n_nodes),
        cost=float(diagonal[best_index]),
        count=counts[best_index],
        shots=shots,
        seed=seed,
    )
