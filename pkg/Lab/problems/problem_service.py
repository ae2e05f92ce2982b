"""
Topologies, fonctions de coût Max-Cut / ISM, diagonale du coût et oracle exhaustif.

Convention de spin : bit 0 → z = +1, bit 1 → z = −1.
Max-Cut : C(z) = Σ J_ij (1 − z_i z_j) / 2 (nombre d'arêtes coupées si J = 1), maximisé.
ISM     : E(z) = −Σ J_ij z_i z_j − Σ h_i z_i, minimisé.
"""

import logging
from functools import lru_cache
from typing import Optional, Sequence

import networkx as nx
import numpy as np

from config import MIN_NODES, MAX_QUBITS, DEFAULT_COUPLING
from exceptions import ArgumentError, SizeError, UsageError
from schemas.problem import (
    Direction,
    Family,
    FAMILY_DIRECTION,
    OracleResult,
    ProblemInstance,
    SpinAssignment,
    Topology,
    TopologyKind,
)
from simulation.statevector_service import index_to_bitstring

logger = logging.getLogger(__name__)

# Générateurs networkx par topologie
_GRAPH_BUILDERS = {
    TopologyKind.LINEAR:   nx.path_graph,
    TopologyKind.CYCLIC:   nx.cycle_graph,
    TopologyKind.COMPLETE: nx.complete_graph,
}

# Tolérance d'égalité pour l'ensemble argopt (coûts réels pondérés)
_ARGOPT_TOLERANCE = 1e-9


# ── Construction ──────────────────────────────────────────────────────────────

def build_topology(kind: TopologyKind | str, n_nodes: int) -> Topology:
    kind = TopologyKind(kind)
    minimum = MIN_NODES[kind.value]
    if n_nodes < minimum:
        raise ArgumentError(f"Topologie {kind.value} : au moins {minimum} nœuds (reçu {n_nodes})")

    graph = _GRAPH_BUILDERS[kind](n_nodes)
    edges = sorted((min(u, v), max(u, v)) for u, v in graph.edges())
    return Topology(kind=kind, n_nodes=n_nodes, edges=tuple(edges))


def _resolve_couplings(topology: Topology, couplings: Optional[Sequence[float]]) -> tuple[float, ...]:
    if couplings is None:
        return tuple(DEFAULT_COUPLING for _ in topology.edges)
    return tuple(float(j) for j in couplings)


def make_maxcut(
    kind: TopologyKind | str,
    n_nodes: int,
    couplings: Optional[Sequence[float]] = None,
    name: Optional[str] = None,
    declared_optimum: Optional[float] = None,
) -> ProblemInstance:
    topology = build_topology(kind, n_nodes)
    return ProblemInstance(
        name=name,
        topology=topology,
        family=Family.MAXCUT,
        couplings=_resolve_couplings(topology, couplings),
        direction=FAMILY_DIRECTION[Family.MAXCUT],
        declared_optimum=declared_optimum,
    )


def make_ising(
    kind: TopologyKind | str,
    n_nodes: int,
    fields: Sequence[float],
    couplings: Optional[Sequence[float]] = None,
    name: Optional[str] = None,
    declared_optimum: Optional[float] = None,
) -> ProblemInstance:
    topology = build_topology(kind, n_nodes)
    return ProblemInstance(
        name=name,
        topology=topology,
        family=Family.ISING,
        couplings=_resolve_couplings(topology, couplings),
        fields=tuple(float(h) for h in fields),
        direction=FAMILY_DIRECTION[Family.ISING],
        declared_optimum=declared_optimum,
    )


# ── Évaluation d'une affectation ──────────────────────────────────────────────

def _spins_for(instance: ProblemInstance, z: SpinAssignment | str) -> np.ndarray:
    assignment = z if isinstance(z, SpinAssignment) else SpinAssignment(bits=z)
    if len(assignment.bits) != instance.n_nodes:
        raise SizeError(
            f"Affectation de {len(assignment.bits)} bits pour {instance.n_nodes} nœuds"
        )
    return assignment.spins


def cut_value(instance: ProblemInstance, z: SpinAssignment | str) -> float:
    if instance.family != Family.MAXCUT:
        raise UsageError(f"cut_value exige une instance maxcut (reçu {instance.family.value})")
    spins = _spins_for(instance, z)
    return float(sum(
        j * (1 - spins[a] * spins[b]) / 2
        for (a, b), j in zip(instance.topology.edges, instance.couplings)
    ))


def ising_energy(instance: ProblemInstance, z: SpinAssignment | str) -> float:
    if instance.family != Family.ISING:
        raise UsageError(f"ising_energy exige une instance ising (reçu {instance.family.value})")
    spins = _spins_for(instance, z)
    coupling_term = sum(
        j * spins[a] * spins[b]
        for (a, b), j in zip(instance.topology.edges, instance.couplings)
    )
    field_term = sum(h * s for h, s in zip(instance.fields, spins))
    return float(-coupling_term - field_term)


def evaluate(instance: ProblemInstance, z: SpinAssignment | str) -> float:
    if instance.family == Family.MAXCUT:
        return cut_value(instance, z)
    return ising_energy(instance, z)


# ── Diagonale du coût ─────────────────────────────────────────────────────────

@lru_cache(maxsize=128)
def _cached_diagonal(instance: ProblemInstance) -> np.ndarray:
    n = instance.n_nodes
    index = np.arange(2 ** n, dtype=np.int64)

    def spin(i: int) -> np.ndarray:
        # s_i(z) = 1 − 2·bit_i(z), une colonne à la fois
        return (1 - 2 * ((index >> i) & 1)).astype(np.int8)

    # Un seul vecteur float de taille 2^n, accumulé arête par arête
    diagonal = np.zeros(2 ** n, dtype=float)
    for (a, b), j in zip(instance.topology.edges, instance.couplings):
        product = spin(a) * spin(b)
        if instance.family == Family.MAXCUT:
            diagonal += j * (1 - product) / 2
        else:
            diagonal -= j * product

    if instance.family == Family.ISING:
        for i, h in enumerate(instance.fields):
            diagonal -= h * spin(i)

    diagonal.flags.writeable = False   # Partagé par le cache — lecture seule
    return diagonal


def cost_diagonal(instance: ProblemInstance) -> np.ndarray:
    """C(z) pour chaque indice de base z (convention little-endian du simulateur)."""
    if instance.n_nodes > MAX_QUBITS:
        raise SizeError(f"{instance.n_nodes} nœuds dépassent la limite de {MAX_QUBITS}")
    return _cached_diagonal(instance)


# ── Oracle ────────────────────────────────────────────────────────────────────

def oracle_optimum(instance: ProblemInstance) -> OracleResult:
    diagonal = cost_diagonal(instance)
    if instance.direction == Direction.MAXIMIZE:
        value = float(diagonal.max())
    else:
        value = float(diagonal.min())

    optimal_indices = np.flatnonzero(np.abs(diagonal - value) <= _ARGOPT_TOLERANCE)
    argopt = sorted(index_to_bitstring(int(z), instance.n_nodes) for z in optimal_indices)

    logger.debug(f"Oracle | {instance.label} | optimum={value} | {len(argopt)} état(s)")
    return OracleResult(value=value, argopt=tuple(argopt))
