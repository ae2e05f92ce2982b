"""
Circuit QAOA développé porte à porte :
colonne H, blocs CNOT–RZ–CNOT par arête, RZ de champ (ISM), colonne RX.

Chaque terme c·Z_iZ_j du coût devient CNOT(i→j) · RZ_j(2γc) · CNOT(i→j),
chaque terme c·Z_i devient RZ_i(2γc). Coefficients :
  Max-Cut  C = Σ J(1 − Z_iZ_j)/2   → c_ij = −J/2 (constante = phase globale)
  ISM      C = −Σ J Z_iZ_j − Σ h Z_i → c_ij = −J, c_i = −h
Le circuit obtenu égale e^{−iγC} à une phase globale près.
"""

from typing import Sequence

from exceptions import ArgumentError
from schemas.problem import Family, ProblemInstance
from schemas.qaoa import AnsatzModel, GateOp, LayerKind, ParameterPoint
from schemas.statevector import Statevector
from simulation.statevector_service import apply_cnot, apply_h, apply_rx, apply_rz


def zz_coefficients(instance: ProblemInstance) -> list[float]:
    if instance.family == Family.MAXCUT:
        return [-j / 2.0 for j in instance.couplings]
    return [-j for j in instance.couplings]


def z_coefficients(instance: ProblemInstance) -> list[float]:
    if instance.family == Family.MAXCUT:
        return []
    return [-h for h in instance.fields]


def phase_gates(instance: ProblemInstance, gamma: float) -> list[GateOp]:
    gates: list[GateOp] = []
    for (i, j), c in zip(instance.topology.edges, zz_coefficients(instance)):
        gates += [
            GateOp(name="cnot", qubits=(i, j)),
            GateOp(name="rz", qubits=(j,), angle=2.0 * gamma * c),
            GateOp(name="cnot", qubits=(i, j)),
        ]
    for i, c in enumerate(z_coefficients(instance)):
        gates.append(GateOp(name="rz", qubits=(i,), angle=2.0 * gamma * c))
    return gates


def mixing_gates(n_qubits: int, beta: float) -> list[GateOp]:
    return [GateOp(name="rx", qubits=(q,), angle=beta) for q in range(n_qubits)]


def build_circuit(
    instance: ProblemInstance,
    model: AnsatzModel,
    params: ParameterPoint | Sequence[float],
) -> list[GateOp]:
    values = params.values if isinstance(params, ParameterPoint) else tuple(params)
    if len(values) != model.parameter_count:
        raise ArgumentError(
            f"Modèle {model.label.value} : {model.parameter_count} paramètres attendus, "
            f"{len(values)} reçus"
        )

    gates = [GateOp(name="h", qubits=(q,)) for q in range(instance.n_nodes)]
    for layer, angle in zip(model.schedule, values):
        if layer == LayerKind.PHASE:
            gates += phase_gates(instance, angle)
        else:
            gates += mixing_gates(instance.n_nodes, angle)
    return gates


def run_gates(sv: Statevector, gates: Sequence[GateOp]) -> Statevector:
    for gate in gates:
        if gate.name == "h":
            apply_h(sv, gate.qubits[0])
        elif gate.name == "rx":
            apply_rx(sv, gate.qubits[0], gate.angle)
        elif gate.name == "rz":
            apply_rz(sv, gate.qubits[0], gate.angle)
        elif gate.name == "cnot":
            apply_cnot(sv, gate.qubits[0], gate.qubits[1])
        else:
            raise ArgumentError(f"Porte inconnue : {gate.name}")
    return sv


def format_circuit(gates: Sequence[GateOp]) -> list[str]:
    lines = []
    for gate in gates:
        qubits = ",".join(str(q) for q in gate.qubits)
        if gate.angle is None:
            lines.append(f"{gate.name.upper()} q[{qubits}]")
        else:
            lines.append(f"{gate.name.upper()}({gate.angle:.6f}) q[{qubits}]")
    return lines
