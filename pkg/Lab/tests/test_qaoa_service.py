import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from exceptions import ArgumentError, SizeError
from experiments.registry import REGISTRY_ORDER, get_instance
from problems.problem_service import cost_diagonal, make_maxcut
from qaoa.qaoa_service import (
    apply_mixing_operator,
    apply_phase_operator,
    best_measured_solution,
    estimate_from_state,
    exact_expectation,
    opt_gap,
    optimal_probability,
    prepare_state,
    sampled_expectation,
    top_states,
)
from schemas.problem import Direction
from schemas.qaoa import AnsatzModel, LayerKind, PhaseMode
from simulation.statevector_service import (
    basis_state,
    bitstring_to_index,
    global_phase_distance,
    new_uniform,
    new_zero,
    probabilities,
)
from tests.helpers import random_state

P2 = AnsatzModel.from_label("P2")
P3 = AnsatzModel.from_label("P3")
P4 = AnsatzModel.from_label("P4")
MODELS = [P2, P3, P4]

angles = st.floats(min_value=-4 * math.pi, max_value=4 * math.pi, allow_nan=False)
instance_names = st.sampled_from(REGISTRY_ORDER)


def test_model_schedules():
    assert [m.parameter_count for m in MODELS] == [2, 3, 4]
    assert P4.schedule == (LayerKind.PHASE, LayerKind.MIX, LayerKind.PHASE, LayerKind.MIX)


# ── Opérateurs ────────────────────────────────────────────────────────────────

@pytest.mark.parametrize("mode", list(PhaseMode))
def test_zero_gamma_phase_is_identity(mode):
    instance = get_instance("ism-4-cyclic")
    sv = random_state(4, 1)
    before = sv.amplitudes.copy()
    apply_phase_operator(sv, instance, 0.0, mode)
    assert global_phase_distance(sv.amplitudes, before) < 1e-12


@pytest.mark.parametrize("mode", list(PhaseMode))
def test_phase_on_basis_state_keeps_probabilities(mode):
    instance = get_instance("maxcut-3-linear")
    sv = apply_phase_operator(basis_state(3, 5), instance, 1.234, mode)
    assert probabilities(sv)[5] == pytest.approx(1.0)


def test_phase_size_mismatch():
    with pytest.raises(SizeError):
        apply_phase_operator(new_uniform(4), get_instance("maxcut-3-linear"), 0.5)


def test_mixing_examples():
    sv = random_state(3, 2)
    before = sv.amplitudes.copy()
    assert np.allclose(apply_mixing_operator(sv, 0.0).amplitudes, before)

    uniform = apply_mixing_operator(new_uniform(3), 1.1)
    assert np.allclose(probabilities(uniform), 1 / 8)

    flipped = apply_mixing_operator(new_zero(3), math.pi / 2)
    assert probabilities(flipped)[7] == pytest.approx(1.0)


@settings(max_examples=1000, deadline=None)
@given(name=instance_names, gamma=angles, seed=st.integers(0, 2 ** 32 - 1))
def test_fused_and_gate_phase_agree(name, gamma, seed):
    instance = get_instance(name)
    state = random_state(instance.n_nodes, seed)
    fused = apply_phase_operator(state.copy(), instance, gamma, PhaseMode.FUSED)
    gates = apply_phase_operator(state.copy(), instance, gamma, PhaseMode.GATES)
    assert global_phase_distance(fused, gates) < 1e-9


# ── Préparation ───────────────────────────────────────────────────────────────

def test_prepare_zero_params_is_uniform():
    sv = prepare_state(get_instance("maxcut-4-cyclic"), P2, (0.0, 0.0))
    assert np.allclose(sv.amplitudes, 0.25)


def test_prepare_wrong_parameter_count():
    with pytest.raises(ArgumentError):
        prepare_state(get_instance("maxcut-4-cyclic"), P2, (0.1, 0.2, 0.3))


@pytest.mark.parametrize("mode", list(PhaseMode))
def test_p4_with_identity_layers_equals_p2(mode):
    instance = get_instance("ism-5-complete")
    p4 = prepare_state(instance, P4, (0.7, 0.0, 0.0, 1.3), mode)
    p2 = prepare_state(instance, P2, (0.7, 1.3), mode)
    assert global_phase_distance(p4, p2) < 1e-9


# ── EEV ───────────────────────────────────────────────────────────────────────

def test_exact_expectation_examples():
    assert exact_expectation(get_instance("maxcut-4-cyclic"), P2, (0, 0)).eev == pytest.approx(2.0, abs=1e-12)
    assert exact_expectation(get_instance("maxcut-3-linear"), P2, (0, 2.1)).eev == pytest.approx(1.0, abs=1e-12)


def test_p2_cyclic_optimum_on_grid_point():
    # γ = π/4, β = π/8 atteint le maximum 3 du modèle P2 sur l'anneau de 4 nœuds
    report = exact_expectation(get_instance("maxcut-4-cyclic"), P2, (math.pi / 4, math.pi / 8))
    assert max(report.eev, exact_expectation(get_instance("maxcut-4-cyclic"), P2,
                                             (math.pi / 4, 2 * math.pi - math.pi / 8)).eev) == pytest.approx(3.0)


def test_estimator_on_basis_state():
    diagonal = cost_diagonal(get_instance("maxcut-4-cyclic"))
    index = bitstring_to_index("0101")
    assert estimate_from_state(basis_state(4, index), diagonal, 100, seed=9) == diagonal[index]


def test_sampled_expectation_uniform_cycle():
    report = sampled_expectation(get_instance("maxcut-4-cyclic"), P2, (0, 0), shots=100_000, seed=17)
    # σ(C) = 1 pour l'anneau de 4 nœuds
    assert abs(report.eev - 2.0) < 5 / math.sqrt(100_000)
    assert report.shots == 100_000 and report.seed == 17


def test_sampled_expectation_is_deterministic():
    instance = get_instance("ism-4-cyclic")
    first = sampled_expectation(instance, P3, (0.4, 1.0, 2.0), shots=300, seed=5)
    assert first == sampled_expectation(instance, P3, (0.4, 1.0, 2.0), shots=300, seed=5)


def test_sampled_expectation_rejects_zero_shots():
    with pytest.raises(ArgumentError):
        sampled_expectation(get_instance("maxcut-4-cyclic"), P2, (0, 0), shots=0, seed=1)


@pytest.mark.parametrize("params", [(0.3, 0.4), (1.2, 2.5), (math.pi / 4, math.pi / 8)])
def test_sampled_converges_to_exact(params):
    instance = get_instance("maxcut-4-cyclic")
    diagonal = cost_diagonal(instance)
    exact = exact_expectation(instance, P2, params).eev
    probs = probabilities(prepare_state(instance, P2, params))
    stdev = math.sqrt(float(probs @ (diagonal - exact) ** 2))

    shots = 10_000
    inside = sum(
        abs(sampled_expectation(instance, P2, params, shots, seed).eev - exact) <= 5 * stdev / math.sqrt(shots) + 1e-12
        for seed in range(100)
    )
    assert inside >= 99


@pytest.mark.parametrize("eev, optimum, direction, expected", [
    (1.658, 2.0, Direction.MAXIMIZE, 0.342),
    (-2.8496, -3.5, Direction.MINIMIZE, -0.6504),
    (4.0, 4.0, Direction.MAXIMIZE, 0.0),
])
def test_opt_gap(eev, optimum, direction, expected):
    assert opt_gap(eev, optimum, direction) == pytest.approx(expected)


# ── Propriétés ────────────────────────────────────────────────────────────────

def _random_params(model, data):
    return tuple(data.draw(angles) for _ in range(model.parameter_count))


@settings(max_examples=1000, deadline=None)
@given(name=instance_names, model=st.sampled_from(MODELS), data=st.data())
def test_eev_within_cost_bounds(name, model, data):
    instance = get_instance(name)
    diagonal = cost_diagonal(instance)
    eev = exact_expectation(instance, model, _random_params(model, data)).eev
    assert diagonal.min() - 1e-9 <= eev <= diagonal.max() + 1e-9


@settings(max_examples=1000, deadline=None)
@given(name=instance_names, model=st.sampled_from(MODELS), data=st.data())
def test_zero_phase_or_zero_mix_gives_uniform_mean(name, model, data):
    instance = get_instance(name)
    mean = float(cost_diagonal(instance).mean())
    params = _random_params(model, data)

    no_phase = tuple(0.0 if layer == LayerKind.PHASE else p for layer, p in zip(model.schedule, params))
    no_mix = tuple(0.0 if layer == LayerKind.MIX else p for layer, p in zip(model.schedule, params))
    assert exact_expectation(instance, model, no_phase).eev == pytest.approx(mean, abs=1e-9)
    assert exact_expectation(instance, model, no_mix).eev == pytest.approx(mean, abs=1e-9)


@settings(max_examples=1000, deadline=None)
@given(name=instance_names, model=st.sampled_from(MODELS), data=st.data())
def test_periodicity(name, model, data):
    instance = get_instance(name)
    params = _random_params(model, data)
    coordinate = data.draw(st.integers(0, model.parameter_count - 1))
    # γ n'est 2π-périodique que sur un spectre entier (Max-Cut) ; β l'est toujours
    if model.schedule[coordinate] == LayerKind.PHASE and name.startswith("ism"):
        coordinate = model.schedule.index(LayerKind.MIX)

    shifted = list(params)
    shifted[coordinate] += 2 * math.pi
    assert exact_expectation(instance, model, shifted).eev == pytest.approx(
        exact_expectation(instance, model, params).eev, abs=1e-9
    )


@settings(max_examples=1000, deadline=None)
@given(name=instance_names, gamma=angles, beta1=angles, beta2=angles)
def test_p3_collapses_to_p2(name, gamma, beta1, beta2):
    instance = get_instance(name)
    p3 = exact_expectation(instance, P3, (gamma, beta1, beta2)).eev
    p2 = exact_expectation(instance, P2, (gamma, beta1 + beta2)).eev
    assert p3 == pytest.approx(p2, abs=1e-9)


# ── Lecture du résultat ───────────────────────────────────────────────────────

def test_top_states_on_uniform_state():
    states = top_states(get_instance("maxcut-3-linear"), P2, (0, 0), k=4)
    assert [s.bitstring for s in states] == ["000", "100", "010", "110"]
    assert all(s.probability == pytest.approx(1 / 8) for s in states)
    assert [s.optimal for s in states] == [False, False, True, False]
    assert states[2].cost == 2


def test_top_states_rejects_non_positive_k():
    with pytest.raises(ArgumentError):
        top_states(get_instance("maxcut-3-linear"), P2, (0, 0), k=0)


def test_optimal_probability_uniform():
    assert optimal_probability(get_instance("maxcut-3-linear"), P2, (0, 0)) == pytest.approx(0.25)
    assert optimal_probability(get_instance("ism-5-complete"), P2, (0, 0)) == pytest.approx(1 / 32)


def test_best_measured_solution_prefers_smallest_index_on_ties():
    solution = best_measured_solution(get_instance("maxcut-3-linear"), P2, (0, 0), shots=1024, seed=3)
    assert solution.bitstring == "010"
    assert solution.cost == 2
    assert 0 < solution.count <= 1024
