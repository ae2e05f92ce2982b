import itertools
import tracemalloc

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from exceptions import ArgumentError, SizeError, UsageError
from problems.problem_service import (
    build_topology,
    cost_diagonal,
    cut_value,
    evaluate,
    ising_energy,
    make_ising,
    make_maxcut,
    oracle_optimum,
)
from simulation.statevector_service import bitstring_to_index, index_to_bitstring

TOPOLOGIES = [("linear", 3), ("cyclic", 4), ("complete", 5), ("linear", 5), ("cyclic", 3), ("complete", 4)]


def _all_bitstrings(n):
    return ["".join(bits) for bits in itertools.product("01", repeat=n)]


# ── Topologies ────────────────────────────────────────────────────────────────

def test_linear_topology():
    assert build_topology("linear", 3).edges == ((0, 1), (1, 2))


def test_cyclic_topology_closes_the_ring():
    topology = build_topology("cyclic", 4)
    assert len(topology.edges) == 4
    assert (0, 3) in topology.edges


def test_complete_topology():
    topology = build_topology("complete", 5)
    assert len(topology.edges) == 10
    assert list(topology.edges) == sorted(topology.edges)


@pytest.mark.parametrize("kind, n", [("linear", 1), ("cyclic", 2), ("complete", 2)])
def test_topology_below_minimum(kind, n):
    with pytest.raises(ArgumentError):
        build_topology(kind, n)


# ── Coûts ─────────────────────────────────────────────────────────────────────

@pytest.mark.parametrize("kind, n, bits, expected", [
    ("linear", 3, "010", 2),
    ("cyclic", 4, "0101", 4),
    ("complete", 5, "00000", 0),
])
def test_cut_value(kind, n, bits, expected):
    assert cut_value(make_maxcut(kind, n), bits) == expected


def test_ising_energy_examples():
    instance = make_ising("linear", 3, fields=[0.5, 0.5, 0.5])
    assert ising_energy(instance, "000") == pytest.approx(-3.5)
    assert ising_energy(instance, "010") == pytest.approx(1.5)

    zero_field = make_ising("complete", 4, fields=[0.0] * 4)
    assert ising_energy(zero_field, "0000") == pytest.approx(-6.0)


def test_family_mismatch_is_a_usage_error():
    with pytest.raises(UsageError):
        cut_value(make_ising("linear", 3, fields=[0.5] * 3), "000")
    with pytest.raises(UsageError):
        ising_energy(make_maxcut("linear", 3), "000")


def test_assignment_length_mismatch():
    with pytest.raises(SizeError):
        cut_value(make_maxcut("linear", 3), "0101")


# ── Diagonale ─────────────────────────────────────────────────────────────────

def test_maxcut_diagonal_entries():
    diagonal = cost_diagonal(make_maxcut("linear", 3))
    assert diagonal[bitstring_to_index("010")] == 2
    assert diagonal[bitstring_to_index("101")] == 2
    assert diagonal[bitstring_to_index("000")] == 0
    assert diagonal[bitstring_to_index("111")] == 0


def test_ising_diagonal_minimum_at_all_zero():
    diagonal = cost_diagonal(make_ising("linear", 3, fields=[0.5] * 3))
    assert diagonal.min() == pytest.approx(-3.5)
    assert int(np.argmin(diagonal)) == 0


def test_cyclic_maxcut_mean():
    assert cost_diagonal(make_maxcut("cyclic", 4)).mean() == pytest.approx(2.0)


def test_diagonal_is_read_only():
    diagonal = cost_diagonal(make_maxcut("cyclic", 4))
    with pytest.raises(ValueError):
        diagonal[0] = 1.0


@pytest.mark.parametrize("kind, n", TOPOLOGIES)
def test_diagonal_matches_direct_evaluation(kind, n):
    rng = np.random.default_rng(n)
    for instance in (
        make_maxcut(kind, n, couplings=rng.uniform(0.5, 2.0, len(build_topology(kind, n).edges))),
        make_ising(kind, n, fields=rng.uniform(-1, 1, n)),
    ):
        diagonal = cost_diagonal(instance)
        for index in range(2 ** n):
            assert diagonal[index] == pytest.approx(evaluate(instance, index_to_bitstring(index, n)))


@pytest.mark.parametrize("family", ["maxcut", "ising"])
def test_diagonal_peak_memory_stays_linear_in_the_edges(family):
    # 16 nœuds complets : 120 arêtes, résultat de 512 Kio
    n = 16
    instance = make_maxcut("complete", n) if family == "maxcut" else make_ising("complete", n, fields=[0.5] * n)
    tracemalloc.start()
    try:
        diagonal = cost_diagonal(instance)
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    assert peak < 8 * diagonal.nbytes


# ── Oracle ────────────────────────────────────────────────────────────────────

def test_oracle_maxcut_linear():
    result = oracle_optimum(make_maxcut("linear", 3))
    assert result.value == 2
    assert result.argopt == ("010", "101")


def test_oracle_maxcut_complete_contains_published_states():
    result = oracle_optimum(make_maxcut("complete", 5))
    assert result.value == 6
    assert {"00011", "01110", "10110"} <= set(result.argopt)


def test_oracle_ising_linear():
    result = oracle_optimum(make_ising("linear", 3, fields=[0.5] * 3))
    assert result.value == pytest.approx(-3.5)
    assert result.argopt == ("000",)


# ── Propriétés ────────────────────────────────────────────────────────────────

topologies = st.sampled_from(TOPOLOGIES)


@settings(max_examples=1000, deadline=None)
@given(topology=topologies, data=st.data())
def test_cut_is_complement_symmetric(topology, data):
    kind, n = topology
    instance = make_maxcut(kind, n)
    bits = data.draw(st.text(alphabet="01", min_size=n, max_size=n))
    complement = "".join("1" if b == "0" else "0" for b in bits)
    assert cut_value(instance, bits) == cut_value(instance, complement)
    assert 0 <= cut_value(instance, bits) <= len(instance.topology.edges)


@pytest.mark.parametrize("kind, n", TOPOLOGIES)
def test_maxcut_argopt_closed_under_complement(kind, n):
    argopt = set(oracle_optimum(make_maxcut(kind, n)).argopt)
    assert {"".join("1" if b == "0" else "0" for b in bits) for bits in argopt} == argopt


@pytest.mark.parametrize("kind, n", TOPOLOGIES)
def test_zero_field_ising_is_affine_in_the_cut(kind, n):
    maxcut = make_maxcut(kind, n)
    ising = make_ising(kind, n, fields=[0.0] * n)
    edges = len(maxcut.topology.edges)
    for bits in _all_bitstrings(n):
        assert ising_energy(ising, bits) == pytest.approx(2 * cut_value(maxcut, bits) - edges)


@settings(max_examples=1000, deadline=None)
@given(
    topology=topologies,
    data=st.data(),
    field=st.floats(min_value=-2.0, max_value=2.0, allow_nan=False),
)
def test_ising_energy_bounds(topology, data, field):
    kind, n = topology
    instance = make_ising(kind, n, fields=[field] * n)
    bits = data.draw(st.text(alphabet="01", min_size=n, max_size=n))
    bound = sum(abs(j) for j in instance.couplings) + n * abs(field)
    assert -bound - 1e-12 <= ising_energy(instance, bits) <= bound + 1e-12
