from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zonodt.algebra import (
    apply_linear_power,
    central_power_ideal,
    count_slim_subsets,
    cut_polynomial,
    efimov_f,
    graded_rank,
    initial_segment_side,
    inverse_system_dims,
    invariant_hilbert,
    macaulay_check,
    p_of_edges,
    pm_power_ideal,
    pspace_hilbert,
    quantum_dt,
    reynolds,
    sign_isotypic_dims,
    sign_isotypic_dt,
    sign_projection,
    slim_subsets,
    subset_weight,
    top_degree_dim,
    vandermonde_degree,
)
from zonodt.closed_form import reineke_dt
from zonodt.errors import CapExceeded, ValidationError
from zonodt.graph import complete_bipartite, complete_graph, genus, k4_minus_edge, path_graph, tutte
from zonodt.groups import young_subgroup
from zonodt.poly import MultiPoly, apply_operator
from zonodt.quiver import SymmetricQuiver, covering_graph, loop_quiver

K23_QUIVER = SymmetricQuiver.from_matrix([[1, 1], [1, 1]])
SMALL = [complete_graph(3), k4_minus_edge(), complete_bipartite(2, 3), complete_graph(3, 2), complete_graph(4)]


def x(n, i):
    return MultiPoly.var(n, i)


@pytest.mark.parametrize("G", SMALL, ids=str)
def test_pspace_hilbert_is_tutte_specialization(G):
    assert pspace_hilbert(G) == tutte(G).hilbert_specialization(genus(G))
    assert count_slim_subsets(G) == tutte(G)(1, 2)
    assert top_degree_dim(G) == tutte(G)(1, 0)


def test_pspace_examples():
    assert pspace_hilbert(complete_graph(3)) == [1, 2]
    assert pspace_hilbert(k4_minus_edge()) == [1, 3, 4]
    assert pspace_hilbert(complete_bipartite(2, 3)) == [1, 4, 7]


def test_slim_subset_weights():
    G = complete_graph(3, 2)
    assert sum(subset_weight(G, Y) for Y in slim_subsets(G)) == count_slim_subsets(G)


def test_p_of_edges_accepts_pairs():
    G = complete_graph(3)
    assert p_of_edges(G, [(1, 2)]) == x(3, 2) - x(3, 1) or p_of_edges(G, [(1, 2)]) == x(3, 1) - x(3, 2)
    assert p_of_edges(G, [(1, 2)]) == p_of_edges(G, (1, 0, 0))


def test_graded_rank_rejects_inhomogeneous():
    with pytest.raises(ValidationError):
        graded_rank([x(2, 1) + 1])


@pytest.mark.parametrize("G", SMALL, ids=str)
def test_macaulay_check(G):
    assert macaulay_check(G).passed


@settings(max_examples=40, deadline=None)
@given(
    st.frozensets(st.integers(1, 3), min_size=1),
    st.integers(0, 4),
    st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3), st.integers(-3, 3), max_size=5),
)
def test_apply_linear_power_matches_expanded_operator(S, e, terms):
    f = MultiPoly(3, terms)
    op = MultiPoly.subset_sum(3, S) ** e
    assert apply_linear_power(S, e, f) == apply_operator(op, f)


@pytest.mark.parametrize("G", SMALL + [complete_graph(4, 2)], ids=str)
def test_inverse_systems(G):
    T = tutte(G)
    cap = 64
    central = inverse_system_dims(central_power_ideal(G).generators, G.n, cap)
    assert central == pspace_hilbert(G)
    ext = pm_power_ideal(G, 1)
    assert sum(inverse_system_dims(ext.generators, G.n, cap)) == T(2, 1)
    internal = pm_power_ideal(G, -1)
    assert sum(inverse_system_dims(internal.generators, G.n, cap)) == T(0, 1)


@pytest.mark.parametrize("G", [complete_graph(3), k4_minus_edge(), complete_graph(3, 2)], ids=str)
@pytest.mark.parametrize("shift", [0, 1, -1])
def test_incremental_matches_direct(G, shift):
    ideal = central_power_ideal(G) if shift == 0 else pm_power_ideal(G, shift)
    a = inverse_system_dims(ideal.generators, G.n, 64, method="incremental")
    b = inverse_system_dims(ideal.generators, G.n, 64, method="direct")
    assert a == b


def test_k3_inverse_systems():
    G = complete_graph(3)
    assert inverse_system_dims(pm_power_ideal(G, 1).generators, 3, 64) == [1, 2, 3, 1]
    assert inverse_system_dims(pm_power_ideal(G, -1).generators, 3, 64) == [1]


def test_internal_ideal_of_a_tree_is_unit():
    ideal = pm_power_ideal(path_graph(3), -1)
    assert ideal.unit
    assert inverse_system_dims(ideal.generators, 3, 64) == []


def test_inverse_system_degree_cap():
    with pytest.raises(CapExceeded):
        inverse_system_dims([x(2, 1) + x(2, 2)], 2, 5)


def test_reynolds_example():
    f = x(5, 1) - x(5, 3)
    r = reynolds(f, young_subgroup((2, 3)))
    target = 3 * (x(5, 1) + x(5, 2)) - 2 * (x(5, 3) + x(5, 4) + x(5, 5))
    ratio = r.terms[(1, 0, 0, 0, 0)] / target.terms[(1, 0, 0, 0, 0)]
    assert r == target * ratio
    assert ratio == Fraction(1, 6)


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(st.tuples(*[st.integers(0, 2)] * 4), st.integers(-3, 3), max_size=5))
def test_projections_are_idempotent(terms):
    f = MultiPoly(4, terms)
    grp = young_subgroup((2, 2))
    r = reynolds(f, grp)
    assert reynolds(r, grp) == r
    s = sign_projection(f, grp)
    assert sign_projection(s, grp) == s
    assert reynolds(s, grp) == MultiPoly(4)


@pytest.mark.parametrize("G", SMALL, ids=str)
def test_trivial_group_gives_full_series(G):
    assert invariant_hilbert(G, (1,) * G.n) == pspace_hilbert(G)


def test_quantum_dt_k23():
    result = quantum_dt(K23_QUIVER, (2, 3))
    assert result.dims == [1, 1, 2]
    assert result.chi == -12
    assert result.n_gamma == 3
    assert result.value_at_one == 4
    assert result.efimov_gradings() == {-12: 1, -10: 1, -8: 2}


@pytest.mark.parametrize("Q, gamma", [(K23_QUIVER, (2, 3)), (loop_quiver(2), (3,)), (loop_quiver(3), (3,))])
def test_orbit_sum_matches_averaging(Q, gamma):
    assert quantum_dt(Q, gamma).dims == quantum_dt(Q, gamma, method="average").dims
    cg = covering_graph(Q, gamma)
    assert (sign_isotypic_dims(cg.graph, cg.gamma)
            == sign_isotypic_dims(cg.graph, cg.gamma, method="average"))


@pytest.mark.parametrize("loops, n", [(2, 2), (2, 3), (3, 3), (3, 4)])
def test_loop_quiver_dt_matches_closed_form(loops, n):
    assert quantum_dt(loop_quiver(loops), (n,)).value_at_one == reineke_dt(loops - 1, n)


def test_group_order_cap():
    with pytest.raises(CapExceeded):
        quantum_dt(loop_quiver(2), (4,), max_order=10)


def test_sign_isotypic_examples():
    assert sign_isotypic_dt(loop_quiver(2), (3,)) == [0, 0, 0, 1]
    dims = sign_isotypic_dt(loop_quiver(2), (4,))
    assert dims == [0, 0, 0, 0, 0, 0, 1, 0, 1]
    first = next(d for d, c in enumerate(dims) if c)
    assert first == vandermonde_degree((4,))


@pytest.mark.parametrize("delta", [(1, 0), (0, 1), (1, 2), (2, 1), (1, 1)])
def test_efimov_f_is_a_cut_polynomial(delta):
    gamma = (2, 3)
    f = efimov_f(K23_QUIVER, gamma, delta)
    G = covering_graph(K23_QUIVER, gamma).graph
    p = cut_polynomial(G, initial_segment_side(gamma, delta))
    assert f == p or f == -p


def test_efimov_f_rejects_trivial_delta():
    with pytest.raises(ValidationError):
        efimov_f(K23_QUIVER, (2, 3), (0, 0))
    with pytest.raises(ValidationError):
        efimov_f(K23_QUIVER, (2, 3), (2, 3))
