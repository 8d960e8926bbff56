from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgprod.coloring import switch_coloring, verify_coloring
from sgprod.core import build_graph, is_balanced, make_complete, make_cycle, make_path, max_degree, switch
from sgprod.exceptions import GuardExceededError, PreconditionError
from sgprod.oracle import (
    decide_k_colorable,
    delta_coloring,
    edge_order,
    exact_chromatic_index,
    is_delta_colorable,
)

from .strategies import signed_graphs


def test_balanced_and_unbalanced_c4(balanced_c4, unbalanced_c4):
    chi, witness = exact_chromatic_index(balanced_c4)
    assert chi == 2
    assert verify_coloring(balanced_c4, witness).valid

    chi, witness = exact_chromatic_index(unbalanced_c4)
    assert chi == 3
    assert witness.k == 3
    assert verify_coloring(unbalanced_c4, witness).valid


def test_long_path_is_class_one():
    S = make_path(6, [1, -1, -1, 1, -1])
    assert exact_chromatic_index(S)[0] == 2


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
def test_every_path_signature_is_class_one(r):
    for signs in product((1, -1), repeat=r - 1):
        S = make_path(r, list(signs))
        assert exact_chromatic_index(S)[0] == max_degree(S)


@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_cycle_chromatic_index_follows_balance(r):
    for signs in product((1, -1), repeat=r):
        S = make_cycle(r, list(signs))
        chi, witness = exact_chromatic_index(S)
        assert chi == (2 if is_balanced(S) else 3)
        assert verify_coloring(S, witness).valid


def test_edgeless_graph_has_no_chromatic_index():
    with pytest.raises(PreconditionError):
        exact_chromatic_index(build_graph(3, []))
    with pytest.raises(PreconditionError):
        delta_coloring(build_graph(3, []))


def test_edgeless_graph_is_trivially_delta_colorable():
    assert is_delta_colorable(build_graph(2, []))


def test_oracle_guard():
    S = make_complete(5, [1] * 10)
    with pytest.raises(GuardExceededError):
        decide_k_colorable(S, 4, edge_guard=9)
    with pytest.raises(GuardExceededError):
        exact_chromatic_index(S, edge_guard=5)


def test_palette_size_must_be_positive(p4):
    with pytest.raises(PreconditionError):
        decide_k_colorable(p4, 0)


def test_forbidden_colors():
    S = make_path(2, [1])
    c = decide_k_colorable(S, 2, forbidden={0: [1]})
    assert c is not None
    assert c.values == ((0, 1, -1, 1),)
    assert decide_k_colorable(S, 2, forbidden={0: [1, -1]}) is None


def test_degree_above_palette_is_rejected_immediately():
    assert decide_k_colorable(make_complete(4, [1] * 6), 2) is None


def test_edge_order_puts_high_degree_first():
    S = build_graph(5, [(0, 1, 1), (2, 3, 1), (2, 4, 1), (1, 2, 1)])
    order = edge_order(S)
    assert sorted(order) == list(range(S.m))
    first = S.edges[order[0]]
    assert 2 in first[:2]


def test_delta_coloring_on_direct_cases(p4, balanced_c4, unbalanced_c4):
    assert delta_coloring(p4).k == 2
    assert verify_coloring(balanced_c4, delta_coloring(balanced_c4)).valid
    assert delta_coloring(unbalanced_c4) is None


@given(signed_graphs(max_n=7, max_m=11, min_m=1))
@settings(max_examples=50, deadline=None)
def test_chromatic_index_is_delta_or_delta_plus_one(S):
    chi, witness = exact_chromatic_index(S, edge_guard=None)
    delta = max_degree(S)
    assert chi in (delta, delta + 1)
    assert witness.k == chi
    assert verify_coloring(S, witness).valid
    assert is_delta_colorable(S, edge_guard=None) == (chi == delta)


@given(signed_graphs(max_n=7, max_m=11, min_m=1))
@settings(max_examples=40, deadline=None)
def test_delta_coloring_agrees_with_search(S):
    c = delta_coloring(S, edge_guard=None)
    assert (c is not None) == is_delta_colorable(S, edge_guard=None)
    if c is not None:
        assert c.k == max_degree(S)
        assert verify_coloring(S, c).valid


@given(signed_graphs(max_n=6, max_m=9, min_m=1), st.data())
@settings(max_examples=40, deadline=None)
def test_chromatic_index_is_switching_invariant(S, data):
    X = data.draw(st.sets(st.integers(min_value=0, max_value=S.n - 1)))
    chi, witness = exact_chromatic_index(S, edge_guard=None)
    switched = switch(S, X)
    assert exact_chromatic_index(switched, edge_guard=None)[0] == chi
    assert verify_coloring(switched, switch_coloring(witness, X)).valid


@given(signed_graphs(max_n=6, max_m=9, min_m=1))
@settings(max_examples=40, deadline=None)
def test_colorability_is_monotone_in_palette_size(S):
    delta = max_degree(S)
    found = [decide_k_colorable(S, k, edge_guard=None) is not None for k in range(1, delta + 3)]
    assert found == sorted(found)
    assert not any(found[: delta - 1])
    assert found[delta]
