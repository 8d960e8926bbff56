import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgprod.coloring import (
    color_balanced_cycle,
    color_degree_two,
    color_matching,
    color_path,
    color_set,
    color_signed_forest,
    merge_colorings,
    palette,
    remap_zero,
    shift_colors,
    switch_coloring,
    verify_coloring,
    zero_graph,
)
from sgprod.core import build_graph, make_cycle, make_path, make_star, make_tree, max_degree, switch
from sgprod.exceptions import ColoringError, GraphError, PreconditionError
from sgprod.models import Decomposition, IncidenceColoring

from .strategies import signed_graphs, signs_of


@pytest.mark.parametrize(
    "k,members",
    [
        (1, (0,)),
        (2, (-1, 1)),
        (3, (-1, 0, 1)),
        (4, (-2, -1, 1, 2)),
        (5, (-2, -1, 0, 1, 2)),
    ],
)
def test_color_set(k, members):
    assert color_set(k).members == members
    assert len(color_set(k).members) == k


def test_color_set_rejects_zero():
    with pytest.raises(ColoringError):
        color_set(0)


def test_palette_search_order():
    assert palette(5) == (0, 1, -1, 2, -2)
    assert palette(4) == (1, -1, 2, -2)


def test_verify_accepts_valid_coloring():
    S = make_path(2, [-1])
    c = IncidenceColoring(k=2, values=[(0, 1, 1, 1)])
    assert verify_coloring(S, c).valid


def test_verify_reports_each_kind_of_violation():
    S = make_path(3, [1, 1])
    bad_relation = IncidenceColoring(k=2, values=[(0, 1, 1, 1), (1, 2, -1, 1)])
    kinds = {v.kind for v in verify_coloring(S, bad_relation).violations}
    assert "edge-relation" in kinds

    clash = IncidenceColoring(k=2, values=[(0, 1, 1, -1), (1, 2, -1, 1)])
    report = verify_coloring(S, clash)
    assert not report.valid
    assert report.violations[0].kind == "vertex-distinctness"
    assert report.violations[0].vertex == 1

    outside = IncidenceColoring(k=2, values=[(0, 1, 0, 0), (1, 2, 1, -1)])
    assert "palette" in {v.kind for v in verify_coloring(S, outside).violations}


def test_verify_rejects_coloring_of_another_graph(p4):
    c = IncidenceColoring(k=2, values=[(0, 1, 1, -1)])
    with pytest.raises(ColoringError):
        verify_coloring(p4, c)


def test_color_path(p4):
    c = color_path(p4)
    assert c.k == 2
    assert verify_coloring(p4, c).valid


def test_color_path_single_edge_uses_zero():
    c = color_path(make_path(2, [-1]))
    assert c.k == 1
    assert c.values == ((0, 1, 0, 0),)


def test_color_path_rejects_cycles(balanced_c4):
    with pytest.raises(GraphError):
        color_path(balanced_c4)


@pytest.mark.parametrize("signs", [[1, 1, 1, 1], [-1, -1, 1, 1], [-1, 1, -1, 1], [-1, -1, -1, -1]])
def test_color_balanced_cycle(signs):
    S = make_cycle(4, signs)
    c = color_balanced_cycle(S)
    assert c.k == 2
    assert verify_coloring(S, c).valid


def test_color_balanced_cycle_rejects_unbalanced(unbalanced_c4):
    with pytest.raises(GraphError):
        color_balanced_cycle(unbalanced_c4)


def test_color_degree_two_on_paths_and_cycles():
    S = build_graph(7, [(0, 1, 1), (1, 2, -1), (3, 4, 1), (4, 5, 1), (3, 5, 1)])
    c = color_degree_two(S, magnitude=2, k=5)
    assert c.k == 5
    assert c.used_colors() <= {2, -2}
    assert verify_coloring(S, c).valid


def test_color_degree_two_rejects_unbalanced_cycle():
    with pytest.raises(PreconditionError):
        color_degree_two(make_cycle(3, [1, 1, -1]))


def test_color_matching():
    S = build_graph(4, [(0, 1, 1), (2, 3, -1)])
    c = color_matching(S)
    assert c.k == 1
    assert verify_coloring(S, c).valid
    with pytest.raises(PreconditionError):
        color_matching(make_path(3, [1, 1]))


@pytest.mark.parametrize("leaves", [1, 2, 3, 4, 5])
def test_color_signed_forest_on_stars(leaves):
    S = make_star(leaves, [(-1) ** i for i in range(leaves)])
    c = color_signed_forest(S)
    assert c.k == leaves
    assert verify_coloring(S, c).valid


def test_color_signed_forest_with_larger_palette(p4):
    c = color_signed_forest(p4, k=5)
    assert c.k == 5
    assert verify_coloring(p4, c).valid


def test_color_signed_forest_rejects_small_palette_and_cycles(balanced_c4):
    with pytest.raises(PreconditionError):
        color_signed_forest(make_star(3, [1, 1, 1]), k=2)
    with pytest.raises(GraphError):
        color_signed_forest(balanced_c4)


@given(st.integers(min_value=2, max_value=9), st.integers(min_value=0, max_value=100), st.data())
@settings(max_examples=40, deadline=None)
def test_color_signed_forest_on_random_trees(n, seed, data):
    signs = data.draw(signs_of(n - 1))
    T = make_tree(n, signs, seed)
    c = color_signed_forest(T)
    assert c.k == max_degree(T)
    assert verify_coloring(T, c).valid


def test_shift_colors():
    c = IncidenceColoring(k=2, values=[(0, 1, 1, -1), (1, 2, 1, -1)])
    shifted = shift_colors(c, 2)
    assert shifted.k == 6
    assert shifted.values == ((0, 1, 3, -3), (1, 2, 3, -3))


def test_shift_colors_zero_handling():
    c = IncidenceColoring(k=3, values=[(0, 1, 0, 0), (1, 2, 1, -1)])
    with pytest.raises(ColoringError):
        shift_colors(c, 1)
    kept = shift_colors(c, 1, keep_zero=True)
    assert kept.k == 5
    assert kept.values == ((0, 1, 0, 0), (1, 2, 2, -2))


def test_remap_zero():
    S = make_path(3, [1, -1])
    c = IncidenceColoring(k=3, values=[(0, 1, 1, -1), (1, 2, 0, 0)])
    remapped = remap_zero(S, c, 2, k=4)
    assert remapped.k == 4
    assert remapped.edge_colors()[(1, 2)] == (2, 2)


def test_merge_colorings(p4):
    D = Decomposition(parts=[[0, 2], [1]])
    first = IncidenceColoring(k=2, values=[(0, 1, 1, -1), (2, 3, 1, -1)])
    second = IncidenceColoring(k=1, values=[(1, 2, 0, 0)])
    merged = merge_colorings(p4, D, [first, second], 3)
    assert merged.k == 3
    assert verify_coloring(p4, merged).valid


def test_merge_colorings_reports_collisions(p4):
    D = Decomposition(parts=[[0], [1, 2]])
    first = IncidenceColoring(k=2, values=[(0, 1, 1, -1)])
    second = IncidenceColoring(k=2, values=[(1, 2, -1, -1), (2, 3, 1, -1)])
    with pytest.raises(ColoringError):
        merge_colorings(p4, D, [first, second])


def test_merge_colorings_rejects_bad_decomposition(p4):
    with pytest.raises(ColoringError):
        merge_colorings(p4, Decomposition(parts=[[0, 1]]), [color_path(p4)])


def test_zero_graph():
    S = make_path(3, [1, 1])
    c = IncidenceColoring(k=3, values=[(0, 1, 0, 0), (1, 2, 1, -1)])
    assert zero_graph(S, c).edges == ((0, 1, 1),)


@given(signed_graphs(max_n=7, max_m=10, min_m=1), st.data())
@settings(max_examples=40, deadline=None)
def test_switch_coloring_follows_switch(S, data):
    from sgprod.oracle import exact_chromatic_index

    _, c = exact_chromatic_index(S, edge_guard=None)
    X = data.draw(st.sets(st.integers(min_value=0, max_value=S.n - 1)))
    assert verify_coloring(switch(S, X), switch_coloring(c, X)).valid


@given(signed_graphs(max_n=6, max_m=8, min_m=1), st.data())
@settings(max_examples=40, deadline=None)
def test_verifier_rejects_perturbed_incidence(S, data):
    from sgprod.oracle import exact_chromatic_index

    _, c = exact_chromatic_index(S, edge_guard=None)
    row = data.draw(st.integers(min_value=0, max_value=len(c.values) - 1))
    u, v, fu, fv = c.values[row]
    values = list(c.values)
    values[row] = (u, v, fu, -fv if fv else fv + 1)
    tampered = IncidenceColoring(k=c.k, values=values)
    assert not verify_coloring(S, tampered).valid
