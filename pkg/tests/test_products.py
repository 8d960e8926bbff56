import pytest
from hypothesis import given, settings

from sgprod.coloring import verify_coloring
from sgprod.core import build_graph, make_complete, make_cycle, make_path
from sgprod.exceptions import ProductError
from sgprod.models import Incidence
from sgprod.oracle import exact_chromatic_index
from sgprod.products import (
    build_product,
    cartesian,
    corona,
    link_signs_of,
    part_graph,
    project,
    project_edge,
    project_vertex,
    strong,
    tensor,
    transport_coloring,
    transpose_product,
)

from .strategies import signed_graphs


def test_cartesian_counts_and_signs():
    S1 = make_path(2, [-1])
    S2 = make_path(3, [1, -1])
    P = cartesian(S1, S2)
    assert P.graph.n == 6
    assert P.graph.m == 7
    assert P.graph.sign(P.pair(0, 0), P.pair(1, 0)) == -1
    assert P.graph.sign(P.pair(1, 1), P.pair(1, 2)) == -1
    assert P.graph.sign(P.pair(0, 0), P.pair(0, 1)) == 1


def test_tensor_sign_is_product():
    S = make_path(2, [-1])
    P = tensor(S, S)
    assert P.graph.m == 2
    assert P.graph.signs == (1, 1)
    assert all(o.kind == "both" for o in P.origins)


def test_strong_is_union_with_decomposition():
    S1, S2 = make_path(2, [1]), make_path(3, [1, -1])
    P, D = strong(S1, S2)
    assert P.graph.m == cartesian(S1, S2).graph.m + tensor(S1, S2).graph.m
    cartesian_part, tensor_part = D.parts
    assert len(cartesian_part) == 7
    assert len(tensor_part) == 4
    assert part_graph(P, lambda o: o.kind == "both").m == 4


def test_corona_layout_and_link_signs():
    S1 = make_cycle(3, [1, 1, -1])
    S2 = make_path(2, [-1])
    links = [1, -1, -1, 1, 1, 1]
    P = corona(S1, S2, links)
    assert P.graph.n == 9
    assert P.graph.m == 3 + 3 + 6
    assert P.attachments == (0, 1, 2)
    assert P.pair(1, 0) == 5
    assert link_signs_of(P) == links
    assert P.graph.sign(1, 5) == -1


def test_corona_defaults_to_positive_links():
    P = corona(make_path(2, [1]), make_path(2, [1]))
    assert link_signs_of(P) == [1, 1, 1, 1]


@pytest.mark.parametrize("links", [[1, 1, 1], [1, 1, 1, 0]])
def test_corona_rejects_bad_link_signs(links):
    with pytest.raises(ProductError):
        corona(make_path(2, [1]), make_path(2, [1]), links)


def test_link_signs_only_for_corona():
    with pytest.raises(ProductError):
        link_signs_of(cartesian(make_path(2, [1]), make_path(2, [1])))


@given(signed_graphs(max_n=5, max_m=6), signed_graphs(max_n=5, max_m=6))
@settings(max_examples=40, deadline=None)
def test_degree_formulas(S1, S2):
    d1, d2 = S1.degrees(), S2.degrees()
    boxes = cartesian(S1, S2)
    crosses = tensor(S1, S2)
    strongs, _ = strong(S1, S2)
    for i in range(S1.n):
        for j in range(S2.n):
            v = boxes.pair(i, j)
            assert boxes.graph.degrees()[v] == d1[i] + d2[j]
            assert crosses.graph.degrees()[v] == d1[i] * d2[j]
            assert strongs.graph.degrees()[v] == d1[i] + d2[j] + d1[i] * d2[j]


@given(signed_graphs(max_n=4, max_m=5), signed_graphs(max_n=4, max_m=5))
@settings(max_examples=30, deadline=None)
def test_corona_degrees(S1, S2):
    P = corona(S1, S2)
    degrees = P.graph.degrees()
    d1, d2 = S1.degrees(), S2.degrees()
    for i in range(S1.n):
        assert degrees[i] == d1[i] + S2.n
        for j in range(S2.n):
            assert degrees[P.pair(i, j)] == d2[j] + 1


def test_project_vertex_and_edge():
    S1, S2 = make_path(2, [1]), make_path(3, [1, -1])
    P = cartesian(S1, S2)
    v = P.pair(1, 2)
    assert project_vertex(P, 1, v) == 1
    assert project_vertex(P, 2, v) == 2

    index = P.graph.edge_index()[(P.pair(0, 1), P.pair(1, 1))]
    projected = project_edge(P, 1, index)
    assert projected.edge == 0
    assert projected.fixed == 1
    with pytest.raises(ProductError):
        project_edge(P, 2, index)


def test_project_incidence():
    P = cartesian(make_path(2, [1]), make_path(3, [1, -1]))
    index = P.graph.edge_index()[(P.pair(0, 1), P.pair(0, 2))]
    assert project(P, 2, (P.pair(0, 1), index), kind="incidence") == Incidence(1, 1)
    with pytest.raises(ProductError):
        project(P, 2, (P.pair(1, 0), index), kind="incidence")


def test_corona_projections():
    P = corona(make_path(2, [1]), make_path(2, [1]))
    assert project_vertex(P, 1, 1) == 1
    assert project_vertex(P, 2, P.pair(1, 1)) == 1
    with pytest.raises(ProductError):
        project_vertex(P, 2, 0)
    with pytest.raises(ProductError):
        project_vertex(P, 1, P.pair(0, 0))


@pytest.mark.parametrize("which", [0, 3])
def test_projection_rejects_bad_factor(which):
    P = cartesian(make_path(2, [1]), make_path(2, [1]))
    with pytest.raises(ProductError):
        project_vertex(P, which, 0)


def test_build_product_dispatch():
    S1, S2 = make_path(2, [1]), make_cycle(3, [1, 1, 1])
    assert build_product("strong", S1, S2) == strong(S1, S2)[0]
    assert build_product("corona", S1, S2).kind == "corona"
    with pytest.raises(ProductError):
        build_product("lexicographic", S1, S2)


def test_transpose_carries_colorings():
    S1, S2 = make_path(2, [-1]), make_cycle(3, [1, 1, -1])
    P = cartesian(S1, S2)
    swapped, mapping = transpose_product(P)
    assert swapped.factors == (S2, S1)
    assert swapped.graph.m == P.graph.m
    _, c = exact_chromatic_index(P.graph, edge_guard=None)
    assert verify_coloring(swapped.graph, transport_coloring(c, mapping)).valid


def test_corona_cannot_be_transposed():
    with pytest.raises(ProductError):
        transpose_product(corona(make_path(2, [1]), make_path(2, [1])))


def test_product_of_edgeless_factor():
    P = cartesian(build_graph(2, []), make_complete(3, [1, 1, 1]))
    assert P.graph.m == 6
