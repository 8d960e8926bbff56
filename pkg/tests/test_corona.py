import random
from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from sgprod.coloring import palette, verify_coloring
from sgprod.core import build_graph, make_complete, make_cycle, make_path, max_degree
from sgprod.exceptions import InvariantViolation, PreconditionError
from sgprod.models import IncidenceColoring
from sgprod.oracle import exact_chromatic_index
from sgprod.products import cartesian, corona
from sgprod.theorems.corona import color_corona, color_corona_product, color_corona_traced, recolor_copy

from .strategies import signed_graphs, signs_of

K1 = build_graph(1, [])
EDGE = build_graph(2, [(0, 1, 1)])
TRIANGLE = build_graph(3, [(0, 1, 1), (0, 2, 1), (1, 2, 1)])


def test_triangle_with_pendants_every_signature():
    cases = set()
    for cycle_signs in product((1, -1), repeat=3):
        for links in product((1, -1), repeat=3):
            P = corona(make_cycle(3, list(cycle_signs)), K1, list(links))
            c, steps = color_corona_traced(P)
            assert c.k == 3 == max_degree(P.graph)
            assert verify_coloring(P.graph, c).valid
            assert {step.method for step in steps} == {"cases"}
            cases |= {step.case for step in steps}
    assert cases == {"1a'", "1a''"}


@pytest.mark.parametrize(
    "S1,S2",
    [
        (make_cycle(4, [1, 1, 1, -1]), make_path(2, [-1])),
        (make_cycle(4, [1, 1, 1, 1]), make_path(2, [1])),
        (make_path(3, [1, -1]), make_path(3, [-1, -1])),
        (make_path(3, [1, 1]), make_cycle(3, [1, 1, -1])),
        (make_cycle(5, [1, -1, 1, 1, 1]), make_complete(3, [1, -1, 1])),
        (make_complete(4, [1, 1, -1, 1, 1, -1]), make_path(2, [1])),
    ],
)
def test_corona_coloring(S1, S2):
    links = [(-1) ** (i // 2) for i in range(S1.n * S2.n)]
    P = corona(S1, S2, links)
    c, steps = color_corona_traced(P)
    assert c.k == max_degree(S1) + S2.n == max_degree(P.graph)
    assert verify_coloring(P.graph, c).valid
    assert all(step.method == "cases" for step in steps)
    assert c == color_corona(S1, S2, links)


def test_traced_steps():
    S1, S2 = make_cycle(4, [1, 1, 1, -1]), make_path(2, [-1])
    P = corona(S1, S2)
    c, steps = color_corona_traced(P)
    assert [step.vertex for step in steps] == [0, 1, 2, 3]
    for step in steps:
        assert step.method == "cases"
        assert step.case == "2"
        assert not set(step.blocked) & set(step.hub_colors)
        assert set(step.blocked) | set(step.hub_colors) == set(palette(4))
        assert len(step.hub_colors) == S2.n
    assert c == color_corona_product(P)


def test_padded_base_colors_have_few_unpaired():
    # leaves of the path have degree 1 but are padded to degree 2
    P = corona(make_path(3, [1, -1]), make_path(3, [1, -1]), [1, -1] * 4 + [1])
    _, steps = color_corona_traced(P)
    for step in steps:
        blocked = set(step.blocked)
        assert len(blocked) == 2
        assert len([x for x in blocked if x and -x not in blocked]) <= 1
        assert blocked | set(step.hub_colors) == set(palette(5))


def _coloring(k, values):
    return IncidenceColoring(k=k, values=values)


# (K, coloring of K moved into M_delta, padded base colors, delta, delta1, case, hub colors)
RECOLOR_CASES = [
    (EDGE, _coloring(3, [(0, 1, 1, -1)]), {0, -1}, 3, 2, "1a'", (1,)),
    (EDGE, _coloring(3, [(0, 1, 1, -1)]), {1, -1}, 3, 2, "1a''", (0,)),
    (
        TRIANGLE,
        _coloring(5, [(0, 1, 0, 0), (0, 2, 1, -1), (1, 2, -1, 1)]),
        {1, -1, 2},
        5,
        3,
        "1b'",
        (-2, 0),
    ),
    (
        TRIANGLE,
        _coloring(5, [(0, 1, 1, -1), (0, 2, -1, 1), (1, 2, 0, 0)]),
        {1, -1, 2},
        5,
        3,
        "1b''",
        (-2, 0),
    ),
    (EDGE, _coloring(4, [(0, 1, 1, -1)]), {1, -1, 2}, 4, 3, "2", (-2,)),
    (
        TRIANGLE,
        _coloring(4, [(0, 1, 2, -2), (0, 2, 1, -1), (1, 2, -1, 1)]),
        {1, 2},
        4,
        2,
        "2",
        (-2, -1),
    ),
    (
        TRIANGLE,
        _coloring(4, [(0, 1, 1, -1), (0, 2, -1, 1), (1, 2, 2, -2)]),
        {1, 2},
        4,
        2,
        "2",
        (-2, -1),
    ),
    (
        TRIANGLE,
        _coloring(4, [(0, 1, 2, -2), (0, 2, 1, -1), (1, 2, -1, 1)]),
        {1, -1},
        4,
        2,
        "2",
        (-2, 2),
    ),
    (
        TRIANGLE,
        _coloring(4, [(0, 1, 1, -1), (0, 2, -1, 1), (1, 2, 2, -2)]),
        {1, -1},
        4,
        2,
        "2",
        (-2, 2),
    ),
]


@pytest.mark.parametrize("K,c,blocked,delta,delta1,case,hub", RECOLOR_CASES)
def test_recolor_copy(K, c, blocked, delta, delta1, case, hub):
    assert verify_coloring(K, c).valid
    label, result = recolor_copy(K, c, frozenset(blocked), delta, delta1)
    assert label == case
    assert result.k == delta
    assert verify_coloring(K, result).valid
    assert tuple(sorted(fu for u, _, fu, _ in result.values if u == 0)) == hub
    assert not set(hub) & blocked


def test_recolor_copy_reaches_every_case():
    assert {case for *_, case, _ in RECOLOR_CASES} == {"1a'", "1a''", "1b'", "1b''", "2"}


def test_recolor_copy_rejects_unpaired_base_colors():
    # odd delta allows one unpaired color at the base vertex
    with pytest.raises(InvariantViolation):
        recolor_copy(EDGE, _coloring(7, [(0, 1, 1, -1)]), frozenset({0, 1, -1, 2, 3}), 7, 5)
    # even delta allows two, one of them ±delta/2
    with pytest.raises(InvariantViolation):
        recolor_copy(EDGE, _coloring(6, [(0, 1, 1, -1)]), frozenset({1, 2}), 6, 2)


def test_recolor_copy_rejects_unpaired_hub_colors():
    c = _coloring(6, [(0, 1, 1, -1), (0, 2, 2, -2), (1, 2, -2, 2)])
    with pytest.raises(InvariantViolation):
        recolor_copy(TRIANGLE, c, frozenset({1, -1, 2, 3}), 6, 4)


@pytest.mark.parametrize("S1", [make_path(2, [1]), build_graph(3, [])])
def test_base_needs_degree_two(S1):
    with pytest.raises(PreconditionError):
        color_corona(S1, K1)


def test_corona_requires_corona_product(p4):
    with pytest.raises(PreconditionError):
        color_corona_product(cartesian(p4, K1))


@given(signed_graphs(max_n=5, max_m=6, min_m=2), signed_graphs(max_n=3, max_m=3), st.data())
@settings(max_examples=25, deadline=None)
def test_random_coronas(S1, S2, data):
    assume(max_degree(S1) >= 2)
    links = data.draw(signs_of(S1.n * S2.n))
    P = corona(S1, S2, links)
    c, steps = color_corona_traced(P, edge_guard=None)
    assert verify_coloring(P.graph, c).valid
    assert all(step.method == "cases" for step in steps)


@pytest.mark.slow
def test_seeded_corona_signatures_against_oracle():
    rng = random.Random(2024)
    shapes = [
        (make_cycle(3, [1] * 3), K1),
        (make_cycle(4, [1] * 4), EDGE),
        (make_complete(4, [1] * 6), EDGE),
        (make_path(3, [1] * 2), make_path(3, [1] * 2)),
        (make_complete(4, [1] * 6), K1),
    ]
    cases = set()
    for trial in range(200):
        S1, S2 = shapes[trial % len(shapes)]
        S1 = S1.with_signs(rng.choice((1, -1)) for _ in range(S1.m))
        S2 = S2.with_signs(rng.choice((1, -1)) for _ in range(S2.m))
        links = [rng.choice((1, -1)) for _ in range(S1.n * S2.n)]
        P = corona(S1, S2, links)
        c, steps = color_corona_traced(P, edge_guard=None)
        delta = max_degree(P.graph)
        assert c.k == delta
        assert verify_coloring(P.graph, c).valid
        assert exact_chromatic_index(P.graph, edge_guard=None)[0] == delta
        assert all(step.method == "cases" for step in steps)
        cases |= {step.case for step in steps}
    assert {"1a'", "1a''", "2"} <= cases
