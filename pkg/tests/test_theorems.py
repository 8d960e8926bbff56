import pytest

from sgprod.coloring import verify_coloring
from sgprod.core import build_graph, make_cycle, make_path, make_star, max_degree
from sgprod.exceptions import PreconditionError
from sgprod.models import Certificate
from sgprod.products import cartesian, corona, strong, tensor
from sgprod.theorems import METHODS, choose_method, color_product, oracle_outcome

C3 = make_cycle(3, [1, 1, -1])
C4 = make_cycle(4, [1, -1, -1, 1])
UNBALANCED_C4 = make_cycle(4, [1, 1, 1, -1])
P2 = make_path(2, [-1])
P3 = make_path(3, [1, -1])
STAR = make_star(3, [1, -1, 1])

PRODUCTS = [
    (cartesian(C3, C4), "cycle-product"),
    (cartesian(P3, C4), "path-cycle"),
    (cartesian(C4, P3), "path-cycle"),
    (cartesian(P3, STAR), "cartesian"),
    (cartesian(STAR, P2), "cartesian"),
    (cartesian(UNBALANCED_C4, STAR), "oracle"),
    (tensor(P3, P2), "tensor-p2"),
    (tensor(P2, C4), "tensor-p2"),
    (tensor(C4, P3), "tensor-tree"),
    (tensor(P3, C4), "tensor-tree"),
    (strong(P2, P3)[0], "strong"),
    (strong(C3, P2)[0], "oracle"),
    (corona(C3, P2), "corona"),
    (corona(P2, P2), "oracle"),
]


@pytest.mark.parametrize("P,method", PRODUCTS)
def test_choose_method(P, method):
    assert choose_method(P) == method


@pytest.mark.parametrize("P,method", [(P, m) for P, m in PRODUCTS if m not in ("oracle", "cycle-product")])
def test_color_product_auto(P, method):
    outcome = color_product(P)
    assert outcome.claim == "delta"
    assert outcome.delta == max_degree(P.graph)
    assert outcome.coloring.k == outcome.delta
    assert verify_coloring(P.graph, outcome.coloring).valid


def test_cycle_product_dispatch():
    outcome = color_product(cartesian(C3, C4))
    assert outcome.claim == "delta"
    assert outcome.certificate == (Certificate.EVEN_ODD_DECOMPOSITION.value,)

    outcome = color_product(cartesian(C3, UNBALANCED_C4))
    assert outcome.claim == "delta-plus-one"
    assert outcome.coloring is None


def test_odd_odd_cartesian_certifies_zero_repair():
    outcome = color_product(cartesian(STAR, P2))
    assert outcome.certificate == (
        Certificate.CARTESIAN_COMBINATION.value,
        Certificate.ZERO_GRAPH_REPAIR.value,
    )


def test_oracle_fallback():
    P = corona(P2, P2)
    outcome = color_product(P)
    assert outcome.certificate == (Certificate.ORACLE.value,)
    if outcome.claim == "delta":
        assert verify_coloring(P.graph, outcome.coloring).valid


def test_oracle_outcome_on_unbalanced_cycle():
    outcome = oracle_outcome(UNBALANCED_C4)
    assert outcome.claim == "delta-plus-one"
    assert outcome.delta == 2


@pytest.mark.parametrize(
    "P,method",
    [
        (tensor(P3, P2), "cartesian"),
        (cartesian(P3, C4), "strong"),
        (tensor(P3, P2), "cycle-product"),
        (cartesian(P3, C4), "corona"),
        (cartesian(P3, C4), "bogus"),
    ],
)
def test_wrong_method_is_rejected(P, method):
    with pytest.raises(PreconditionError):
        color_product(P, method)


def test_named_method_needs_colorable_factors():
    with pytest.raises(PreconditionError):
        color_product(cartesian(UNBALANCED_C4, STAR), "cartesian")


def test_every_method_is_listed():
    assert METHODS[0] == "auto"
    assert {"cartesian", "tensor-tree", "corona", "oracle"} <= set(METHODS)


def test_strong_with_single_vertex_factor():
    P, _ = strong(build_graph(1, []), make_path(4, [1, 1, -1]))
    assert choose_method(P) == "strong"
    assert verify_coloring(P.graph, color_product(P).coloring).valid
