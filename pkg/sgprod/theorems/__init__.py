"""Constructive Δ-colorings of product graphs and the dispatcher choosing among them."""

import logging
from typing import Callable, Dict, Literal, Optional, Tuple, get_args

from ..base import DEFAULT_SETTINGS
from ..core import components, cycle_order, is_forest, max_degree, path_order
from ..exceptions import GraphError, InvariantViolation, PreconditionError
from ..models import Certificate, IncidenceColoring, ProductGraph, SignedGraph, TheoremOutcome
from ..oracle import delta_coloring, exact_chromatic_index
from ..products import inverse_map, transport_coloring, transpose_product
from .cartesian import (
    classify_cycle_product,
    classify_cycle_product_graph,
    color_cartesian_combined,
    color_cartesian_path_cycle,
    color_path_cycle_product,
    decompose_even_even,
    decompose_even_even_product,
    decompose_even_odd_product,
    parity_lower_bound,
    regular_decomposition_check,
    switch_to_all_negative,
    switch_to_all_negative_product,
)
from .corona import color_corona, color_corona_product, color_corona_traced
from .strong import color_strong_combined, color_strong_paths, color_strong_paths_product
from .tensor import (
    color_tensor_p2,
    color_tensor_p2_product,
    color_tensor_tree,
    color_tensor_tree_product,
    greedy_tree_edge_coloring,
    tensor_copy_decomposition,
)

logger = logging.getLogger(__name__)

Method = Literal[
    "auto",
    "cartesian",
    "path-cycle",
    "even-even",
    "cycle-product",
    "tensor-p2",
    "tensor-tree",
    "strong",
    "corona",
    "oracle",
]

METHODS: Tuple[str, ...] = get_args(Method)


def _is_path(S: SignedGraph) -> bool:
    try:
        path_order(S)
    except GraphError:
        return False
    return True


def _is_cycle(S: SignedGraph) -> bool:
    try:
        cycle_order(S)
    except GraphError:
        return False
    return True


def _is_tree(S: SignedGraph) -> bool:
    return S.m > 0 and is_forest(S) and len(components(S)) == 1


def _factor_coloring(S: SignedGraph, name: str, edge_guard: Optional[int]) -> IncidenceColoring:
    c = delta_coloring(S, edge_guard)
    if c is None:
        raise PreconditionError(f"The {name} factor is not Δ-colorable")
    return c


def _transposed(P: ProductGraph, color: Callable[[ProductGraph], IncidenceColoring]) -> IncidenceColoring:
    Q, mapping = transpose_product(P)
    return transport_coloring(color(Q), inverse_map(mapping))


def _cartesian(P: ProductGraph, edge_guard: Optional[int]) -> Tuple[IncidenceColoring, Tuple[str, ...]]:
    S1, S2 = P.factors
    c1 = _factor_coloring(S1, "first", edge_guard)
    c2 = _factor_coloring(S2, "second", edge_guard)
    certificate = (Certificate.CARTESIAN_COMBINATION.value,)
    if c1.k % 2 and c2.k % 2:
        certificate += (Certificate.ZERO_GRAPH_REPAIR.value,)
    return color_cartesian_combined(S1, c1, S2, c2), certificate


def _path_cycle(P: ProductGraph, edge_guard: Optional[int]) -> Tuple[IncidenceColoring, Tuple[str, ...]]:
    S1, _ = P.factors
    c = color_path_cycle_product(P) if _is_path(S1) else _transposed(P, color_path_cycle_product)
    return c, (Certificate.PATH_CYCLE_DECOMPOSITION.value,)


def _even_even(P: ProductGraph, edge_guard: Optional[int]) -> Tuple[IncidenceColoring, Tuple[str, ...]]:
    return decompose_even_even_product(P)[1], (Certificate.EVEN_EVEN_DECOMPOSITION.value,)


def _tensor_p2(P: ProductGraph, edge_guard: Optional[int]) -> Tuple[IncidenceColoring, Tuple[str, ...]]:
    S1, S2 = P.factors
    if S2.n == 2 and S2.m == 1:
        c = color_tensor_p2_product(P, _factor_coloring(S1, "first", edge_guard))
    else:
        c = _transposed(P, lambda Q: color_tensor_p2_product(Q, _factor_coloring(S2, "second", edge_guard)))
    return c, (Certificate.TENSOR_PATH.value,)


def _tensor_tree(P: ProductGraph, edge_guard: Optional[int]) -> Tuple[IncidenceColoring, Tuple[str, ...]]:
    S1, S2 = P.factors
    if _is_tree(S2):
        c = color_tensor_tree_product(P, _factor_coloring(S1, "first", edge_guard))
    else:
        c = _transposed(P, lambda Q: color_tensor_tree_product(Q, _factor_coloring(S2, "second", edge_guard)))
    return c, (Certificate.TENSOR_TREE.value,)


def _strong(P: ProductGraph, edge_guard: Optional[int]) -> Tuple[IncidenceColoring, Tuple[str, ...]]:
    return color_strong_paths_product(P), (Certificate.STRONG_COMBINATION.value,)


def _corona(P: ProductGraph, edge_guard: Optional[int]) -> Tuple[IncidenceColoring, Tuple[str, ...]]:
    return color_corona_product(P, edge_guard), (Certificate.CORONA_INDUCTION.value,)


_CONSTRUCTIONS: Dict[str, Tuple[str, Callable]] = {
    "cartesian": ("cartesian", _cartesian),
    "path-cycle": ("cartesian", _path_cycle),
    "even-even": ("cartesian", _even_even),
    "tensor-p2": ("tensor", _tensor_p2),
    "tensor-tree": ("tensor", _tensor_tree),
    "strong": ("strong", _strong),
    "corona": ("corona", _corona),
}


def oracle_outcome(S: SignedGraph, edge_guard: Optional[int] = DEFAULT_SETTINGS.oracle_edge_guard) -> TheoremOutcome:
    """Classify any graph with the exact search."""
    chi, witness = exact_chromatic_index(S, edge_guard)
    delta = max_degree(S)
    if chi == delta:
        return TheoremOutcome(claim="delta", delta=delta, coloring=witness, certificate=(Certificate.ORACLE.value,))
    return TheoremOutcome(claim="delta-plus-one", delta=delta, certificate=(Certificate.ORACLE.value,))


def choose_method(P: ProductGraph, edge_guard: Optional[int] = DEFAULT_SETTINGS.oracle_edge_guard) -> str:
    """Construction that applies to P, or ``oracle`` when none does."""
    S1, S2 = P.factors
    if P.kind == "cartesian":
        if _is_cycle(S1) and _is_cycle(S2):
            return "cycle-product"
        if (_is_path(S1) and _is_cycle(S2)) or (_is_cycle(S1) and _is_path(S2)):
            return "path-cycle"
        if S1.m and S2.m and all(delta_coloring(S, edge_guard) is not None for S in (S1, S2)):
            return "cartesian"
    elif P.kind == "tensor":
        for tree, other in ((S2, S1), (S1, S2)):
            if _is_tree(tree) and other.m and delta_coloring(other, edge_guard) is not None:
                return "tensor-p2" if tree.n == 2 else "tensor-tree"
    elif P.kind == "strong":
        paths = [S.n == 1 or _is_path(S) for S in (S1, S2)]
        if all(paths) and S1.n + S2.n > 2:
            return "strong"
    elif P.kind == "corona":
        if max_degree(S1) >= 2 and S2.n:
            return "corona"
    return "oracle"


def color_product(
    P: ProductGraph,
    method: Method = "auto",
    edge_guard: Optional[int] = DEFAULT_SETTINGS.oracle_edge_guard,
) -> TheoremOutcome:
    """
    Δ-coloring of a product by the construction that fits it.

    Args:
        P: The product
        method: A construction name, ``auto`` to pick one, or ``oracle``
        edge_guard: Edge guard for every oracle call

    Raises:
        PreconditionError: If the named construction does not apply to P
        GuardExceededError: If the oracle is needed above its edge guard
    """
    if method not in METHODS:
        raise PreconditionError(f"Unknown coloring method: {method}")
    if method == "auto":
        method = choose_method(P, edge_guard)
        logger.info("coloring %s product with %s", P.kind, method)
    if method == "oracle":
        return oracle_outcome(P.graph, edge_guard)
    if method == "cycle-product":
        if P.kind != "cartesian":
            raise PreconditionError("The cycle-product classification needs a Cartesian product")
        return classify_cycle_product_graph(P)

    kind, construct = _CONSTRUCTIONS[method]
    if P.kind != kind:
        raise PreconditionError(f"Method {method} needs a {kind} product, got {P.kind}")
    c, certificate = construct(P, edge_guard)
    delta = max_degree(P.graph)
    if c.k != delta:
        raise InvariantViolation(f"Method {method} produced M_{c.k} on a graph with Δ = {delta}")
    return TheoremOutcome(claim="delta", delta=delta, coloring=c, certificate=certificate)


__all__ = [
    "METHODS",
    "Method",
    "choose_method",
    "classify_cycle_product",
    "classify_cycle_product_graph",
    "color_cartesian_combined",
    "color_cartesian_path_cycle",
    "color_corona",
    "color_corona_product",
    "color_corona_traced",
    "color_path_cycle_product",
    "color_product",
    "color_strong_combined",
    "color_strong_paths",
    "color_strong_paths_product",
    "color_tensor_p2",
    "color_tensor_p2_product",
    "color_tensor_tree",
    "color_tensor_tree_product",
    "decompose_even_even",
    "decompose_even_even_product",
    "decompose_even_odd_product",
    "greedy_tree_edge_coloring",
    "oracle_outcome",
    "parity_lower_bound",
    "regular_decomposition_check",
    "switch_to_all_negative",
    "switch_to_all_negative_product",
    "tensor_copy_decomposition",
]
