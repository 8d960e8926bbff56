"""Δ-colorings of strong products."""

import logging
from typing import Sequence

from ..coloring import (
    check_coloring,
    color_layer,
    color_matching,
    color_path,
    merge_colorings,
    require_delta_coloring,
    shift_colors,
)
from ..core import make_path, path_order
from ..exceptions import GraphError, PreconditionError
from ..models import Decomposition, IncidenceColoring, ProductGraph
from ..products import inverse_map, strong, transport_coloring, transpose_product
from .cartesian import color_cartesian_combined
from .tensor import color_tensor_tree

logger = logging.getLogger(__name__)


def _parts(P: ProductGraph):
    if P.kind != "strong":
        raise PreconditionError(f"Expected a strong product, got {P.kind}")
    cartesian_part = [i for i, o in enumerate(P.origins) if o.kind != "both"]
    tensor_part = [i for i, o in enumerate(P.origins) if o.kind == "both"]
    return cartesian_part, tensor_part


def color_strong_combined(
    c1: IncidenceColoring, c2: IncidenceColoring, P: ProductGraph
) -> IncidenceColoring:
    """
    Merge colorings of the Cartesian and tensor parts of a strong product.

    The part with even maximum degree is shifted past the other part's magnitudes.

    Args:
        c1: Δ-coloring of the Cartesian part, in product vertex ids
        c2: Δ-coloring of the tensor part, in product vertex ids
        P: The strong product

    Returns:
        A (Δ(H1) + Δ(H2))-coloring of the product

    Raises:
        PreconditionError: If a part coloring is not a Δ-coloring or both maximum
            degrees are odd
    """
    cartesian_part, tensor_part = _parts(P)
    H1, H2 = P.graph.restrict(cartesian_part), P.graph.restrict(tensor_part)
    d1 = require_delta_coloring(H1, c1, "Cartesian part")
    d2 = require_delta_coloring(H2, c2, "tensor part")
    if d2 % 2 == 0:
        first, second = c1, shift_colors(c2, d1 // 2)
    elif d1 % 2 == 0:
        first, second = shift_colors(c1, d2 // 2), c2
    else:
        raise PreconditionError(f"One part must have even maximum degree, got {d1} and {d2}")
    k = d1 + d2
    logger.debug("strong combination: Δ(H1)=%d Δ(H2)=%d", d1, d2)
    D = Decomposition(parts=[cartesian_part, tensor_part])
    return merge_colorings(P.graph, D, [first, second], k)


def color_strong_paths(r: int, sigma1: Sequence[int], s: int, sigma2: Sequence[int]) -> IncidenceColoring:
    """
    Δ-coloring of P_r ⊠ P_s; vertex ids follow ``strong(P_r, P_s)``.

    Raises:
        PreconditionError: If r = s = 1
    """
    P, _ = strong(make_path(r, sigma1), make_path(s, sigma2))
    return color_strong_paths_product(P)


def _require_path(name: str, P: ProductGraph, which: int) -> int:
    S = P.factors[which]
    if S.n == 1 and S.m == 0:
        return 1
    try:
        return len(path_order(S))
    except GraphError:
        raise PreconditionError(f"The {name} factor is not a path")


def color_strong_paths_product(P: ProductGraph) -> IncidenceColoring:
    """
    Δ-coloring of a strong product of two paths.

    With a one-vertex factor the product is a path. P2 ⊠ P2 is K4: its Cartesian
    part is a balanced C4 colored ±1 and its tensor part a matching colored 0.
    Otherwise the Cartesian and tensor parts are colored separately and combined.
    """
    _parts(P)
    r, s = _require_path("first", P, 0), _require_path("second", P, 1)
    if r == 1 and s == 1:
        raise PreconditionError("P1 ⊠ P1 has no edges")
    if r > s:
        Q, mapping = transpose_product(P)
        back = transport_coloring(color_strong_paths_product(Q), inverse_map(mapping))
        return check_coloring(P.graph, back)

    S1, S2 = P.factors
    if r == 1:
        logger.debug("strong paths: P1 x P%d is a path", s)
        return check_coloring(P.graph, color_path(P.graph))
    if r == 2 and s == 2:
        cartesian_part, tensor_part = _parts(P)
        c1 = color_layer(P.graph.restrict(cartesian_part), 1, 3)
        c2 = color_matching(P.graph.restrict(tensor_part))
        return merge_colorings(P.graph, Decomposition(parts=[cartesian_part, tensor_part]), [c1, c2], 3)

    base1, base2 = color_path(S1), color_path(S2)
    c_cartesian = color_cartesian_combined(S1, base1, S2, base2)
    c_tensor = color_tensor_tree(S1, base1, S2)
    return color_strong_combined(c_cartesian, c_tensor, P)
