"""Δ-colorings of Cartesian products and the cycle-product classification."""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..coloring import (
    check_coloring,
    color_balanced_cycle,
    color_layer,
    color_matching,
    merge_colorings,
    require_delta_coloring,
    shift_colors,
    zero_graph,
)
from ..core import (
    components,
    cycle_order,
    edges_between,
    is_balanced,
    make_cycle,
    make_path,
    path_order,
    regular_degree,
    switch,
    switching_set_to,
)
from ..exceptions import InvariantViolation, PreconditionError
from ..models import (
    Certificate,
    Decomposition,
    EdgeKey,
    IncidenceColoring,
    ProductGraph,
    SignedGraph,
    TheoremOutcome,
    VertexSet,
)
from ..products import cartesian, inverse_map, transport_coloring, transpose_product

logger = logging.getLogger(__name__)


def _lift(P: ProductGraph, first: IncidenceColoring, second: IncidenceColoring) -> Dict[EdgeKey, Tuple[int, int]]:
    # pair(i, j) is monotone in each coordinate, so factor orientation is kept
    S1, S2 = P.factors
    c1, c2 = first.edge_colors(), second.edge_colors()
    colors = {}
    for (u, v, _), origin in zip(P.graph.edges, P.origins):
        if origin.kind == "first":
            colors[(u, v)] = c1[S1.edges[origin.first][:2]]
        else:
            colors[(u, v)] = c2[S2.edges[origin.second][:2]]
    return colors


def _repair_zero_graph(S: SignedGraph, c: IncidenceColoring, magnitude: int) -> IncidenceColoring:
    H = zero_graph(S, c)
    adj = H.adjacency()
    for component in components(H):
        size = len(component)
        if size == 1:
            continue
        part = H.restrict(i for v in component for _, i in adj[v])
        if not (size == 2 or (size == 4 and part.m == 4 and is_balanced(part))):
            raise InvariantViolation(f"Zero graph component on {component} is not an edge or a balanced C4")
    logger.debug("recoloring %d zero edges with ±%d", H.m, magnitude)
    colors = c.edge_colors()
    colors.update(color_layer(H, magnitude, c.k).edge_colors())
    return IncidenceColoring.from_edge_colors(c.k, colors)


def color_cartesian_combined(
    S1: SignedGraph,
    c1: IncidenceColoring,
    S2: SignedGraph,
    c2: IncidenceColoring,
) -> IncidenceColoring:
    """
    Combine Δ-colorings of two factors into a Δ-coloring of their Cartesian product.

    Copies of the factor with even Δ are shifted past the other factor's palette. When
    both Δ are odd the 0-colored edges form single edges and balanced 4-cycles, which
    are recolored with one fresh pair.

    Args:
        S1: First factor
        c1: A Δ(S1)-coloring of S1
        S2: Second factor
        c2: A Δ(S2)-coloring of S2

    Returns:
        IncidenceColoring: A Δ(S1)+Δ(S2)-coloring of ``cartesian(S1, S2).graph``

    Raises:
        PreconditionError: If a factor coloring is not a valid Δ-coloring
    """
    d1 = require_delta_coloring(S1, c1, "first factor")
    d2 = require_delta_coloring(S2, c2, "second factor")
    P = cartesian(S1, S2)
    if d2 % 2 == 0:
        first, second = c1, shift_colors(c2, d1 // 2)
    elif d1 % 2 == 0:
        first, second = shift_colors(c1, d2 // 2), c2
    else:
        first, second = c1, shift_colors(c2, d1 // 2, keep_zero=True)
    k = d1 + d2
    c = IncidenceColoring.from_edge_colors(k, _lift(P, first, second))
    if d1 % 2 and d2 % 2:
        c = _repair_zero_graph(P.graph, c, d1 // 2 + d2 // 2 + 1)
    return check_coloring(P.graph, c, k)


def color_cartesian_path_cycle(r: int, sigma1: Sequence[int], s: int, sigma2: Sequence[int]) -> IncidenceColoring:
    """
    Δ-coloring of P_r □ C_s for r >= 2, any signatures.

    Raises:
        PreconditionError: If r < 2
    """
    if r < 2:
        raise PreconditionError(f"The path factor needs at least 2 vertices, got {r}")
    return color_path_cycle_product(cartesian(make_path(r, sigma1), make_cycle(s, sigma2)))


def color_path_cycle_product(P: ProductGraph) -> IncidenceColoring:
    """
    Δ-coloring of a Cartesian product whose factors are a path and a cycle, in that order.

    H1 takes every cycle copy except its closing edge, plus the rungs between rows
    (0, 1), (2, 3), ... at the first and last cycle positions. H2 is the rest. For two
    rows H2 is a matching colored 0; otherwise both parts take one pair each.
    """
    S1, S2 = P.factors
    rows, cols = path_order(S1), cycle_order(S2)
    r, s = len(rows), len(cols)

    def at(i: int, j: int) -> int:
        return P.pair(rows[i], cols[j])

    pairs = [(at(i, j), at(i, j + 1)) for i in range(r) for j in range(s - 1)]
    for i in range(0, r - 1, 2):
        pairs += [(at(i, 0), at(i + 1, 0)), (at(i, s - 1), at(i + 1, s - 1))]
    h1 = edges_between(P.graph, pairs)
    h2 = sorted(set(range(P.graph.m)) - set(h1))
    k = 3 if r == 2 else 4
    H1, H2 = P.graph.restrict(h1), P.graph.restrict(h2)
    logger.debug("path-cycle %dx%d: |H1|=%d |H2|=%d", r, s, H1.m, H2.m)
    c1 = color_layer(H1, 1, k)
    c2 = color_matching(H2) if r == 2 else color_layer(H2, 2, k)
    return merge_colorings(P.graph, Decomposition(parts=[h1, h2]), [c1, c2], k)


def _quad_pairs(at: Callable[[int, int], int], quad: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
    corners = [at(i, j) for i, j in quad]
    return list(zip(corners, corners[1:] + corners[:1]))


def _two_layer_coloring(P: ProductGraph, h1: List[int]) -> Tuple[Decomposition, IncidenceColoring]:
    h2 = sorted(set(range(P.graph.m)) - set(h1))
    H1, H2 = P.graph.restrict(h1), P.graph.restrict(h2)
    for name, H in (("H1", H1), ("H2", H2)):
        if regular_degree(H) != 2:
            raise InvariantViolation(f"{name} is not 2-regular")
    D = Decomposition(parts=[h1, h2])
    c = merge_colorings(P.graph, D, [color_layer(H1, 1, 4), color_layer(H2, 2, 4)], 4)
    return D, c


def decompose_even_even(
    r: int, s: int, sigma1: Sequence[int], sigma2: Sequence[int]
) -> Tuple[Decomposition, IncidenceColoring]:
    """
    Decomposition of C_{2r} □ C_{2s} into two 2-regular balanced layers and the
    resulting 4-coloring.

    Args:
        r: Half the length of the first cycle
        s: Half the length of the second cycle
        sigma1: 2r signs of the first cycle
        sigma2: 2s signs of the second cycle
    """
    if r < 2 or s < 2:
        raise PreconditionError(f"Cycles C_{2 * r} and C_{2 * s} need r, s >= 2")
    return decompose_even_even_product(cartesian(make_cycle(2 * r, sigma1), make_cycle(2 * s, sigma2)))


def decompose_even_even_product(P: ProductGraph) -> Tuple[Decomposition, IncidenceColoring]:
    S1, S2 = P.factors
    rows, cols = cycle_order(S1), cycle_order(S2)
    if len(rows) % 2 or len(cols) % 2:
        raise PreconditionError("Both cycle factors must have even length")
    r, s = len(rows) // 2, len(cols) // 2

    def at(i: int, j: int) -> int:
        return P.pair(rows[i - 1], cols[j - 1])

    quads = [[(1, 1), (1, 2 * s), (2 * r, 2 * s), (2 * r, 1)]]
    quads += [[(2 * i, 1), (2 * i, 2 * s), (2 * i + 1, 2 * s), (2 * i + 1, 1)] for i in range(1, r)]
    quads += [[(1, 2 * j), (1, 2 * j + 1), (2 * r, 2 * j + 1), (2 * r, 2 * j)] for j in range(1, s)]
    quads += [
        [(2 * i, 2 * j), (2 * i, 2 * j + 1), (2 * i + 1, 2 * j + 1), (2 * i + 1, 2 * j)]
        for i in range(1, r)
        for j in range(1, s)
    ]
    h1 = edges_between(P.graph, [pair for quad in quads for pair in _quad_pairs(at, quad)])
    return _two_layer_coloring(P, h1)


def decompose_even_odd_product(P: ProductGraph) -> Tuple[Decomposition, IncidenceColoring]:
    """
    4-coloring of C_{2r} □ C_{2s+1} when the even cycle is balanced.

    H1 is r cycles, each running along two consecutive rows and closing through the
    last two cycle positions. H2 is the rest: full copies of the even cycle at the
    first 2s-1 positions and 4-cycles at the last two.

    Raises:
        PreconditionError: If the first factor is not a balanced even cycle or the
            second is not an odd cycle
    """
    S1, S2 = P.factors
    rows, cols = cycle_order(S1), cycle_order(S2)
    if len(rows) % 2 or not len(cols) % 2:
        raise PreconditionError("Expected an even cycle times an odd cycle")
    if not is_balanced(S1):
        raise PreconditionError("The even cycle factor must be balanced")
    r, s = len(rows) // 2, len(cols) // 2
    last = 2 * s + 1

    def at(i: int, j: int) -> int:
        return P.pair(rows[i - 1], cols[j - 1])

    pairs = []
    for i in range(1, r + 1):
        a, b = 2 * i - 1, 2 * i
        pairs += [
            (at(a, last), at(a, 1)),
            (at(b, last), at(a, last)),
            (at(b, 1), at(b, last)),
            (at(a, 2 * s), at(b, 2 * s)),
        ]
        pairs += [(at(a, j), at(a, j + 1)) for j in range(1, 2 * s)]
        pairs += [(at(b, j), at(b, j + 1)) for j in range(1, 2 * s)]
    return _two_layer_coloring(P, edges_between(P.graph, pairs))


def parity_lower_bound(S: SignedGraph) -> Optional[str]:
    """Certificate that S needs Δ+1: S is 2r-regular with an odd number of negative edges."""
    degree = regular_degree(S)
    if degree is None or degree % 2 or S.negative_count % 2 == 0:
        return None
    return f"{degree}-regular with {S.negative_count} negative edges"


def regular_decomposition_check(S: SignedGraph, c: IncidenceColoring) -> Decomposition:
    """
    Split a Δ-coloring of a 2r-regular graph into its r color-pair layers.

    Every layer must be a spanning 2-regular graph whose cycles are balanced.

    Raises:
        PreconditionError: If S is not 2r-regular or c is not a valid Δ-coloring
        InvariantViolation: If a layer is not spanning, 2-regular and balanced
    """
    degree = regular_degree(S)
    if degree is None or degree % 2:
        raise PreconditionError("Layer split needs a 2r-regular graph")
    require_delta_coloring(S, c, "graph")
    colors = c.edge_colors()
    layers: Dict[int, List[int]] = {m: [] for m in range(1, degree // 2 + 1)}
    for index, (u, v, _) in enumerate(S.edges):
        layers[abs(colors[(u, v)][0])].append(index)
    for magnitude, indices in layers.items():
        layer = S.restrict(indices)
        if regular_degree(layer) != 2 or not is_balanced(layer):
            raise InvariantViolation(f"Layer ±{magnitude} is not a balanced 2-factor")
    return Decomposition(parts=list(layers.values()))


def switch_to_all_negative(r: int, sigma1: Sequence[int], s: int, sigma2: Sequence[int]) -> VertexSet:
    """
    Switching set turning C_r □ C_s all-negative, for unbalanced odd cycles.

    Raises:
        PreconditionError: If a factor is even or balanced
    """
    return switch_to_all_negative_product(cartesian(make_cycle(r, sigma1), make_cycle(s, sigma2)))


def switch_to_all_negative_product(P: ProductGraph) -> VertexSet:
    S1, S2 = P.factors
    n1, n2 = P.dims
    for name, S in (("first", S1), ("second", S2)):
        if len(cycle_order(S)) % 2 == 0 or is_balanced(S):
            raise PreconditionError(f"The {name} factor must be an unbalanced odd cycle")
    X1 = switching_set_to(S1, [-1] * S1.m)
    X2 = switching_set_to(S2, [-1] * S2.m)
    if X1 is None or X2 is None:
        raise InvariantViolation("Unbalanced odd cycle could not be switched to all-negative")
    rows = {P.pair(u, j) for u in X1 for j in range(n2)}
    cols = {P.pair(i, v) for i in range(n1) for v in X2}
    X = frozenset(rows ^ cols)
    if switch(P.graph, X).negative_count != P.graph.m:
        raise InvariantViolation("Switching did not make every product edge negative")
    return X


def classify_cycle_product(r: int, sigma1: Sequence[int], s: int, sigma2: Sequence[int]) -> TheoremOutcome:
    """Classify C_r □ C_s; colorings refer to ``cartesian(C_r, C_s)`` vertex ids."""
    return classify_cycle_product_graph(cartesian(make_cycle(r, sigma1), make_cycle(s, sigma2)))


def _four_colored(c: IncidenceColoring, certificate: Certificate) -> TheoremOutcome:
    return TheoremOutcome(claim="delta", delta=4, coloring=c, certificate=(certificate.value,))


def classify_cycle_product_graph(P: ProductGraph) -> TheoremOutcome:
    """
    Decide whether a Cartesian product of two cycles is Δ-colorable.

    Even times even is always Δ-colorable. Even times odd is Δ-colorable iff the even
    cycle is balanced. Odd times odd is Δ-colorable iff both cycles are balanced.
    """
    S1, S2 = P.factors
    r, s = len(cycle_order(S1)), len(cycle_order(S2))
    if r % 2 == 0 and s % 2 == 0:
        _, c = decompose_even_even_product(P)
        return _four_colored(c, Certificate.EVEN_EVEN_DECOMPOSITION)
    if r % 2 and s % 2 == 0:
        Q, mapping = transpose_product(P)
        outcome = classify_cycle_product_graph(Q)
        if outcome.coloring is None:
            return outcome
        back = transport_coloring(outcome.coloring, inverse_map(mapping))
        return outcome.model_copy(update={"coloring": check_coloring(P.graph, back, 4)})

    b1, b2 = is_balanced(S1), is_balanced(S2)
    logger.debug("cycle product C%d x C%d, balanced=(%s, %s)", r, s, b1, b2)
    if b1 and b2:
        c = color_cartesian_combined(S1, color_balanced_cycle(S1), S2, color_balanced_cycle(S2))
        return _four_colored(c, Certificate.CARTESIAN_COMBINATION)
    if r % 2 == 0 and b1:
        _, c = decompose_even_odd_product(P)
        return _four_colored(c, Certificate.EVEN_ODD_DECOMPOSITION)
    if r % 2 and not b1 and not b2:
        X = switch_to_all_negative_product(P)
        return TheoremOutcome(
            claim="delta-plus-one",
            delta=4,
            certificate=(
                Certificate.ALL_NEGATIVE_SWITCHING.value,
                f"switching {len(X)} vertices makes all {P.graph.m} edges negative",
                Certificate.ODD_ORDER_LAYERS.value,
            ),
        )
    reason = parity_lower_bound(P.graph)
    if reason is None:
        raise InvariantViolation("Expected an odd number of negative edges in a 4-regular product")
    return TheoremOutcome(claim="delta-plus-one", delta=4, certificate=(Certificate.ODD_NEGATIVE_PARITY.value, reason))
