"""Δ-colorings of tensor products with a single edge and with trees."""

import logging
from collections import deque
from typing import Dict, List, Tuple

from ..coloring import (
    check_coloring,
    color_layer,
    color_matching,
    color_signed_forest,
    merge_colorings,
    require_delta_coloring,
    shift_colors,
    switch_coloring,
    zero_graph,
)
from ..core import balance_witness, components, is_forest, make_path, max_degree, switch
from ..exceptions import GraphError, InvariantViolation, PreconditionError
from ..models import Decomposition, EdgeKey, IncidenceColoring, ProductGraph, SignedGraph
from ..products import tensor

logger = logging.getLogger(__name__)


def _require_tensor(P: ProductGraph) -> None:
    if P.kind != "tensor":
        raise PreconditionError(f"Expected a tensor product, got {P.kind}")


def _require_tree(T: SignedGraph) -> None:
    if T.m == 0 or not is_forest(T) or len(components(T)) != 1:
        raise PreconditionError("The second factor must be a tree with at least one edge")


def color_tensor_p2(S1: SignedGraph, c1: IncidenceColoring, sigma2: int) -> IncidenceColoring:
    """
    Δ(S1)-coloring of ``tensor(S1, P2)`` where the P2 edge has sign ``sigma2``.

    Raises:
        PreconditionError: If c1 is not a valid Δ(S1)-coloring of S1
    """
    return color_tensor_p2_product(tensor(S1, make_path(2, [sigma2])), c1)


def color_tensor_p2_product(P: ProductGraph, c1: IncidenceColoring) -> IncidenceColoring:
    """
    Δ-coloring of a tensor product whose second factor is a single edge.

    The preimage of each color class ±α of c1 has maximum degree 2 and only balanced
    cycles, so it is colored with ±α on its own. The 0 class lifts to a matching.
    """
    _require_tensor(P)
    S1, S2 = P.factors
    if S2.n != 2 or S2.m != 1:
        raise PreconditionError("The second factor must be a single edge")
    d = require_delta_coloring(S1, c1, "first factor")

    magnitudes = {key: abs(fu) for key, (fu, _) in c1.edge_colors().items()}
    classes: Dict[int, List[int]] = {}
    for index, origin in enumerate(P.origins):
        classes.setdefault(magnitudes[S1.edges[origin.first][:2]], []).append(index)

    parts, colorings = [], []
    for magnitude in sorted(classes):
        H = P.graph.restrict(classes[magnitude])
        parts.append(classes[magnitude])
        colorings.append(color_matching(H) if magnitude == 0 else color_layer(H, magnitude, d))
    logger.debug("tensor with P2: %d color classes over %d edges", len(parts), P.graph.m)
    return merge_colorings(P.graph, Decomposition(parts=parts), colorings, d)


def greedy_tree_edge_coloring(T: SignedGraph) -> Dict[int, int]:
    """
    Proper unsigned edge coloring of a forest with colors 1..Δ(T).

    Each tree is swept breadth first from its smallest vertex; child edges take the
    smallest colors other than the color of the edge to the parent. Signs are ignored.

    Returns:
        Color per edge index

    Raises:
        GraphError: If T has a cycle
    """
    if not is_forest(T):
        raise GraphError("Greedy tree edge coloring found a cycle")
    adj = T.adjacency()
    colors: Dict[int, int] = {}
    seen = [False] * T.n
    for root in range(T.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([(root, 0)])
        while queue:
            u, parent_color = queue.popleft()
            color = 0
            for w, index in adj[u]:
                if seen[w]:
                    continue
                seen[w] = True
                color += 1
                if color == parent_color:
                    color += 1
                colors[index] = color
                queue.append((w, color))
    return colors


def tensor_copy_decomposition(G1: SignedGraph, G2: SignedGraph) -> Tuple[Decomposition, Tuple[int, ...]]:
    """
    Split ``tensor(G1, G2)`` into one copy of ``tensor(G1, P2)`` per edge of G2.

    Returns:
        The decomposition of the product edges and, per part, the index of the G2 edge
        it belongs to
    """
    P = tensor(G1, G2)
    by_edge: Dict[int, List[int]] = {}
    for index, origin in enumerate(P.origins):
        by_edge.setdefault(origin.second, []).append(index)
    D = Decomposition(parts=list(by_edge.values()))
    tags = tuple(P.origins[part[0]].second for part in D.parts)
    return D, tags


def color_tensor_tree(S1: SignedGraph, c1: IncidenceColoring, T: SignedGraph) -> IncidenceColoring:
    """
    Δ-coloring of ``tensor(S1, T)`` for a signed tree T.

    Raises:
        PreconditionError: If c1 is not a valid Δ(S1)-coloring or T is not a tree
    """
    return color_tensor_tree_product(tensor(S1, T), c1)


def _oriented(colors: Dict[EdgeKey, Tuple[int, int]], a: int, b: int) -> Tuple[int, int]:
    if a < b:
        return colors[(a, b)]
    fb, fa = colors[(b, a)]
    return fa, fb


def color_tensor_tree_product(P: ProductGraph, c1: IncidenceColoring) -> IncidenceColoring:
    """
    Δ(S1)·Δ(T)-coloring of a tensor product whose second factor is a tree.

    Switching by the tree's sign potential gives every copy of ``S1 x P2`` the same
    signature. One coloring of that copy is placed in color bank ``c''(e)`` for each
    tree edge e, where c'' is a greedy edge coloring of T and bank i holds the
    magnitudes ``(i-1)*l+1 .. i*l`` for ``l = Δ(S1)/2`` rounded down. When Δ(S1) is odd
    the edges left at 0 form a forest of maximum degree Δ(T), which gets a fresh
    block of Δ(T) colors above the banks.
    """
    _require_tensor(P)
    S1, T = P.factors
    d = require_delta_coloring(S1, c1, "first factor")
    _require_tree(T)
    if T.m == 1:
        return color_tensor_p2_product(P, c1)

    h = balance_witness(T)
    if h is None:
        raise InvariantViolation("A tree has no sign potential")
    X = frozenset(P.pair(a, x) for a in range(S1.n) for x in range(T.n) if h[x] < 0)
    aligned = switch(P.graph, X)

    base = tensor(S1, make_path(2, [1]))
    c_base = color_tensor_p2_product(base, c1)
    tree_colors = greedy_tree_edge_coloring(T)
    width = d // 2
    banks = {
        i: shift_colors(c_base, (i - 1) * width, keep_zero=True).edge_colors()
        for i in set(tree_colors.values())
    }

    delta_t = max_degree(T)
    k = d * delta_t
    colors: Dict[EdgeKey, Tuple[int, int]] = {}
    for (u, v, _), origin in zip(aligned.edges, P.origins):
        (a, x), (b, y) = P.unpair(u), P.unpair(v)
        low = min(T.edges[origin.second][:2])
        su = base.pair(a, 0 if x == low else 1)
        sv = base.pair(b, 0 if y == low else 1)
        colors[(u, v)] = _oriented(banks[tree_colors[origin.second]], su, sv)
    c = IncidenceColoring.from_edge_colors(k, colors)
    logger.debug("tensor with tree: Δ1=%d Δ(T)=%d, %d banks", d, delta_t, len(banks))

    if d % 2:
        c = _recolor_zero_forest(aligned, c, width * delta_t, delta_t)
    return check_coloring(P.graph, switch_coloring(c, X), k)


def _recolor_zero_forest(S: SignedGraph, c: IncidenceColoring, offset: int, delta_t: int) -> IncidenceColoring:
    X0 = zero_graph(S, c)
    if X0.m == 0:
        return c
    if not is_forest(X0) or max_degree(X0) > delta_t:
        raise InvariantViolation("Zero edges of the banked coloring are not a forest of degree at most Δ(T)")
    fresh = shift_colors(color_signed_forest(X0, k=delta_t), offset, keep_zero=True)
    colors = c.edge_colors()
    colors.update(fresh.edge_colors())
    return IncidenceColoring.from_edge_colors(c.k, colors)
