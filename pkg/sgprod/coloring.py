"""Color sets, the coloring verifier and the base constructive colorings."""

import logging
from collections import deque
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .core import (
    balance_witness,
    components,
    cycle_order,
    is_forest,
    max_degree,
    path_order,
    switch,
    switch_to_positive,
    validate_decomposition,
)
from .exceptions import ColoringError, GraphError, InvariantViolation, PreconditionError
from .models import (
    ColorSet,
    Decomposition,
    EdgeKey,
    IncidenceColoring,
    SignedGraph,
    VerificationReport,
    Violation,
)

logger = logging.getLogger(__name__)


def color_set(k: int) -> ColorSet:
    """
    The palette M_k.

    Args:
        k: Palette size, at least 1

    Returns:
        ColorSet: ``{0, ±1..±l}`` for k = 2l+1, ``{±1..±l}`` for k = 2l

    Raises:
        ColoringError: If k < 1
    """
    if k < 1:
        raise ColoringError(f"Palette size must be at least 1, got {k}")
    return ColorSet(k=k, members=tuple(sorted(palette(k))))


def palette(k: int) -> Tuple[int, ...]:
    """Members of M_k in search order: 0 (odd k), then +1, -1, +2, -2, ..."""
    order = [0] if k % 2 else []
    for magnitude in range(1, k // 2 + 1):
        order += [magnitude, -magnitude]
    return tuple(order)


def palette_size_for(magnitude: int, with_zero: bool = False) -> int:
    """Smallest k whose palette holds ±1..±magnitude (and 0 if asked)."""
    return 2 * magnitude + (1 if with_zero else 0)


def verify_coloring(S: SignedGraph, c: IncidenceColoring) -> VerificationReport:
    """
    Check a coloring against the three defining conditions.

    Raises:
        ColoringError: If the coloring is not total over S or colors other edges
    """
    colors = c.edge_colors()
    keys = {(u, v) for u, v, _ in S.edges}
    missing = sorted(keys - colors.keys())
    extra = sorted(colors.keys() - keys)
    if missing or extra:
        raise ColoringError(
            f"Coloring does not match the graph: missing edges {missing[:5]}, "
            f"unknown edges {extra[:5]}"
        )

    members = set(palette(c.k))
    violations: List[Violation] = []
    seen: Dict[Tuple[int, int], EdgeKey] = {}
    for u, v, s in S.edges:
        fu, fv = colors[(u, v)]
        for vertex, value in ((u, fu), (v, fv)):
            if value not in members:
                violations.append(
                    Violation(
                        kind="palette",
                        vertex=vertex,
                        edge=(u, v),
                        detail=f"{value} is not in M_{c.k}",
                    )
                )
            clash = seen.get((vertex, value))
            if clash is not None:
                violations.append(
                    Violation(
                        kind="vertex-distinctness",
                        vertex=vertex,
                        edge=(u, v),
                        detail=f"{vertex}:{u}{v} and {vertex}:{clash[0]}{clash[1]} both get {value}",
                    )
                )
            else:
                seen[(vertex, value)] = (u, v)
        if fu != -s * fv:
            violations.append(
                Violation(
                    kind="edge-relation",
                    vertex=u,
                    edge=(u, v),
                    detail=f"f({u}:{u}{v})={fu} but -sigma*f({v}:{u}{v})={-s * fv}",
                )
            )
    return VerificationReport(valid=not violations, violations=violations)


def check_coloring(S: SignedGraph, c: IncidenceColoring, k: Optional[int] = None) -> IncidenceColoring:
    """Verify a constructed coloring, raising InvariantViolation when it fails."""
    report = verify_coloring(S, c)
    if not report.valid:
        details = "; ".join(v.detail for v in report.violations[:3])
        raise InvariantViolation(f"Constructed coloring is invalid: {details}")
    if k is not None and c.k != k:
        raise InvariantViolation(f"Constructed coloring uses M_{c.k}, expected M_{k}")
    return c


def switch_coloring(c: IncidenceColoring, X: Iterable[int]) -> IncidenceColoring:
    """Coloring of ``switch(S, X)`` obtained by negating every incidence at X."""
    X = frozenset(X)
    return IncidenceColoring(
        k=c.k,
        values=[
            (u, v, -fu if u in X else fu, -fv if v in X else fv) for u, v, fu, fv in c.values
        ],
    )


def restrict_coloring(c: IncidenceColoring, part: SignedGraph, k: Optional[int] = None) -> IncidenceColoring:
    colors = c.edge_colors()
    return IncidenceColoring.from_edge_colors(
        c.k if k is None else k, {(u, v): colors[(u, v)] for u, v, _ in part.edges}
    )


def relabel_coloring(c: IncidenceColoring, mapping: Mapping[int, int], k: Optional[int] = None) -> IncidenceColoring:
    """Carry a coloring along a vertex relabelling."""
    return IncidenceColoring(
        k=c.k if k is None else k,
        values=[(mapping[u], mapping[v], fu, fv) for u, v, fu, fv in c.values],
    )


def _walk_colors(S: SignedGraph, order: Sequence[int], closed: bool, magnitude: int) -> Dict[EdgeKey, Tuple[int, int]]:
    # f(v_j : v_j v_{j+1}) = magnitude * product of the signs before edge j
    steps = list(zip(order, order[1:]))
    if closed:
        steps.append((order[-1], order[0]))
    signs = {(u, v): s for u, v, s in S.edges}
    colors = {}
    value = magnitude
    for a, b in steps:
        key = (a, b) if a < b else (b, a)
        s = signs[key]
        far = -s * value
        colors[key] = (value, far) if a < b else (far, value)
        value = s * value
    return colors


def color_degree_two(S: SignedGraph, magnitude: int = 1, k: Optional[int] = None) -> IncidenceColoring:
    """
    Color a graph of maximum degree 2 with the two colors ±magnitude.

    Every component must be a path or a balanced cycle.

    Args:
        S: Graph with maximum degree at most 2
        magnitude: The color pair to use
        k: Palette size of the result (defaults to ``2 * magnitude``)

    Raises:
        PreconditionError: If a vertex has degree 3 or more or a cycle is unbalanced
    """
    if max_degree(S) > 2:
        raise PreconditionError("Two colors only suffice for maximum degree 2")
    colors: Dict[EdgeKey, Tuple[int, int]] = {}
    adj = S.adjacency()
    for component in components(S):
        if len(component) == 1:
            continue
        part = S.restrict(i for v in component for _, i in adj[v])
        is_cycle = part.m == len(component)
        if is_cycle:
            if balance_witness(part) is None:
                raise PreconditionError(f"Cycle through vertices {component} is unbalanced")
            order = _component_walk(adj, component[0])
        else:
            order = _component_walk(adj, min(v for v in component if len(adj[v]) == 1))
        colors.update(_walk_colors(S, order, is_cycle, magnitude))
    return IncidenceColoring.from_edge_colors(palette_size_for(magnitude) if k is None else k, colors)


def _component_walk(adj: List[List[Tuple[int, int]]], start: int) -> List[int]:
    order = [start]
    seen = {order[0]}
    while True:
        nxt = sorted(w for w, _ in adj[order[-1]] if w not in seen)
        if not nxt:
            return order
        order.append(nxt[0])
        seen.add(nxt[0])


def color_path(S: SignedGraph) -> IncidenceColoring:
    """
    Δ-coloring of a signed path: 0 on a single edge, alternating ±1 otherwise.

    Raises:
        GraphError: If the underlying graph is not a path
    """
    order = path_order(S)
    if S.m == 1:
        return color_matching(S)
    return IncidenceColoring.from_edge_colors(2, _walk_colors(S, order, False, 1))


def color_balanced_cycle(S: SignedGraph) -> IncidenceColoring:
    """
    2-coloring of a balanced signed cycle.

    The cycle is switched to all-positive, colored along a walk and switched back.

    Raises:
        GraphError: If the graph is not a cycle or is unbalanced
    """
    order = cycle_order(S)
    X = switch_to_positive(S)
    positive = switch(S, X)
    c = switch_coloring(
        IncidenceColoring.from_edge_colors(2, _walk_colors(positive, order, True, 1)), X
    )
    if verify_coloring(S, c).valid:
        return c
    logger.warning("Walk coloring of a balanced cycle failed at the seam; using the oracle")
    from .oracle import decide_k_colorable

    fallback = decide_k_colorable(S, 2)
    if fallback is None:
        raise InvariantViolation("Balanced cycle is not 2-colorable")
    return fallback


def color_matching(S: SignedGraph) -> IncidenceColoring:
    """
    Color every incidence of a matching with 0.

    Raises:
        PreconditionError: If a vertex has degree 2 or more, or there are no edges
    """
    if S.m == 0:
        raise PreconditionError("Nothing to color: the graph has no edges")
    if max_degree(S) > 1:
        raise PreconditionError("The zero color only colors a matching")
    return IncidenceColoring(k=1, values=[(u, v, 0, 0) for u, v, _ in S.edges])


def color_signed_forest(S: SignedGraph, k: Optional[int] = None) -> IncidenceColoring:
    """
    Color a signed forest with M_k, where k defaults to Δ.

    Each tree is processed top-down from its smallest vertex; a child edge takes the
    first value of the palette not yet used at the parent.

    Args:
        S: An acyclic signed graph
        k: Palette size, at least Δ(S)

    Raises:
        GraphError: If S has a cycle
        PreconditionError: If k is below Δ(S) or S has no edges and k is not given
    """
    if not is_forest(S):
        raise GraphError("Graph is not a forest")
    delta = max_degree(S)
    if k is None:
        if delta == 0:
            raise PreconditionError("Nothing to color: the graph has no edges")
        k = delta
    if k < delta:
        raise PreconditionError(f"M_{k} is too small for maximum degree {delta}")

    values = palette(k)
    adj = S.adjacency()
    used: List[set] = [set() for _ in range(S.n)]
    colors: Dict[EdgeKey, Tuple[int, int]] = {}
    visited = [False] * S.n
    for root in range(S.n):
        if visited[root]:
            continue
        visited[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, index in adj[u]:
                if visited[w]:
                    continue
                visited[w] = True
                a = next(x for x in values if x not in used[u])
                b = -S.edges[index][2] * a
                used[u].add(a)
                used[w].add(b)
                colors[(u, w) if u < w else (w, u)] = (a, b) if u < w else (b, a)
                queue.append(w)
    return IncidenceColoring.from_edge_colors(k, colors)


def shift_colors(c: IncidenceColoring, offset: int, keep_zero: bool = False) -> IncidenceColoring:
    """
    Move every nonzero color ``offset`` magnitudes outward.

    Args:
        c: The coloring to shift
        offset: Nonnegative magnitude shift
        keep_zero: Leave 0 in place instead of rejecting it

    Returns:
        IncidenceColoring: Coloring on M_{k'} with ``k' = 2 * (offset + k // 2)``,
        plus one when 0 is kept from an odd palette

    Raises:
        ColoringError: If the offset is negative, or c uses 0 and ``keep_zero`` is off
    """
    if offset < 0:
        raise ColoringError(f"Shift offset must be nonnegative, got {offset}")
    if not keep_zero and 0 in c.used_colors():
        raise ColoringError("Cannot shift a coloring that uses 0")

    def move(value: int) -> int:
        if value > 0:
            return value + offset
        if value < 0:
            return value - offset
        return 0

    k = 2 * (offset + c.k // 2) + (c.k % 2 if keep_zero else 0)
    return IncidenceColoring(k=k, values=[(u, v, move(fu), move(fv)) for u, v, fu, fv in c.values])


def remap_zero(S: SignedGraph, c: IncidenceColoring, magnitude: int, k: Optional[int] = None) -> IncidenceColoring:
    """
    Recolor the 0-matching of ``c`` with ±magnitude.

    The canonically smaller endpoint gets ``+magnitude``, the other ``-sigma * magnitude``.

    Raises:
        InvariantViolation: If the result is not a valid coloring
    """
    signs = {(u, v): s for u, v, s in S.edges}
    values = []
    for u, v, fu, fv in c.values:
        if fu == 0:
            fu, fv = magnitude, -signs[(u, v)] * magnitude
        values.append((u, v, fu, fv))
    result = IncidenceColoring(k=c.k if k is None else k, values=values)
    return check_coloring(S, result)


def merge_colorings(
    S: SignedGraph,
    D: Decomposition,
    parts: Sequence[IncidenceColoring],
    k: Optional[int] = None,
) -> IncidenceColoring:
    """
    Union of part colorings over an edge decomposition.

    Args:
        S: Host graph
        D: Decomposition of S
        parts: One coloring per part of D, in the same order
        k: Palette size of the result (defaults to the largest part palette)

    Raises:
        ColoringError: If D is not a decomposition, a part coloring does not cover its
            part, or two parts put the same color at a shared vertex
    """
    if not validate_decomposition(S, D):
        raise ColoringError("Parts do not partition the edge set")
    if len(parts) != len(D.parts):
        raise ColoringError(f"Expected {len(D.parts)} part colorings, got {len(parts)}")

    merged: Dict[EdgeKey, Tuple[int, int]] = {}
    owner: Dict[Tuple[int, int], int] = {}
    for number, (indices, part) in enumerate(zip(D.parts, parts)):
        colors = part.edge_colors()
        keys = {S.edges[i][:2] for i in indices}
        if set(colors) != keys:
            raise ColoringError(f"Coloring of part {number} does not cover exactly that part")
        for (u, v), (fu, fv) in colors.items():
            for vertex, value in ((u, fu), (v, fv)):
                other = owner.setdefault((vertex, value), number)
                if other != number:
                    raise ColoringError(
                        f"Parts {other} and {number} both use color {value} at vertex {vertex}"
                    )
            merged[(u, v)] = (fu, fv)
    size = max(p.k for p in parts) if k is None else k
    return check_coloring(S, IncidenceColoring.from_edge_colors(size, merged))


def zero_graph(S: SignedGraph, c: IncidenceColoring) -> SignedGraph:
    """Spanning subgraph of the edges whose incidences are both colored 0."""
    colors = c.edge_colors()
    return S.restrict(i for i, (u, v, _) in enumerate(S.edges) if colors[(u, v)] == (0, 0))


def require_delta_coloring(S: SignedGraph, c: IncidenceColoring, name: str = "graph") -> int:
    """
    Check that ``c`` is a valid Δ(S)-coloring and return Δ(S).

    Raises:
        PreconditionError: If S has no edges, or c uses another palette or is invalid
    """
    delta = max_degree(S)
    if delta < 1:
        raise PreconditionError(f"{name} has no edges")
    if c.k != delta:
        raise PreconditionError(f"{name} coloring uses M_{c.k}, not M_{delta}")
    if not verify_coloring(S, c).valid:
        raise PreconditionError(f"{name} coloring is not valid")
    return delta


def color_layer(H: SignedGraph, magnitude: int, k: int) -> IncidenceColoring:
    """``color_degree_two`` for a layer that must be paths and balanced cycles by construction."""
    try:
        return color_degree_two(H, magnitude, k)
    except PreconditionError as e:
        raise InvariantViolation(f"Layer is not paths and balanced cycles: {e.message}")
