"""Exact k-edge-colorability by backtracking, and the chromatic index built on it."""

import logging
from typing import Dict, Iterable, List, Mapping, Optional, Set, Tuple

from .base import DEFAULT_SETTINGS, check_guard
from .coloring import color_degree_two, color_matching, color_signed_forest, palette
from .core import is_balanced, is_forest, max_degree
from .exceptions import InvariantViolation, PreconditionError
from .models import IncidenceColoring, SignedGraph

logger = logging.getLogger(__name__)


def edge_order(S: SignedGraph) -> List[int]:
    """Search order: highest endpoint degree first, then lexicographic."""
    degrees = S.degrees()
    return sorted(
        range(S.m),
        key=lambda i: (-max(degrees[S.edges[i][0]], degrees[S.edges[i][1]]), S.edges[i][:2]),
    )


def decide_k_colorable(
    S: SignedGraph,
    k: int,
    forbidden: Optional[Mapping[int, Iterable[int]]] = None,
    edge_guard: Optional[int] = DEFAULT_SETTINGS.oracle_edge_guard,
) -> Optional[IncidenceColoring]:
    """
    Decide whether S has a k-edge-coloring and return one if so.

    Each edge gets a value at its smaller endpoint; the other endpoint is forced to
    ``-sigma * value``. Without forbidden colors, a new color pair is only opened with
    its positive member at the next unused magnitude. A vertex whose uncolored edges
    outnumber its free colors cuts the branch.

    Args:
        S: The signed graph
        k: Palette size
        forbidden: Colors a vertex may not use, per vertex
        edge_guard: Largest edge count accepted, None for no limit

    Returns:
        A valid coloring, or None when none exists (the search is exhaustive)

    Raises:
        PreconditionError: If k < 1
        GuardExceededError: If S has more edges than the guard allows
    """
    if k < 1:
        raise PreconditionError(f"Palette size must be at least 1, got {k}")
    if edge_guard is not None:
        check_guard(S.m, edge_guard, "oracle edge count")

    values = palette(k)
    members = set(values)
    blocked: List[Set[int]] = [set() for _ in range(S.n)]
    for vertex, colors in (forbidden or {}).items():
        blocked[vertex] = set(colors) & members
    degrees = S.degrees()
    if any(degrees[v] > k - len(blocked[v]) for v in range(S.n)):
        return None

    order = edge_order(S)
    used: List[Set[int]] = [set() for _ in range(S.n)]
    remaining = list(degrees)
    chosen: Dict[int, Tuple[int, int]] = {}
    break_symmetry = not any(blocked)
    top = k // 2

    def fits(vertex: int) -> bool:
        return remaining[vertex] <= k - len(used[vertex]) - len(blocked[vertex])

    def search(position: int, opened: int) -> bool:
        if position == len(order):
            return True
        index = order[position]
        u, v, s = S.edges[index]
        for a in values:
            if break_symmetry and abs(a) > opened and (a != opened + 1 or a > top):
                continue
            b = -s * a
            if a in used[u] or a in blocked[u] or b in used[v] or b in blocked[v]:
                continue
            used[u].add(a)
            used[v].add(b)
            remaining[u] -= 1
            remaining[v] -= 1
            chosen[index] = (a, b)
            if fits(u) and fits(v) and search(position + 1, max(opened, abs(a))):
                return True
            used[u].discard(a)
            used[v].discard(b)
            remaining[u] += 1
            remaining[v] += 1
            del chosen[index]
        return False

    if not search(0, 0):
        return None
    return IncidenceColoring(
        k=k, values=[(S.edges[i][0], S.edges[i][1], a, b) for i, (a, b) in chosen.items()]
    )


def exact_chromatic_index(
    S: SignedGraph,
    edge_guard: Optional[int] = DEFAULT_SETTINGS.oracle_edge_guard,
) -> Tuple[int, IncidenceColoring]:
    """
    Chromatic index of S with a witness coloring.

    Tries Δ first, then Δ+1, which must succeed.

    Raises:
        PreconditionError: If S has no edges
        InvariantViolation: If S is not (Δ+1)-colorable
        GuardExceededError: If S is above the oracle edge guard
    """
    if S.m == 0:
        raise PreconditionError("The chromatic index of an edgeless graph is not defined here")
    delta = max_degree(S)
    for k in (delta, delta + 1):
        witness = decide_k_colorable(S, k, edge_guard=edge_guard)
        if witness is not None:
            logger.debug("chi'=%d (delta=%d) on n=%d m=%d", k, delta, S.n, S.m)
            return k, witness
    raise InvariantViolation(f"Graph with maximum degree {delta} is not {delta + 1}-colorable")


def is_delta_colorable(S: SignedGraph, edge_guard: Optional[int] = DEFAULT_SETTINGS.oracle_edge_guard) -> bool:
    if S.m == 0:
        return True
    return decide_k_colorable(S, max_degree(S), edge_guard=edge_guard) is not None


def delta_coloring(
    S: SignedGraph,
    edge_guard: Optional[int] = DEFAULT_SETTINGS.oracle_edge_guard,
) -> Optional[IncidenceColoring]:
    """
    A Δ-coloring of S, or None when S needs Δ+1.

    Matchings, forests and graphs of maximum degree 2 are colored directly; anything
    else goes to the search.

    Raises:
        PreconditionError: If S has no edges
    """
    if S.m == 0:
        raise PreconditionError("Nothing to color: the graph has no edges")
    delta = max_degree(S)
    if delta == 1:
        return color_matching(S)
    if is_forest(S):
        return color_signed_forest(S)
    if delta == 2:
        return color_degree_two(S) if is_balanced(S) else None
    logger.debug("no construction for n=%d m=%d; searching at k=%d", S.n, S.m, delta)
    return decide_k_colorable(S, delta, edge_guard=edge_guard)
