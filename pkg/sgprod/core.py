"""Signed graph construction, switching and balance."""

import logging
import random
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence

import networkx as nx
from pydantic import ValidationError

from .exceptions import GraphError
from .models import Decomposition, SignedGraph, VertexSet

logger = logging.getLogger(__name__)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> SignedGraph:
    """
    Build a canonical signed graph.

    Args:
        n: Number of vertices (0..n-1)
        edges: ``(u, v, sign)`` triples in any order and orientation

    Returns:
        SignedGraph: The canonical graph

    Raises:
        GraphError: If the graph is not simple or a sign is not +1/-1
    """
    try:
        return SignedGraph(n=n, edges=[tuple(e) for e in edges])
    except (ValidationError, TypeError) as e:
        raise GraphError(f"Invalid signed graph: {_first_error(e)}")


def _first_error(error: Exception) -> str:
    if isinstance(error, ValidationError):
        return error.errors()[0]["msg"]
    return str(error)


def _check_signs(signs: Sequence[int], expected: int, what: str) -> List[int]:
    signs = list(signs)
    if len(signs) != expected:
        raise GraphError(f"{what} needs {expected} signs, got {len(signs)}")
    return signs


def make_path(r: int, signs: Sequence[int]) -> SignedGraph:
    """Path 0-1-...-(r-1) with ``signs[i]`` on edge (i, i+1)."""
    if r < 1:
        raise GraphError(f"A path needs at least one vertex, got {r}")
    signs = _check_signs(signs, r - 1, f"P{r}")
    return build_graph(r, [(i, i + 1, s) for i, s in enumerate(signs)])


def make_cycle(r: int, signs: Sequence[int]) -> SignedGraph:
    """Cycle 0-1-...-(r-1)-0; ``signs[r-1]`` is the closing edge (r-1, 0)."""
    if r < 3:
        raise GraphError(f"A cycle needs at least 3 vertices, got {r}")
    signs = _check_signs(signs, r, f"C{r}")
    return build_graph(r, [(i, (i + 1) % r, s) for i, s in enumerate(signs)])


def make_complete(n: int, signs: Sequence[int]) -> SignedGraph:
    """K_n with signs given in canonical (lexicographic) edge order."""
    if n < 1:
        raise GraphError(f"A complete graph needs at least one vertex, got {n}")
    signs = _check_signs(signs, n * (n - 1) // 2, f"K{n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return build_graph(n, [(u, v, s) for (u, v), s in zip(pairs, signs)])


def make_star(leaves: int, signs: Sequence[int]) -> SignedGraph:
    """Star K_{1,leaves} centred at vertex 0."""
    if leaves < 1:
        raise GraphError(f"A star needs at least one leaf, got {leaves}")
    signs = _check_signs(signs, leaves, f"K1,{leaves}")
    return build_graph(leaves + 1, [(0, i + 1, s) for i, s in enumerate(signs)])


def make_tree(n: int, signs: Sequence[int], seed: int = 0) -> SignedGraph:
    """Uniformly random labelled tree on n vertices (Prüfer decoding), seeded."""
    if n < 2:
        raise GraphError(f"A random tree needs at least 2 vertices, got {n}")
    signs = _check_signs(signs, n - 1, f"tree on {n} vertices")
    rng = random.Random(seed)
    if n == 2:
        pairs = [(0, 1)]
    else:
        tree = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
        pairs = sorted((min(u, v), max(u, v)) for u, v in tree.edges())
    return build_graph(n, [(u, v, s) for (u, v), s in zip(pairs, signs)])


def random_signs(m: int, seed: int) -> List[int]:
    rng = random.Random(seed)
    return [rng.choice((1, -1)) for _ in range(m)]


def to_networkx(S: SignedGraph) -> nx.Graph:
    """Underlying networkx graph; edges carry ``sign`` and ``index`` attributes."""
    G = nx.Graph()
    G.add_nodes_from(range(S.n))
    for index, (u, v, s) in enumerate(S.edges):
        G.add_edge(u, v, sign=s, index=index)
    return G


def components(S: SignedGraph) -> List[List[int]]:
    return [sorted(c) for c in nx.connected_components(to_networkx(S))]


def cyclomatic_number(S: SignedGraph) -> int:
    """Dimension m - n + c of the cycle space."""
    return S.m - S.n + len(components(S))


def spanning_forest(S: SignedGraph) -> List[int]:
    """Edge indices of a BFS spanning forest (one tree per component)."""
    G = to_networkx(S)
    chosen = []
    for component in components(S):
        for u, v in nx.bfs_edges(G, component[0]):
            chosen.append(G.edges[u, v]["index"])
    return sorted(chosen)


def is_forest(S: SignedGraph) -> bool:
    return S.n == 0 or nx.is_forest(to_networkx(S))


def max_degree(S: SignedGraph) -> int:
    return max(S.degrees(), default=0)


def regular_degree(S: SignedGraph) -> Optional[int]:
    """Common degree of a regular graph with at least one edge, else None."""
    degrees = set(S.degrees())
    if S.m == 0 or len(degrees) != 1:
        return None
    return degrees.pop()


def path_order(S: SignedGraph) -> List[int]:
    """
    Vertex sequence of a graph whose underlying graph is a path.

    Raises:
        GraphError: If the graph is not a path with at least one edge
    """
    degrees = S.degrees()
    if S.m == 0 or S.m != S.n - 1 or max(degrees) > 2 or len(components(S)) != 1:
        raise GraphError("Graph is not a path")
    start = degrees.index(1)
    return _walk(S, start, S.n)


def cycle_order(S: SignedGraph) -> List[int]:
    """
    Vertex sequence of a graph whose underlying graph is a single cycle.

    Raises:
        GraphError: If the graph is not a cycle
    """
    if S.n < 3 or any(d != 2 for d in S.degrees()) or len(components(S)) != 1:
        raise GraphError("Graph is not a cycle")
    return _walk(S, 0, S.n)


def _walk(S: SignedGraph, start: int, length: int) -> List[int]:
    adj = S.adjacency()
    order = [start]
    seen = {start}
    while len(order) < length:
        nxt = [w for w, _ in adj[order[-1]] if w not in seen]
        order.append(min(nxt))
        seen.add(order[-1])
    return order


def _check_vertex_set(S: SignedGraph, X: Iterable[int]) -> VertexSet:
    X = frozenset(X)
    bad = [x for x in X if not 0 <= x < S.n]
    if bad:
        raise GraphError(f"Switching set contains vertices outside 0..{S.n - 1}: {sorted(bad)}")
    return X


def switch(S: SignedGraph, X: Iterable[int]) -> SignedGraph:
    """Negate every edge with exactly one endpoint in ``X``."""
    X = _check_vertex_set(S, X)
    return S.with_signs(-s if (u in X) != (v in X) else s for u, v, s in S.edges)


def balance_witness(S: SignedGraph) -> Optional[Dict[int, int]]:
    """
    Sign potential ``h`` with ``sigma(uv) = h(u) h(v)`` on every edge.

    Each component is swept breadth first from its smallest vertex, which gets +1.

    Returns:
        The potential for every vertex, or None when some cycle is negative
    """
    adj = S.adjacency()
    h: Dict[int, int] = {}
    for root in range(S.n):
        if root in h:
            continue
        h[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, index in adj[u]:
                expected = S.edges[index][2] * h[u]
                if w not in h:
                    h[w] = expected
                    queue.append(w)
                elif h[w] != expected:
                    return None
    return h


def is_balanced(S: SignedGraph) -> bool:
    return balance_witness(S) is not None


def switching_set_to(S: SignedGraph, target: Sequence[int]) -> Optional[VertexSet]:
    """
    Switching set turning the signature of ``S`` into ``target``.

    Args:
        S: The signed graph
        target: Desired signs in canonical edge order

    Returns:
        X with ``switch(S, X)`` carrying ``target``, or None when the two signatures
        are not switching equivalent
    """
    target = _check_signs(target, S.m, "target signature")
    h = balance_witness(S.with_signs(s * t for s, t in zip(S.signs, target)))
    if h is None:
        return None
    return frozenset(v for v, value in h.items() if value < 0)


def switch_to_positive(S: SignedGraph) -> VertexSet:
    """
    Switching set making every edge positive.

    Raises:
        GraphError: If S is unbalanced
    """
    X = switching_set_to(S, [1] * S.m)
    if X is None:
        raise GraphError("Graph is unbalanced; it cannot be switched to all-positive")
    return X


def cycle_sign(S: SignedGraph, cycle: Sequence[int]) -> int:
    """
    Product of the signs along a cycle given by its vertex sequence.

    The closing vertex may be repeated at the end.

    Raises:
        GraphError: If the sequence is not a cycle of S
    """
    cycle = list(cycle)
    if len(cycle) > 1 and cycle[0] == cycle[-1]:
        cycle = cycle[:-1]
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise GraphError(f"{cycle} is not a cycle: need 3 or more distinct vertices")
    signs = {(u, v): s for u, v, s in S.edges}
    product = 1
    for u, v in zip(cycle, cycle[1:] + cycle[:1]):
        key = (u, v) if u < v else (v, u)
        if key not in signs:
            raise GraphError(f"{cycle} is not a cycle: ({u}, {v}) is not an edge")
        product *= signs[key]
    return product


def validate_decomposition(S: SignedGraph, D: Decomposition) -> bool:
    """True iff the parts of ``D`` partition the edge set of ``S``."""
    seen = set()
    for part in D.parts:
        for index in part:
            if index in seen or not 0 <= index < S.m:
                return False
            seen.add(index)
    return len(seen) == S.m


def edges_between(S: SignedGraph, pairs: Iterable[Sequence[int]]) -> List[int]:
    """
    Edge indices for the given vertex pairs.

    Raises:
        GraphError: If a pair is not an edge
    """
    index = S.edge_index()
    found = []
    for u, v in pairs:
        key = (u, v) if u < v else (v, u)
        if key not in index:
            raise GraphError(f"({u}, {v}) is not an edge")
        found.append(index[key])
    return found
