"""Cartesian, tensor, strong and corona products of signed graphs."""

import logging
from typing import Dict, List, Literal, Optional, Sequence, Tuple

from .coloring import relabel_coloring
from .core import build_graph
from .exceptions import ProductError
from .models import (
    Decomposition,
    EdgeKey,
    EdgeOrigin,
    Incidence,
    IncidenceColoring,
    ProductGraph,
    ProductKind,
    ProjectedEdge,
    SignedGraph,
)

logger = logging.getLogger(__name__)

ItemKind = Literal["vertex", "edge", "incidence"]


def _assemble(
    kind: ProductKind,
    S1: SignedGraph,
    S2: SignedGraph,
    n: int,
    pieces: Dict[EdgeKey, Tuple[int, EdgeOrigin]],
    attachments: Sequence[int] = (),
) -> ProductGraph:
    graph = build_graph(n, [(u, v, s) for (u, v), (s, _) in pieces.items()])
    origins = [pieces[(u, v)][1] for u, v, _ in graph.edges]
    return ProductGraph(
        kind=kind,
        graph=graph,
        factors=(S1, S2),
        origins=tuple(origins),
        attachments=tuple(attachments),
    )


def _key(a: int, b: int) -> EdgeKey:
    return (a, b) if a < b else (b, a)


def _cartesian_pieces(S1: SignedGraph, S2: SignedGraph) -> Dict[EdgeKey, Tuple[int, EdgeOrigin]]:
    n2 = S2.n
    pieces = {}
    for i in range(S1.n):
        for index, (a, b, s) in enumerate(S2.edges):
            pieces[_key(i * n2 + a, i * n2 + b)] = (s, EdgeOrigin(kind="second", second=index, fixed=i))
    for j in range(n2):
        for index, (a, b, s) in enumerate(S1.edges):
            pieces[_key(a * n2 + j, b * n2 + j)] = (s, EdgeOrigin(kind="first", first=index, fixed=j))
    return pieces


def _tensor_pieces(S1: SignedGraph, S2: SignedGraph) -> Dict[EdgeKey, Tuple[int, EdgeOrigin]]:
    n2 = S2.n
    pieces = {}
    for i1, (a, b, s1) in enumerate(S1.edges):
        for i2, (c, d, s2) in enumerate(S2.edges):
            origin = EdgeOrigin(kind="both", first=i1, second=i2)
            pieces[_key(a * n2 + c, b * n2 + d)] = (s1 * s2, origin)
            pieces[_key(a * n2 + d, b * n2 + c)] = (s1 * s2, origin)
    return pieces


def cartesian(S1: SignedGraph, S2: SignedGraph) -> ProductGraph:
    """
    Cartesian product: (u,u')(v,v') is an edge when u = v and u'v' is an edge of S2
    (sign of S2), or u'= v' and uv is an edge of S1 (sign of S1).
    """
    return _assemble("cartesian", S1, S2, S1.n * S2.n, _cartesian_pieces(S1, S2))


def tensor(S1: SignedGraph, S2: SignedGraph) -> ProductGraph:
    """Tensor product: both coordinates move along an edge; sign is the product."""
    return _assemble("tensor", S1, S2, S1.n * S2.n, _tensor_pieces(S1, S2))


def strong(S1: SignedGraph, S2: SignedGraph) -> Tuple[ProductGraph, Decomposition]:
    """
    Strong product, the edge union of the Cartesian and tensor products.

    Returns:
        The product and its decomposition into the Cartesian part (first) and the
        tensor part (second)
    """
    pieces = _cartesian_pieces(S1, S2)
    pieces.update(_tensor_pieces(S1, S2))
    P = _assemble("strong", S1, S2, S1.n * S2.n, pieces)
    cartesian_part = [i for i, o in enumerate(P.origins) if o.kind != "both"]
    tensor_part = [i for i, o in enumerate(P.origins) if o.kind == "both"]
    return P, Decomposition(parts=[cartesian_part, tensor_part])


def corona(S1: SignedGraph, S2: SignedGraph, link_signs: Optional[Sequence[int]] = None) -> ProductGraph:
    """
    Corona product: S1 plus one copy of S2 per vertex of S1, with vertex i of S1
    joined to every vertex of copy i.

    Args:
        S1: The base graph
        S2: The graph that is copied
        link_signs: Signs of the n1 * n2 attachment edges, copy-major; all positive
            when omitted

    Raises:
        ProductError: If ``link_signs`` has the wrong length or a value other than ±1
    """
    n1, n2 = S1.n, S2.n
    if link_signs is None:
        link_signs = [1] * (n1 * n2)
    link_signs = list(link_signs)
    if len(link_signs) != n1 * n2:
        raise ProductError(f"Corona of {n1}x{n2} needs {n1 * n2} link signs, got {len(link_signs)}")
    if any(s not in (1, -1) for s in link_signs):
        raise ProductError("Link signs must be 1 or -1")

    pieces: Dict[EdgeKey, Tuple[int, EdgeOrigin]] = {}
    for index, (a, b, s) in enumerate(S1.edges):
        pieces[(a, b)] = (s, EdgeOrigin(kind="first", first=index))
    for i in range(n1):
        offset = n1 + i * n2
        for index, (a, b, s) in enumerate(S2.edges):
            pieces[(offset + a, offset + b)] = (s, EdgeOrigin(kind="second", second=index, fixed=i))
        for j in range(n2):
            pieces[(i, offset + j)] = (link_signs[i * n2 + j], EdgeOrigin(kind="link", fixed=i))
    return _assemble("corona", S1, S2, n1 * (1 + n2), pieces, attachments=range(n1))


def build_product(
    kind: ProductKind,
    S1: SignedGraph,
    S2: SignedGraph,
    link_signs: Optional[Sequence[int]] = None,
) -> ProductGraph:
    if kind == "cartesian":
        return cartesian(S1, S2)
    if kind == "tensor":
        return tensor(S1, S2)
    if kind == "strong":
        return strong(S1, S2)[0]
    if kind == "corona":
        return corona(S1, S2, link_signs)
    raise ProductError(f"Unknown product kind: {kind}")


def link_signs_of(P: ProductGraph) -> List[int]:
    """Attachment-edge signs of a corona product, copy-major."""
    if P.kind != "corona":
        raise ProductError("Only corona products have link signs")
    n1, n2 = P.dims
    signs = {(u, v): s for u, v, s in P.graph.edges}
    return [signs[(i, P.pair(i, j))] for i in range(n1) for j in range(n2)]


def project_vertex(P: ProductGraph, which: int, vertex: int) -> int:
    """
    Coordinate of a product vertex in factor 1 or 2.

    Raises:
        ProductError: If the projection is undefined (corona base vertex to factor 2,
            or copy vertex to factor 1)
    """
    _check_which(which)
    try:
        i, j = P.unpair(vertex)
    except IndexError:
        raise ProductError(f"Vertex {vertex} is not in the product")
    if P.kind == "corona":
        if which == 1 and j is None:
            return i
        if which == 2 and j is not None:
            return j
        raise ProductError(f"Corona vertex {vertex} has no projection to factor {which}")
    return i if which == 1 else j


def project_edge(P: ProductGraph, which: int, index: int) -> ProjectedEdge:
    """
    Factor edge a product edge runs along.

    Raises:
        ProductError: If the edge does not move in that factor
    """
    _check_which(which)
    if not 0 <= index < P.graph.m:
        raise ProductError(f"Edge {index} is not in the product")
    origin = P.origins[index]
    if which == 1 and origin.first is not None:
        fixed = origin.fixed if origin.kind == "first" else None
        return ProjectedEdge(edge=origin.first, fixed=fixed)
    if which == 2 and origin.second is not None:
        fixed = origin.fixed if origin.kind == "second" else None
        return ProjectedEdge(edge=origin.second, fixed=fixed)
    raise ProductError(f"Edge {P.graph.edges[index][:2]} ({origin.kind}) has no projection to factor {which}")


def project_incidence(P: ProductGraph, which: int, incidence: Incidence) -> Incidence:
    u, v, _ = P.graph.edges[incidence.edge]
    if incidence.vertex not in (u, v):
        raise ProductError(f"Vertex {incidence.vertex} is not an endpoint of edge {incidence.edge}")
    edge = project_edge(P, which, incidence.edge)
    return Incidence(project_vertex(P, which, incidence.vertex), edge.edge)


def project(P: ProductGraph, which: int, item, kind: ItemKind = "vertex"):
    """Projection of a vertex, edge index or Incidence onto factor ``which``."""
    if kind == "vertex":
        return project_vertex(P, which, item)
    if kind == "edge":
        return project_edge(P, which, item)
    if kind == "incidence":
        return project_incidence(P, which, Incidence(*item))
    raise ProductError(f"Unknown item kind: {kind}")


def _check_which(which: int) -> None:
    if which not in (1, 2):
        raise ProductError(f"Factor must be 1 or 2, got {which}")


def transpose_product(P: ProductGraph) -> Tuple[ProductGraph, List[int]]:
    """
    The same product with the factors swapped.

    Returns:
        The swapped product and the vertex map ``(i, j) -> (j, i)`` as a list

    Raises:
        ProductError: For corona products, which are not symmetric
    """
    if P.kind == "corona":
        raise ProductError("Corona products cannot be transposed")
    S1, S2 = P.factors
    swapped = build_product(P.kind, S2, S1)
    mapping = [0] * P.graph.n
    for v in range(P.graph.n):
        i, j = P.unpair(v)
        mapping[v] = swapped.pair(j, i)
    return swapped, mapping


def transport_coloring(c: IncidenceColoring, mapping: Sequence[int]) -> IncidenceColoring:
    """Carry a coloring along a product vertex map."""
    return relabel_coloring(c, dict(enumerate(mapping)))


def inverse_map(mapping: Sequence[int]) -> List[int]:
    inverse = [0] * len(mapping)
    for v, w in enumerate(mapping):
        inverse[w] = v
    return inverse


def part_graph(P: ProductGraph, predicate) -> SignedGraph:
    """Spanning subgraph of the product edges whose origin satisfies ``predicate``."""
    return P.graph.restrict(i for i, o in enumerate(P.origins) if predicate(o))
