from enum import Enum
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Literal, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Edge = Tuple[int, int, int]
EdgeKey = Tuple[int, int]
VertexSet = FrozenSet[int]


class Incidence(NamedTuple):
    """A vertex paired with the index of an incident edge in the host edge list."""

    vertex: int
    edge: int


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _canonical_edges(raw: Any) -> Tuple[Edge, ...]:
    if not isinstance(raw, (list, tuple)):
        raise ValueError("edges must be a list")
    edges = []
    for item in raw:
        if not isinstance(item, (list, tuple)) or len(item) != 3:
            raise ValueError(f"edge {item!r} must be [u, v, sign]")
        if not all(_is_int(x) for x in item):
            raise ValueError(f"edge {item!r} must hold integers")
        u, v, s = item
        if u > v:
            u, v = v, u
        edges.append((u, v, s))
    edges.sort()
    return tuple(edges)


class SignedGraph(BaseModel):
    """Simple undirected graph on vertices 0..n-1 with a sign on every edge."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, strict=True)
    edges: Tuple[Edge, ...] = ()

    @field_validator("edges", mode="before")
    @classmethod
    def _canonicalize(cls, value: Any) -> Tuple[Edge, ...]:
        return _canonical_edges(value)

    @model_validator(mode="after")
    def _check_simple(self) -> "SignedGraph":
        previous = None
        for u, v, s in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u < 0 or v >= self.n:
                raise ValueError(f"edge ({u}, {v}) leaves the vertex range 0..{self.n - 1}")
            if s not in (1, -1):
                raise ValueError(f"sign of edge ({u}, {v}) must be 1 or -1, got {s}")
            if previous == (u, v):
                raise ValueError(f"duplicate edge ({u}, {v})")
            previous = (u, v)
        return self

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(s for _, _, s in self.edges)

    @property
    def negative_count(self) -> int:
        return sum(1 for _, _, s in self.edges if s < 0)

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> List[List[Tuple[int, int]]]:
        """Per vertex, the list of (neighbour, edge index)."""
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(self.n)]
        for index, (u, v, _) in enumerate(self.edges):
            adj[u].append((v, index))
            adj[v].append((u, index))
        return adj

    def edge_index(self) -> Dict[EdgeKey, int]:
        return {(u, v): i for i, (u, v, _) in enumerate(self.edges)}

    def sign(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        for a, b, s in self.edges:
            if (a, b) == key:
                return s
        raise KeyError(key)

    def with_signs(self, signs: Iterable[int]) -> "SignedGraph":
        """Same underlying graph, new signature given in canonical edge order."""
        signs = tuple(signs)
        if len(signs) != self.m:
            raise ValueError(f"expected {self.m} signs, got {len(signs)}")
        return SignedGraph(n=self.n, edges=[(u, v, s) for (u, v, _), s in zip(self.edges, signs)])

    def restrict(self, edge_indices: Iterable[int]) -> "SignedGraph":
        """Spanning subgraph keeping only the given edges (signs inherited)."""
        return SignedGraph(n=self.n, edges=[self.edges[i] for i in sorted(set(edge_indices))])

    def underlying(self) -> "SignedGraph":
        return self.with_signs([1] * self.m)


class Decomposition(BaseModel):
    """Edge partition of a host graph, parts given as edge-index tuples."""

    model_config = ConfigDict(frozen=True)

    parts: Tuple[Tuple[int, ...], ...]

    @field_validator("parts", mode="before")
    @classmethod
    def _sort_parts(cls, value: Any) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(part)) for part in value)


class ColorSet(BaseModel):
    """The symmetric palette M_k."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1, strict=True)
    members: Tuple[int, ...]

    def __contains__(self, color: int) -> bool:
        return color in self.members


class IncidenceColoring(BaseModel):
    """Colors of both incidences of every edge, keyed by canonical (u, v)."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1, strict=True)
    values: Tuple[Tuple[int, int, int, int], ...] = ()

    @field_validator("values", mode="before")
    @classmethod
    def _canonicalize(cls, value: Any) -> Tuple[Tuple[int, int, int, int], ...]:
        if not isinstance(value, (list, tuple)):
            raise ValueError("values must be a list")
        rows = []
        for item in value:
            if not isinstance(item, (list, tuple)) or len(item) != 4:
                raise ValueError(f"coloring row {item!r} must be [u, v, f_at_u, f_at_v]")
            if not all(_is_int(x) for x in item):
                raise ValueError(f"coloring row {item!r} must hold integers")
            u, v, fu, fv = item
            if u > v:
                u, v, fu, fv = v, u, fv, fu
            rows.append((u, v, fu, fv))
        rows.sort()
        return tuple(rows)

    @model_validator(mode="after")
    def _check_unique(self) -> "IncidenceColoring":
        keys = [(u, v) for u, v, _, _ in self.values]
        if len(set(keys)) != len(keys):
            raise ValueError("coloring lists an edge twice")
        return self

    @classmethod
    def from_edge_colors(cls, k: int, colors: Dict[EdgeKey, Tuple[int, int]]) -> "IncidenceColoring":
        return cls(k=k, values=[(u, v, fu, fv) for (u, v), (fu, fv) in colors.items()])

    def edge_colors(self) -> Dict[EdgeKey, Tuple[int, int]]:
        return {(u, v): (fu, fv) for u, v, fu, fv in self.values}

    def at(self, vertex: int, u: int, v: int) -> int:
        """Color of the incidence ``vertex:uv``."""
        a, b = (u, v) if u < v else (v, u)
        fu, fv = self.edge_colors()[(a, b)]
        if vertex == a:
            return fu
        if vertex == b:
            return fv
        raise KeyError((vertex, u, v))

    def used_colors(self) -> FrozenSet[int]:
        return frozenset(c for _, _, fu, fv in self.values for c in (fu, fv))


class Violation(BaseModel):
    """One failed condition of the coloring definition."""

    kind: Literal["palette", "edge-relation", "vertex-distinctness"]
    vertex: int
    edge: EdgeKey
    detail: str


class VerificationReport(BaseModel):
    valid: bool
    violations: List[Violation] = []


class EdgeOrigin(BaseModel):
    """Where a product edge comes from.

    ``first``/``second`` are factor edge indices; ``fixed`` is the coordinate of the
    factor that stays constant (Cartesian edges) or the copy index (corona).
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["first", "second", "both", "link"]
    first: Optional[int] = None
    second: Optional[int] = None
    fixed: Optional[int] = None


class ProjectedEdge(BaseModel):
    """A product edge seen from one factor: the factor edge and, for Cartesian and
    corona-copy edges, the fixed coordinate on the other side."""

    edge: int
    fixed: Optional[int] = None


ProductKind = Literal["cartesian", "tensor", "strong", "corona"]


class ProductGraph(BaseModel):
    """A product graph with its factors, pair index and per-edge origins.

    Cartesian, tensor and strong products put the pair (i, j) at ``i * n2 + j``.
    Corona products keep the base vertices at 0..n1-1 and put vertex j of copy i at
    ``n1 + i * n2 + j``; the attachment vertices are the base vertices in order.
    """

    model_config = ConfigDict(frozen=True)

    kind: ProductKind
    graph: SignedGraph
    factors: Tuple[SignedGraph, SignedGraph]
    origins: Tuple[EdgeOrigin, ...]
    attachments: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_shape(self) -> "ProductGraph":
        n1, n2 = self.dims
        expected = n1 * (1 + n2) if self.kind == "corona" else n1 * n2
        if self.graph.n != expected:
            raise ValueError(f"{self.kind} product of {n1}x{n2} must have {expected} vertices")
        if len(self.origins) != self.graph.m:
            raise ValueError("one origin per product edge is required")
        return self

    @property
    def dims(self) -> Tuple[int, int]:
        return (self.factors[0].n, self.factors[1].n)

    def pair(self, i: int, j: int) -> int:
        n1, n2 = self.dims
        if not (0 <= i < n1 and 0 <= j < n2):
            raise IndexError((i, j))
        if self.kind == "corona":
            return n1 + i * n2 + j
        return i * n2 + j

    def unpair(self, vertex: int) -> Tuple[int, Optional[int]]:
        """Inverse of ``pair``; corona base vertices map to ``(i, None)``."""
        n1, n2 = self.dims
        if not 0 <= vertex < self.graph.n:
            raise IndexError(vertex)
        if self.kind == "corona":
            if vertex < n1:
                return (vertex, None)
            return divmod(vertex - n1, n2)
        return divmod(vertex, n2)


class Certificate(str, Enum):
    """Reason strings attached to a TheoremOutcome."""

    CARTESIAN_COMBINATION = "cartesian-combination"
    ZERO_GRAPH_REPAIR = "zero-graph-repair"
    PATH_CYCLE_DECOMPOSITION = "path-cycle-decomposition"
    EVEN_EVEN_DECOMPOSITION = "even-even-decomposition"
    EVEN_ODD_DECOMPOSITION = "even-odd-decomposition"
    ODD_NEGATIVE_PARITY = "odd-negative-parity"
    ALL_NEGATIVE_SWITCHING = "all-negative-switching"
    ODD_ORDER_LAYERS = "odd-order-layers"
    TENSOR_PATH = "tensor-path"
    TENSOR_TREE = "tensor-tree"
    STRONG_COMBINATION = "strong-combination"
    CORONA_INDUCTION = "corona-induction"
    ORACLE = "oracle"


Claim = Literal["delta", "delta-plus-one"]


class TheoremOutcome(BaseModel):
    """Classification of a product: a Δ-coloring, or a certified need for Δ+1."""

    claim: Claim
    delta: int
    coloring: Optional[IncidenceColoring] = None
    certificate: Tuple[str, ...] = ()

    @model_validator(mode="after")
    def _coloring_iff_delta(self) -> "TheoremOutcome":
        if (self.coloring is not None) != (self.claim == "delta"):
            raise ValueError("a coloring is present exactly when the claim is 'delta'")
        return self


Strategy = Literal["full", "cosets", "product-induced"]


class ClassRatioReport(BaseModel):
    """Counts of Δ-colorable signatures against all enumerated signatures."""

    total: int = Field(ge=0)
    delta: int = Field(ge=0)
    ratio: str
    strategy: Strategy
    breakdown: Dict[str, int] = {}
    pruned: int = 0
    complete: bool = True

    @classmethod
    def build(cls, total: int, delta: int, strategy: Strategy, **extra) -> "ClassRatioReport":
        fraction = Fraction(delta, total) if total else Fraction(0)
        return cls(
            total=total,
            delta=delta,
            ratio=str(fraction),
            strategy=strategy,
            **extra,
        )

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.ratio)


class ProbeReport(BaseModel):
    """Outcome of an empirical conjecture probe."""

    conjecture: Literal["complete", "joined-cliques"]
    n: int
    expected: int
    representatives: int
    counterexamples: List[SignedGraph] = []
    construction_checked: int = 0
    construction_failures: int = 0
    parity_forced: int = 0

    @property
    def holds(self) -> bool:
        return not self.counterexamples and not self.construction_failures


class ReproductionRow(BaseModel):
    name: str
    expected: str
    observed: Optional[str] = None
    status: Literal["passed", "failed", "skipped"]
    detail: str = ""


class ReproductionReport(BaseModel):
    table: Literal["cycle-ratios", "conjectures"]
    rows: List[ReproductionRow]

    @property
    def ok(self) -> bool:
        return all(row.status == "passed" for row in self.rows)


class EnumerationState(BaseModel):
    """Resumable progress of a chunked signature enumeration."""

    graph: SignedGraph
    strategy: Strategy
    chunk_size: int
    free_edges: Tuple[int, ...]
    done: Dict[int, Tuple[int, int, int]] = {}


class CoronaStep(BaseModel):
    """How one copy of the corona was attached to its base vertex."""

    vertex: int
    case: Literal["1a'", "1a''", "1b'", "1b''", "2"]
    method: Literal["cases", "oracle"]
    blocked: Tuple[int, ...]
    hub_colors: Tuple[int, ...]
