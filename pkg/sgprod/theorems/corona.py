"""Δ-coloring of corona products, one attached copy at a time."""

import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from ..base import DEFAULT_SETTINGS
from ..coloring import check_coloring, color_layer, palette, remap_zero
from ..core import build_graph, max_degree
from ..exceptions import InvariantViolation, PreconditionError
from ..models import CoronaStep, EdgeKey, IncidenceColoring, ProductGraph, SignedGraph
from ..oracle import decide_k_colorable
from ..products import corona

logger = logging.getLogger(__name__)

HUB = 0


def color_corona(
    S1: SignedGraph,
    S2: SignedGraph,
    link_signs: Optional[Sequence[int]] = None,
    edge_guard: Optional[int] = DEFAULT_SETTINGS.oracle_edge_guard,
) -> IncidenceColoring:
    """
    Δ-coloring of ``corona(S1, S2, link_signs)``.

    Raises:
        PreconditionError: If Δ(S1) < 2 or S2 has no vertices
    """
    return color_corona_product(corona(S1, S2, link_signs), edge_guard)


def color_corona_product(
    P: ProductGraph, edge_guard: Optional[int] = DEFAULT_SETTINGS.oracle_edge_guard
) -> IncidenceColoring:
    return color_corona_traced(P, edge_guard)[0]


def color_corona_traced(
    P: ProductGraph, edge_guard: Optional[int] = DEFAULT_SETTINGS.oracle_edge_guard
) -> Tuple[IncidenceColoring, List[CoronaStep]]:
    """
    Δ-coloring of a corona product with the record of every attachment step.

    The base graph is colored first with Δ(S1)+1 colors. Each copy together with its
    base vertex is then colored with n(S2)+1 colors, and its color pairs are relabeled
    by the case that the parities of Δ and Δ(S1) and the unpaired colors at the base
    vertex select, so that the base vertex takes exactly the colors of M_Δ it lacks.
    A copy whose structure fits no case falls back to the oracle with a warning. The
    partial coloring is verified after every step.

    Args:
        P: A corona product
        edge_guard: Edge guard for the oracle calls on the base graph and on each copy

    Returns:
        The coloring and one CoronaStep per base vertex

    Raises:
        PreconditionError: If P is not a corona, Δ(S1) < 2 or S2 has no vertices
        InvariantViolation: If a step cannot be completed or fails verification
        GuardExceededError: If an oracle call is above the edge guard
    """
    if P.kind != "corona":
        raise PreconditionError(f"Expected a corona product, got {P.kind}")
    S1, _ = P.factors
    n1, n2 = P.dims
    delta1 = max_degree(S1)
    if delta1 < 2:
        raise PreconditionError(f"The base graph needs maximum degree at least 2, got {delta1}")
    if n2 == 0:
        raise PreconditionError("The attached graph has no vertices")
    delta = delta1 + n2
    if max_degree(P.graph) != delta:
        raise InvariantViolation(f"Corona maximum degree is {max_degree(P.graph)}, expected {delta}")

    base = decide_k_colorable(S1, delta1 + 1, edge_guard=edge_guard)
    if base is None:
        raise InvariantViolation(f"Base graph is not {delta1 + 1}-colorable")
    c0 = _into_palette(S1, base, delta)
    colors = c0.edge_colors()
    index = P.graph.edge_index()
    before = _colors_at(base, n1)
    after = _colors_at(c0, n1)

    steps = []
    for i in range(n1):
        K, to_global = _attachment_graph(P, i)
        blocked = _full_degree_colors(before[i], after[i], delta1, delta)
        local, step = _attach(K, blocked, delta, delta1, i, edge_guard)
        for (u, v), values in local.edge_colors().items():
            colors[(to_global[u], to_global[v])] = values
        partial = IncidenceColoring.from_edge_colors(delta, colors)
        check_coloring(P.graph.restrict(index[key] for key in colors), partial, delta)
        logger.debug("corona step %d: case %s by %s", i, step.case, step.method)
        steps.append(step)
    return check_coloring(P.graph, IncidenceColoring.from_edge_colors(delta, colors), delta), steps


def _into_palette(S: SignedGraph, c: IncidenceColoring, delta: int) -> IncidenceColoring:
    # M_k fits in M_delta except for 0 when delta is even
    if c.k % 2 and delta % 2 == 0:
        return remap_zero(S, c, delta // 2, delta)
    return check_coloring(S, IncidenceColoring(k=delta, values=c.values), delta)


def _colors_at(c: IncidenceColoring, n: int) -> List[Set[int]]:
    seen: List[Set[int]] = [set() for _ in range(n)]
    for u, v, fu, fv in c.values:
        seen[u].add(fu)
        seen[v].add(fv)
    return seen


def _full_degree_colors(before: Set[int], after: Set[int], delta1: int, delta: int) -> FrozenSet[int]:
    """
    Colors a base vertex would carry at degree Δ(S1).

    ``before`` are its colors in the (Δ(S1)+1)-coloring and ``after`` the same colors once
    moved into M_Δ. The result is M_{Δ(S1)+1} less one absent color (0 when possible), with
    0 moved the way the base coloring moved it. It always contains ``after``.
    """
    absent = [x for x in palette(delta1 + 1) if x not in before]
    full = set(palette(delta1 + 1)) - {0 if 0 in absent else absent[0]}
    if 0 in full and delta % 2 == 0:
        half = delta // 2
        full.discard(0)
        full.add(-half if -half in after else half)
    if not after <= full:
        raise InvariantViolation(f"Padded base colors {sorted(full)} miss {sorted(after - full)}")
    return frozenset(full)


def _attachment_graph(P: ProductGraph, i: int) -> Tuple[SignedGraph, List[int]]:
    """Copy i plus its base vertex, with the base vertex as local vertex 0."""
    n1, n2 = P.dims
    offset = n1 + i * n2

    def local(x: int) -> int:
        return HUB if x == i else x - offset + 1

    edges = [
        (local(u), local(v), s)
        for (u, v, s), origin in zip(P.graph.edges, P.origins)
        if origin.fixed == i and origin.kind in ("second", "link")
    ]
    return build_graph(n2 + 1, edges), [i] + [offset + j for j in range(n2)]


def _hub_colors(c: IncidenceColoring) -> Tuple[int, ...]:
    return tuple(sorted(fu for u, _, fu, _ in c.values if u == HUB))


def _unpaired(colors: FrozenSet[int]) -> List[int]:
    return sorted((x for x in colors if x and -x not in colors), key=abs)


def _full_pairs(colors: FrozenSet[int]) -> List[int]:
    return sorted(a for a in colors if a > 0 and -a in colors)


def _check_unpaired(colors: FrozenSet[int], delta: int, where: str) -> None:
    """At most one unpaired color, or two for even Δ with one of them ±Δ/2."""
    unpaired = _unpaired(colors)
    if len(unpaired) > (1 if delta % 2 else 2):
        raise InvariantViolation(f"{where} has unpaired colors {unpaired}")
    if len(unpaired) == 2 and delta // 2 not in map(abs, unpaired):
        raise InvariantViolation(f"{where} has unpaired colors {unpaired} without ±{delta // 2}")


def _case(delta: int, delta1: int, blocked: FrozenSet[int], hub: FrozenSet[int]) -> str:
    if delta % 2 == 0:
        return "2"
    if delta1 % 2 == 0:
        return "1a'" if _unpaired(blocked) else "1a''"
    return "1b'" if 0 in hub else "1b''"


def _attach(
    K: SignedGraph,
    blocked: FrozenSet[int],
    delta: int,
    delta1: int,
    vertex: int,
    edge_guard: Optional[int],
) -> Tuple[IncidenceColoring, CoronaStep]:
    n2 = K.n - 1
    start = decide_k_colorable(K, n2 + 1, edge_guard=edge_guard)
    if start is None:
        raise InvariantViolation(f"Copy at vertex {vertex} is not {n2 + 1}-colorable")
    c_prime = _into_palette(K, start, delta)
    case = _case(delta, delta1, blocked, frozenset(_hub_colors(c_prime)))

    method = "cases"
    try:
        result: Optional[IncidenceColoring] = recolor_copy(K, c_prime, blocked, delta, delta1)[1]
    except InvariantViolation as e:
        logger.warning("case %s does not fit the copy at vertex %d (%s); using the oracle", case, vertex, e.message)
        method = "oracle"
        result = decide_k_colorable(K, delta, forbidden={HUB: blocked}, edge_guard=edge_guard)
        if result is None:
            raise InvariantViolation(f"Copy at vertex {vertex} cannot avoid colors {sorted(blocked)}")
    check_coloring(K, result, delta)
    if blocked & set(_hub_colors(result)):
        raise InvariantViolation(f"Copy at vertex {vertex} reuses a base color")
    step = CoronaStep(
        vertex=vertex,
        case=case,
        method=method,
        blocked=tuple(sorted(blocked)),
        hub_colors=_hub_colors(result),
    )
    return result, step


def recolor_copy(
    K: SignedGraph, c: IncidenceColoring, blocked: FrozenSet[int], delta: int, delta1: int
) -> Tuple[str, IncidenceColoring]:
    """
    Recolor a coloring of copy-plus-hub so the hub avoids the colors of its base vertex.

    Args:
        K: One copy of S2 joined to its base vertex, which is local vertex 0
        c: A coloring of K with M_{n(S2)+1} moved into M_Δ
        blocked: Colors of the base vertex padded to degree Δ(S1)
        delta: Maximum degree of the corona
        delta1: Maximum degree of the base graph

    Returns:
        The case label and a Δ-coloring of K whose hub colors are M_Δ minus ``blocked``

    Raises:
        InvariantViolation: If either side has too many unpaired colors or ``c`` does not
            have the structure its case expects
    """
    hub = frozenset(_hub_colors(c))
    _check_unpaired(blocked, delta, "Base vertex")
    _check_unpaired(hub, delta, "Hub")
    case = _case(delta, delta1, blocked, hub)
    result = _recolor(K, c, case, blocked, delta)
    taken = set(_hub_colors(result))
    if taken & blocked or len(taken) + len(blocked) != delta:
        raise InvariantViolation(f"Case {case} gave hub colors {sorted(taken)} against {sorted(blocked)}")
    return case, result


class _Relabel:
    """
    Color pair relabeling of one copy-plus-hub coloring.

    ``pairs`` sends a color to its new color (and its negative to the negative).
    ``hub`` overrides the hub color of single hub edges. ``matching`` recolors one
    interior color class, a matching, with a pair oriented edge by edge. ``forest``
    recolors a set of edges that forms paths with a single pair.
    """

    def __init__(self, K: SignedGraph, c: IncidenceColoring, delta: int) -> None:
        self.K = K
        self.delta = delta
        self.colors = c.edge_colors()
        self.signs = {(u, v): s for u, v, s in K.edges}
        self.at_hub = {fu: (u, v) for (u, v), (fu, _) in self.colors.items() if u == HUB}
        self.pairs: Dict[int, int] = {0: 0}
        self.hub: Dict[EdgeKey, int] = {}
        self.matching: Optional[Tuple[int, int]] = None
        self.forest: Optional[Tuple[List[EdgeKey], int]] = None

    def send(self, a: int, b: int) -> None:
        self.pairs[a] = b
        self.pairs[-a] = -b

    def send_all(self, sources: Sequence[int], targets: Sequence[int]) -> None:
        if len(targets) < len(sources):
            raise InvariantViolation(f"No free pairs left for {list(sources)}: only {list(targets)}")
        for a, b in zip(sources, targets):
            self.send(a, b)

    def hub_edge(self, color: int) -> EdgeKey:
        if color not in self.at_hub:
            raise InvariantViolation(f"No hub edge has color {color}")
        return self.at_hub[color]

    def apply(self) -> IncidenceColoring:
        values: Dict[EdgeKey, Tuple[int, int]] = {}
        forest = set(self.forest[0]) if self.forest else set()
        pending = []
        for key, (fu, fv) in self.colors.items():
            if key in self.hub:
                x = self.hub[key]
                values[key] = (x, -self.signs[key] * x)
            elif key in forest:
                continue
            elif self.matching and abs(fu) == self.matching[0]:
                pending.append(key)
            elif fu in self.pairs and fv in self.pairs:
                values[key] = (self.pairs[fu], self.pairs[fv])
            else:
                raise InvariantViolation(f"Color class of {fu} on {key} has no target")
        if self.forest:
            edges, magnitude = self.forest
            index = self.K.edge_index()
            layer = color_layer(self.K.restrict(index[key] for key in edges), magnitude, self.delta)
            values.update(layer.edge_colors())
        if self.matching:
            self._orient(pending, self.matching[1], values)
        return check_coloring(self.K, IncidenceColoring.from_edge_colors(self.delta, values), self.delta)

    def _orient(self, edges: List[EdgeKey], b: int, values: Dict[EdgeKey, Tuple[int, int]]) -> None:
        taken: Dict[int, Set[int]] = {}
        for (u, v), (fu, fv) in values.items():
            taken.setdefault(u, set()).add(fu)
            taken.setdefault(v, set()).add(fv)
        for u, v in edges:
            s = self.signs[(u, v)]
            for x in (b, -b):
                if x not in taken.get(u, ()) and -s * x not in taken.get(v, ()):
                    values[(u, v)] = (x, -s * x)
                    taken.setdefault(u, set()).add(x)
                    taken.setdefault(v, set()).add(-s * x)
                    break
            else:
                raise InvariantViolation(f"Edge {(u, v)} takes neither orientation of ±{b}")


def _recolor(
    K: SignedGraph, c: IncidenceColoring, case: str, blocked: FrozenSet[int], delta: int
) -> IncidenceColoring:
    """
    Relabel the color pairs of ``c`` so the hub takes exactly the colors of M_Δ outside ``blocked``.

    Full pairs at the hub always move to pairs untouched by ``blocked``. What happens to
    the unpaired colors and to 0 depends on the case.

    Raises:
        InvariantViolation: If the coloring does not have the structure the case expects
    """
    hub = frozenset(_hub_colors(c))
    l_base, l_copy = _unpaired(blocked), _unpaired(hub)
    base_pairs, copy_pairs = _full_pairs(blocked), _full_pairs(hub)
    free = [b for b in range(1, delta // 2 + 1) if b not in blocked and -b not in blocked]
    half = delta // 2
    plan = _Relabel(K, c, delta)

    def need(condition: bool, what: str) -> None:
        if not condition:
            raise InvariantViolation(f"Case {case}: {what} (base {sorted(blocked)}, hub {sorted(hub)})")

    rest = copy_pairs
    if case == "1a'":
        need(len(l_base) == 1 and len(l_copy) == 1, "expected one unpaired color on each side")
        plan.send(l_copy[0], -l_base[0])
    elif case == "1a''":
        need(not l_base and len(l_copy) == 1 and bool(base_pairs), "expected one unpaired hub color")
        # the hub edge takes 0, the rest of its class a base pair
        plan.hub[plan.hub_edge(l_copy[0])] = 0
        plan.send(l_copy[0], base_pairs[0])
    elif case == "1b'":
        need(len(l_base) == 1 and len(l_copy) == 1, "expected one unpaired color on each side")
        plan.send(l_copy[0], -l_base[0])
    elif case == "1b''":
        need(len(l_base) == 1 and not l_copy and bool(copy_pairs) and bool(base_pairs), "expected no 0 at the hub")
        (l,) = l_base
        a, rest = copy_pairs[0], copy_pairs[1:]
        plan.send(a, base_pairs[0])
        plan.hub[plan.hub_edge(a)] = 0
        plan.hub[plan.hub_edge(-a)] = -l
        plan.matching = (0, abs(l))
    elif len(l_base) == len(l_copy):
        # case 2 with one or two unpaired colors on both sides, or none
        for lp, l in zip(l_copy, l_base):
            plan.send(lp, -l)
        if not l_base:
            need(bool(base_pairs), "expected a full pair at the base vertex")
            plan.matching = (half, base_pairs[0])
    elif len(l_base) == 2 and not l_copy:
        need(bool(copy_pairs), "expected a full pair at the hub")
        l1, l2 = sorted(l_base, key=lambda x: abs(x) == half)
        a, rest = copy_pairs[0], copy_pairs[1:]
        plan.send(a, -l1)
        plan.hub[plan.hub_edge(a)] = -l1
        plan.hub[plan.hub_edge(-a)] = -l2
        plan.matching = (half, half)
    elif not l_base and len(l_copy) == 2:
        need(bool(base_pairs) and len(free) > len(copy_pairs), "expected a spare free pair")
        l1, l2 = sorted(l_copy, key=lambda x: abs(x) == half)
        plan.send(l1, base_pairs[0])
        edges = [key for key, (fu, _) in plan.colors.items() if abs(fu) == half]
        plan.forest = (edges + [plan.hub_edge(l1)], free[len(copy_pairs)])
    else:
        need(False, "unpaired colors do not line up")
    plan.send_all(rest, free)
    return plan.apply()
