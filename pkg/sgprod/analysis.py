"""Class ratios over signature enumerations and empirical conjecture probes."""

import logging
from fractions import Fraction
from functools import partial
from itertools import combinations, product
from pathlib import Path
from typing import Dict, List, Literal, Optional, Sequence, Set, Tuple, Union

from .base import DEFAULT_SETTINGS, Settings, check_guard
from .coloring import check_coloring, palette
from .core import build_graph, make_complete, make_cycle, spanning_forest, switch
from .exceptions import ConfigError, GuardExceededError, InvariantViolation, PreconditionError
from .models import (
    ClassRatioReport,
    EnumerationState,
    IncidenceColoring,
    ProbeReport,
    ReproductionReport,
    ReproductionRow,
    SignedGraph,
    Strategy,
)
from .oracle import decide_k_colorable, exact_chromatic_index
from .parallel import Chunk, add_counts, chunk_ranges, pool
from .products import cartesian
from .serialization import dump_json, load_model, write_text
from .theorems.cartesian import classify_cycle_product, parity_lower_bound

logger = logging.getLogger(__name__)

Counts = Tuple[int, int, int]
PathLike = Union[str, Path]


def free_edges(G: SignedGraph, strategy: Strategy) -> Tuple[int, ...]:
    """Edges whose signs are enumerated: all of them, or those outside a spanning forest."""
    if strategy == "full":
        return tuple(range(G.m))
    if strategy == "cosets":
        forest = set(spanning_forest(G))
        return tuple(i for i in range(G.m) if i not in forest)
    raise PreconditionError(f"Strategy {strategy} does not enumerate signatures of a graph")


def signature_at(G: SignedGraph, free: Sequence[int], index: int) -> SignedGraph:
    """Signature number ``index``: bit j set makes free edge j negative, all else positive."""
    signs = [1] * G.m
    for bit, edge in enumerate(free):
        if index >> bit & 1:
            signs[edge] = -1
    return G.with_signs(signs)


def is_delta_colorable_signature(S: SignedGraph, prune: bool = True) -> Tuple[bool, bool]:
    """
    Decide Δ-colorability of one signature.

    Returns:
        ``(colorable, pruned)``, where ``pruned`` means the parity argument decided it
    """
    if S.m == 0:
        return True, False
    if prune and parity_lower_bound(S) is not None:
        return False, True
    delta = max(S.degrees())
    return decide_k_colorable(S, delta, edge_guard=None) is not None, False


def count_range(G: SignedGraph, free: Tuple[int, ...], start: int, stop: int, prune: bool = True) -> Counts:
    """``(total, delta, pruned)`` over signatures ``start..stop-1``."""
    delta = pruned = 0
    for index in range(start, stop):
        colorable, was_pruned = is_delta_colorable_signature(signature_at(G, free, index), prune)
        delta += colorable
        pruned += was_pruned
    return stop - start, delta, pruned


def _load_state(path: Path, fresh: EnumerationState) -> EnumerationState:
    if not path.exists():
        return fresh
    state = load_model(EnumerationState, path, ConfigError)
    for field in ("graph", "strategy", "chunk_size", "free_edges"):
        if getattr(state, field) != getattr(fresh, field):
            raise ConfigError(f"State file {path} was written for a different {field.replace('_', ' ')}")
    logger.info("resuming from %s with %d chunks done", path, len(state.done))
    return state


def prepare_enumeration(
    G: SignedGraph,
    strategy: Strategy,
    chunk_size: int = DEFAULT_SETTINGS.chunk_size,
    state_path: Optional[PathLike] = None,
    limit: Optional[int] = None,
) -> Tuple[EnumerationState, List[Chunk], int]:
    """
    Enumeration state, resumed from ``state_path`` when the file exists, the chunks
    covering the run and the number of signatures in the whole enumeration.

    Raises:
        ConfigError: If the state file belongs to another enumeration
    """
    free = free_edges(G, strategy)
    state = EnumerationState(graph=G.underlying(), strategy=strategy, chunk_size=chunk_size, free_edges=free)
    if state_path is not None:
        state = _load_state(Path(state_path), state)
    size = 1 << len(free)
    total = size if limit is None else min(limit, size)
    return state, chunk_ranges(total, chunk_size), size


def pending_chunks(state: EnumerationState, chunks: List[Chunk]) -> List[Chunk]:
    return [chunk for chunk in chunks if chunk[0] not in state.done]


def count_chunk(state: EnumerationState, prune: bool, chunk: Chunk) -> Counts:
    """Counts for one chunk; module level so worker processes can unpickle it."""
    _, start, stop = chunk
    return count_range(state.graph, state.free_edges, start, stop, prune)


def record_chunk(
    state: EnumerationState, number: int, counts: Counts, state_path: Optional[PathLike] = None
) -> EnumerationState:
    state = state.model_copy(update={"done": {**state.done, number: counts}})
    if state_path is not None:
        write_text(dump_json(state), state_path)
    return state


def summarize_enumeration(state: EnumerationState, chunks: List[Chunk], size: int) -> ClassRatioReport:
    counts: Tuple[int, ...] = (0, 0, 0)
    for number, _, _ in chunks:
        counts = add_counts(counts, state.done[number])
    total = chunks[-1][2] if chunks else 0
    return ClassRatioReport.build(
        counts[0], counts[1], state.strategy, pruned=counts[2], complete=total == size
    )


def enumerate_signatures(
    G: SignedGraph,
    strategy: Strategy,
    chunk_size: int = DEFAULT_SETTINGS.chunk_size,
    jobs: int = DEFAULT_SETTINGS.jobs,
    state_path: Optional[PathLike] = None,
    limit: Optional[int] = None,
    prune: bool = True,
) -> ClassRatioReport:
    """
    Count Δ-colorable signatures chunk by chunk.

    Args:
        G: The graph; its own signs are ignored
        strategy: ``full`` or ``cosets``
        chunk_size: Signatures per chunk
        jobs: Worker processes, 0 or 1 for serial
        state_path: JSON file recording finished chunks; resumed when present
        limit: Enumerate only this prefix of the signature indices
        prune: Decide regular graphs with an odd negative count without searching
    """
    state, chunks, size = prepare_enumeration(G, strategy, chunk_size, state_path, limit)
    todo = pending_chunks(state, chunks)
    logger.debug("%s enumeration of %d signatures: %d of %d chunks to do", strategy, size, len(todo), len(chunks))

    with pool(jobs) as imap:
        for chunk, counts in zip(todo, imap(partial(count_chunk, state, prune), todo)):
            state = record_chunk(state, chunk[0], counts, state_path)
    return summarize_enumeration(state, chunks, size)


def class_ratio_full(
    G: SignedGraph,
    cap: int = DEFAULT_SETTINGS.full_cap,
    **options,
) -> ClassRatioReport:
    """
    Class ratio over all 2^m signatures.

    Raises:
        GuardExceededError: If m is above ``cap``
    """
    check_guard(G.m, cap, "edge count for full enumeration")
    return enumerate_signatures(G, "full", **options)


def class_ratio_cosets(
    G: SignedGraph,
    guard: int = DEFAULT_SETTINGS.coset_guard,
    **options,
) -> ClassRatioReport:
    """
    Class ratio over one signature per switching class.

    Signatures positive on a fixed spanning forest meet every switching class exactly
    once, and all classes have 2^(n-c) members, so the ratio equals the full one.

    Raises:
        GuardExceededError: If m - n + c is above ``guard``
    """
    check_guard(len(free_edges(G, "cosets")), guard, "cyclomatic number for coset enumeration")
    return enumerate_signatures(G, "cosets", **options)


def switching_class(S: SignedGraph, guard: int = 16) -> Set[Tuple[int, ...]]:
    """Every signature reachable from S by switching."""
    check_guard(S.n, guard, "vertex count for switching class expansion")
    members = set()
    for bits in range(1 << S.n):
        X = [v for v in range(S.n) if bits >> v & 1]
        members.add(switch(S, X).signs)
    return members


def _cycle_signs(length: int, balanced: bool) -> List[int]:
    return [1] * length if balanced else [-1] + [1] * (length - 1)


def _pattern(balanced: bool) -> str:
    return "balanced" if balanced else "unbalanced"


def class_ratio_product_induced(
    r: int,
    s: int,
    kind: str = "cartesian",
    exhaustive: bool = False,
) -> ClassRatioReport:
    """
    Class ratio of C_r □ C_s over signatures inherited from the two cycles.

    By default one signature per balance pattern of the factors is classified; every
    pattern holds 2^(r-1) * 2^(s-1) factor pairs. With ``exhaustive`` every pair of
    factor signatures is classified.

    Raises:
        PreconditionError: For products other than Cartesian, or r, s < 3
    """
    if kind != "cartesian":
        raise PreconditionError(f"Product-induced ratios are only defined for Cartesian cycle products, got {kind}")
    if r < 3 or s < 3:
        raise PreconditionError(f"Cycles need at least 3 vertices, got {r} and {s}")

    breakdown: Dict[str, int] = {}
    total = delta = 0
    if exhaustive:
        pairs = [
            (list(sigma1), list(sigma2), 1)
            for sigma1 in product((1, -1), repeat=r)
            for sigma2 in product((1, -1), repeat=s)
        ]
    else:
        weight = 1 << (r - 1 + s - 1)
        pairs = [
            (_cycle_signs(r, b1), _cycle_signs(s, b2), weight)
            for b1, b2 in product((True, False), repeat=2)
        ]
    for sigma1, sigma2, weight in pairs:
        key = f"{_pattern(sigma1.count(-1) % 2 == 0)}/{_pattern(sigma2.count(-1) % 2 == 0)}"
        outcome = classify_cycle_product(r, sigma1, s, sigma2)
        total += weight
        breakdown.setdefault(key, 0)
        if outcome.claim == "delta":
            delta += weight
            breakdown[key] += weight
    return ClassRatioReport.build(total, delta, "product-induced", breakdown=breakdown)


def probe_complete_conjecture(
    n: int,
    guard: int = DEFAULT_SETTINGS.complete_guard,
) -> ProbeReport:
    """
    Check χ' = n - 1 on one signature of K_n per switching class.

    Raises:
        GuardExceededError: If n is above ``guard``
        PreconditionError: If n < 2
    """
    check_guard(n, guard, "clique order")
    if n < 2:
        raise PreconditionError(f"K_{n} has no edges")
    K = make_complete(n, [1] * (n * (n - 1) // 2))
    return _probe("complete", n, K, n - 1)


def joined_cliques(n: int, clique_signs: Optional[Sequence[int]] = None, join_sign: int = 1) -> SignedGraph:
    """
    Two copies of K_n on 0..n-1 and n..2n-1 plus the edge (0, n).

    Both copies carry ``clique_signs`` in the lexicographic edge order of K_n, all
    positive by default.
    """
    pairs = list(combinations(range(n), 2))
    signs = [1] * len(pairs) if clique_signs is None else list(clique_signs)
    edges = [(u, v, s) for (u, v), s in zip(pairs, signs)]
    edges += [(u + n, v + n, s) for (u, v), s in zip(pairs, signs)]
    edges.append((0, n, join_sign))
    return build_graph(2 * n, edges)


def probe_joined_cliques_conjecture(
    n: int,
    guard: int = DEFAULT_SETTINGS.cliques_guard,
) -> ProbeReport:
    """
    Check χ' = n on (K_n ∪ K_n) + e per switching class, and the mirrored construction
    on every signature where both cliques carry the same signs.

    Raises:
        GuardExceededError: If n is above ``guard``
        PreconditionError: If n < 2
    """
    check_guard(n, guard, "clique order")
    if n < 2:
        raise PreconditionError(f"K_{n} has no edges")
    report = _probe("joined-cliques", n, joined_cliques(n), n)

    checked = failures = 0
    clique_edges = n * (n - 1) // 2
    for signs in product((1, -1), repeat=clique_edges):
        K = make_complete(n, list(signs))
        for join_sign in (1, -1):
            checked += 1
            if not _mirrored_coloring_holds(K, join_sign):
                failures += 1
    return report.model_copy(update={"construction_checked": checked, "construction_failures": failures})


def mirrored_coloring(K: SignedGraph, join_sign: int) -> IncidenceColoring:
    """
    n-coloring of two equally signed copies of K_n joined at vertex 0.

    Vertex 0 misses exactly one color α of an n-coloring c' of K_n. A negative join
    gets α at both ends with c' on both copies; a positive one uses -c' on the second
    copy, which misses -α there.

    Raises:
        InvariantViolation: If the result is not a valid coloring
    """
    n = K.n
    c = decide_k_colorable(K, n, edge_guard=None)
    if c is None:
        raise InvariantViolation(f"K_{n} is not {n}-colorable")
    at_zero = {fu for u, _, fu, _ in c.values if u == 0}
    alpha = next(x for x in palette(n) if x not in at_zero)
    mirror = 1 if join_sign < 0 else -1
    values = [(u, v, fu, fv) for u, v, fu, fv in c.values]
    values += [(u + n, v + n, mirror * fu, mirror * fv) for u, v, fu, fv in c.values]
    values.append((0, n, alpha, -join_sign * alpha))
    G = joined_cliques(n, K.signs, join_sign)
    return check_coloring(G, IncidenceColoring(k=n, values=values), n)


def _mirrored_coloring_holds(K: SignedGraph, join_sign: int) -> bool:
    try:
        mirrored_coloring(K, join_sign)
    except InvariantViolation as e:
        logger.warning("mirrored construction failed on %s: %s", K.signs, e)
        return False
    return True


def _probe(conjecture: Literal["complete", "joined-cliques"], n: int, G: SignedGraph, expected: int) -> ProbeReport:
    free = free_edges(G, "cosets")
    counterexamples = []
    forced = 0
    for index in range(1 << len(free)):
        S = signature_at(G, free, index)
        chi, _ = exact_chromatic_index(S, edge_guard=None)
        if chi != expected:
            logger.warning("%s probe: n=%d signature %s has chi'=%d", conjecture, n, S.signs, chi)
            counterexamples.append(S)
            if parity_lower_bound(S) is not None:
                forced += 1
    return ProbeReport(
        conjecture=conjecture,
        n=n,
        expected=expected,
        representatives=1 << len(free),
        counterexamples=counterexamples,
        parity_forced=forced,
    )


CYCLE_RATIO_ROWS: Tuple[Tuple[int, int, str], ...] = ((4, 4, "1"), (4, 3, "1/2"), (3, 3, "1/4"))

# odd n makes K_n evenly regular, so every class with an odd number of negative edges
# needs n colors. On K5 the all-negative class needs them too.
KNOWN_COUNTEREXAMPLES: Dict[Tuple[str, int], int] = {("complete", 3): 1, ("complete", 5): 33}


def _ratio_rows(settings: Settings, limit: Optional[int]) -> List[ReproductionRow]:
    rows = []
    for r, s, expected in CYCLE_RATIO_ROWS:
        G = cartesian(make_cycle(r, [1] * r), make_cycle(s, [1] * s)).graph
        name = f"cosets C{r}xC{s}"
        try:
            report = class_ratio_cosets(
                G, settings.coset_guard, chunk_size=settings.chunk_size, jobs=settings.jobs, limit=limit
            )
        except GuardExceededError as e:
            logger.warning("skipping %s: %s", name, e.message)
            rows.append(ReproductionRow(name=name, expected=expected, status="skipped", detail=e.message))
        else:
            if report.complete:
                rows.append(_row(name, expected, report.ratio))
            else:
                # a prefix ratio says nothing about the class ratio
                detail = f"prefix of {report.total} representatives, not compared"
                rows.append(
                    ReproductionRow(
                        name=name, expected=expected, observed=report.ratio, status="skipped", detail=detail
                    )
                )
        induced = class_ratio_product_induced(r, s)
        rows.append(_row(f"product-induced C{r}xC{s}", expected, induced.ratio))
    return rows


def _conjecture_rows(settings: Settings) -> List[ReproductionRow]:
    rows = []
    probes = [("complete", n, probe_complete_conjecture, settings.complete_guard) for n in (3, 4, 5)]
    probes += [("joined-cliques", n, probe_joined_cliques_conjecture, settings.cliques_guard) for n in (2, 3)]
    for conjecture, n, probe, guard in probes:
        name = f"{conjecture} n={n}"
        known = KNOWN_COUNTEREXAMPLES.get((conjecture, n), 0)
        expected = f"{known} counterexamples"
        try:
            report = probe(n, guard)
        except GuardExceededError as e:
            logger.warning("skipping %s: %s", name, e.message)
            rows.append(ReproductionRow(name=name, expected=expected, status="skipped", detail=e.message))
            continue
        observed = f"{len(report.counterexamples)} counterexamples"
        detail = f"{report.representatives} representatives, {report.parity_forced} forced by parity"
        if report.construction_checked:
            detail += f", mirrored construction {report.construction_failures}/{report.construction_checked} failed"
        ok = len(report.counterexamples) == known and not report.construction_failures
        rows.append(
            ReproductionRow(
                name=name, expected=expected, observed=observed, status="passed" if ok else "failed", detail=detail
            )
        )
    return rows


def _row(name: str, expected: str, observed: str, detail: str = "") -> ReproductionRow:
    status = "passed" if Fraction(observed) == Fraction(expected) else "failed"
    return ReproductionRow(name=name, expected=expected, observed=observed, status=status, detail=detail)


def reproduce(
    table: Literal["cycle-ratios", "conjectures"],
    settings: Settings = DEFAULT_SETTINGS,
    limit: Optional[int] = None,
) -> ReproductionReport:
    """
    Run one table of experiments and report each row as passed, failed or skipped.

    Args:
        table: ``cycle-ratios`` or ``conjectures``
        settings: Guards, chunk size and jobs for the runs
        limit: Prefix length for the coset enumerations. Rows cut short this way are
            reported as skipped, not compared
    """
    if table == "cycle-ratios":
        rows = _ratio_rows(settings, limit)
    elif table == "conjectures":
        rows = _conjecture_rows(settings)
    else:
        raise PreconditionError(f"Unknown table: {table}")
    return ReproductionReport(table=table, rows=rows)
