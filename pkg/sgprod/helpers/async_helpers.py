import asyncio
import logging
from functools import partial
from typing import List, Optional, Tuple

from sgprod import analysis, oracle, theorems
from sgprod.base import check_guard
from sgprod.models import (
    ClassRatioReport,
    IncidenceColoring,
    ProbeReport,
    ProductGraph,
    ReproductionReport,
    SignedGraph,
    Strategy,
    TheoremOutcome,
)

logger = logging.getLogger(__name__)


async def create_coloring_helpers(toolkit):
    """Create async coloring helper functions"""

    async def chromatic_index(S: SignedGraph) -> Tuple[int, IncidenceColoring]:
        """Exact chromatic index with a witness"""
        return await toolkit._run(oracle.exact_chromatic_index, S, toolkit.settings.oracle_edge_guard)

    async def delta_coloring(S: SignedGraph) -> Optional[IncidenceColoring]:
        """A Δ-coloring of S, or None"""
        return await toolkit._run(oracle.delta_coloring, S, toolkit.settings.oracle_edge_guard)

    return type("ColoringHelpers", (), {
        "chromatic_index": staticmethod(chromatic_index),
        "delta_coloring": staticmethod(delta_coloring),
    })()


async def create_theorem_helpers(toolkit):
    """Create async theorem helper functions"""

    async def color(P: ProductGraph, method: theorems.Method = "auto") -> TheoremOutcome:
        """Δ-coloring of a product by the construction that fits it"""
        return await toolkit._run(theorems.color_product, P, method, toolkit.settings.oracle_edge_guard)

    async def color_many(items: List[ProductGraph], method: theorems.Method = "auto") -> List[TheoremOutcome]:
        """Color several products concurrently; results keep the input order"""
        return list(await asyncio.gather(*(color(P, method) for P in items)))

    return type("TheoremHelpers", (), {
        "color": staticmethod(color),
        "color_many": staticmethod(color_many),
    })()


async def create_analysis_helpers(toolkit):
    """Create async analysis helper functions"""
    settings = toolkit.settings

    async def enumerate_signatures(
        G: SignedGraph,
        strategy: Strategy,
        state_path: Optional[str] = None,
        limit: Optional[int] = None,
        prune: bool = True,
    ) -> ClassRatioReport:
        """
        Count Δ-colorable signatures with every pending chunk submitted at once.

        Finished chunks are recorded in ``state_path`` as they complete, so an
        interrupted run resumes where it stopped.
        """
        state, chunks, size = analysis.prepare_enumeration(G, strategy, settings.chunk_size, state_path, limit)
        todo = analysis.pending_chunks(state, chunks)
        logger.debug("%s enumeration of %d signatures: %d chunks submitted", strategy, size, len(todo))

        job = partial(analysis.count_chunk, state, prune)

        async def run(chunk):
            return chunk, await toolkit._run(job, chunk)

        for finished in asyncio.as_completed([asyncio.ensure_future(run(chunk)) for chunk in todo]):
            chunk, counts = await finished
            state = analysis.record_chunk(state, chunk[0], counts, state_path)
        return analysis.summarize_enumeration(state, chunks, size)

    async def class_ratio_full(
        G: SignedGraph, state_path: Optional[str] = None, limit: Optional[int] = None
    ) -> ClassRatioReport:
        """Class ratio over all 2^m signatures"""
        check_guard(G.m, settings.full_cap, "edge count for full enumeration")
        return await enumerate_signatures(G, "full", state_path, limit)

    async def class_ratio_cosets(
        G: SignedGraph, state_path: Optional[str] = None, limit: Optional[int] = None
    ) -> ClassRatioReport:
        """Class ratio over one signature per switching class"""
        free = analysis.free_edges(G, "cosets")
        check_guard(len(free), settings.coset_guard, "cyclomatic number for coset enumeration")
        return await enumerate_signatures(G, "cosets", state_path, limit)

    async def probe_complete(n: int) -> ProbeReport:
        """χ' of every switching class of K_n"""
        return await toolkit._run(analysis.probe_complete_conjecture, n, settings.complete_guard)

    async def probe_joined_cliques(n: int) -> ProbeReport:
        """χ' of every switching class of two joined copies of K_n"""
        return await toolkit._run(analysis.probe_joined_cliques_conjecture, n, settings.cliques_guard)

    async def reproduce(table: str, limit: Optional[int] = None) -> ReproductionReport:
        """Run one experiment table off the event loop"""
        return await toolkit._run_local(analysis.reproduce, table, settings, limit)

    return type("AnalysisHelpers", (), {
        "enumerate_signatures": staticmethod(enumerate_signatures),
        "class_ratio_full": staticmethod(class_ratio_full),
        "class_ratio_cosets": staticmethod(class_ratio_cosets),
        "probe_complete": staticmethod(probe_complete),
        "probe_joined_cliques": staticmethod(probe_joined_cliques),
        "reproduce": staticmethod(reproduce),
    })()
