from typing import Any, Dict, List, Optional, Sequence, Tuple

from sgprod import analysis, coloring, core, oracle, products, serialization, theorems
from sgprod.models import (
    ClassRatioReport,
    CoronaStep,
    IncidenceColoring,
    ProbeReport,
    ProductGraph,
    ReproductionReport,
    SignedGraph,
    TheoremOutcome,
    VerificationReport,
)


def create_graph_helpers(toolkit):
    """Create sync graph helper functions"""

    def path(r: int, signs: Optional[Sequence[int]] = None) -> SignedGraph:
        """Signed path on r vertices, all positive by default"""
        return core.make_path(r, [1] * max(r - 1, 0) if signs is None else signs)

    def cycle(r: int, signs: Optional[Sequence[int]] = None) -> SignedGraph:
        """Signed cycle on r vertices, all positive by default"""
        return core.make_cycle(r, [1] * r if signs is None else signs)

    def complete(n: int, signs: Optional[Sequence[int]] = None) -> SignedGraph:
        """Signed complete graph, all positive by default"""
        return core.make_complete(n, [1] * (n * (n - 1) // 2) if signs is None else signs)

    def tree(n: int, signs: Optional[Sequence[int]] = None, seed: Optional[int] = None) -> SignedGraph:
        """Random labelled tree, seeded from the settings unless given"""
        seed = toolkit.settings.seed if seed is None else seed
        return core.make_tree(n, [1] * max(n - 1, 0) if signs is None else signs, seed)

    def load(path: str) -> SignedGraph:
        """Read a graph JSON file"""
        return serialization.load_graph(path)

    return type("GraphHelpers", (), {
        "path": staticmethod(path),
        "cycle": staticmethod(cycle),
        "complete": staticmethod(complete),
        "tree": staticmethod(tree),
        "load": staticmethod(load),
        "switch": staticmethod(core.switch),
        "is_balanced": staticmethod(core.is_balanced),
        "cycle_sign": staticmethod(core.cycle_sign),
        "max_degree": staticmethod(core.max_degree),
        "switching_set_to": staticmethod(core.switching_set_to),
    })()


def create_coloring_helpers(toolkit):
    """Create sync coloring helper functions"""

    def verify(S: SignedGraph, c: IncidenceColoring) -> VerificationReport:
        """Check every incidence of a coloring"""
        return coloring.verify_coloring(S, c)

    def chromatic_index(S: SignedGraph) -> Tuple[int, IncidenceColoring]:
        """Exact chromatic index with a witness"""
        return oracle.exact_chromatic_index(S, toolkit.settings.oracle_edge_guard)

    def decide(S: SignedGraph, k: int) -> Optional[IncidenceColoring]:
        """A k-coloring of S, or None"""
        return oracle.decide_k_colorable(S, k, edge_guard=toolkit.settings.oracle_edge_guard)

    def delta_coloring(S: SignedGraph) -> Optional[IncidenceColoring]:
        """A Δ-coloring of S, or None"""
        return oracle.delta_coloring(S, toolkit.settings.oracle_edge_guard)

    return type("ColoringHelpers", (), {
        "verify": staticmethod(verify),
        "chromatic_index": staticmethod(chromatic_index),
        "decide": staticmethod(decide),
        "delta_coloring": staticmethod(delta_coloring),
        "color_set": staticmethod(coloring.color_set),
        "switch": staticmethod(coloring.switch_coloring),
    })()


def create_product_helpers(toolkit):
    """Create sync product helper functions"""

    def strong(S1: SignedGraph, S2: SignedGraph) -> ProductGraph:
        """Strong product; the Cartesian/tensor split is recoverable from the edge origins"""
        return products.strong(S1, S2)[0]

    return type("ProductHelpers", (), {
        "cartesian": staticmethod(products.cartesian),
        "tensor": staticmethod(products.tensor),
        "strong": staticmethod(strong),
        "corona": staticmethod(products.corona),
        "build": staticmethod(products.build_product),
        "project": staticmethod(products.project),
    })()


def create_theorem_helpers(toolkit):
    """Create sync theorem helper functions"""

    def color(P: ProductGraph, method: theorems.Method = "auto") -> TheoremOutcome:
        """Δ-coloring of a product by the construction that fits it"""
        return theorems.color_product(P, method, toolkit.settings.oracle_edge_guard)

    def corona_steps(P: ProductGraph) -> Tuple[IncidenceColoring, List[CoronaStep]]:
        """Corona coloring with the record of each attachment step"""
        return theorems.color_corona_traced(P, toolkit.settings.oracle_edge_guard)

    def oracle_outcome(S: SignedGraph) -> TheoremOutcome:
        """Classify any graph with the exact search"""
        return theorems.oracle_outcome(S, toolkit.settings.oracle_edge_guard)

    return type("TheoremHelpers", (), {
        "color": staticmethod(color),
        "corona_steps": staticmethod(corona_steps),
        "oracle": staticmethod(oracle_outcome),
        "classify_cycle_product": staticmethod(theorems.classify_cycle_product),
        "choose_method": staticmethod(theorems.choose_method),
    })()


def create_analysis_helpers(toolkit):
    """Create sync analysis helper functions"""
    settings = toolkit.settings

    def options(state_path: Optional[str], limit: Optional[int]) -> Dict[str, Any]:
        return {
            "chunk_size": settings.chunk_size,
            "jobs": settings.jobs,
            "state_path": state_path,
            "limit": limit,
        }

    def class_ratio_full(
        G: SignedGraph, state_path: Optional[str] = None, limit: Optional[int] = None
    ) -> ClassRatioReport:
        """Class ratio over all 2^m signatures"""
        return analysis.class_ratio_full(G, settings.full_cap, **options(state_path, limit))

    def class_ratio_cosets(
        G: SignedGraph, state_path: Optional[str] = None, limit: Optional[int] = None
    ) -> ClassRatioReport:
        """Class ratio over one signature per switching class"""
        return analysis.class_ratio_cosets(G, settings.coset_guard, **options(state_path, limit))

    def probe_complete(n: int) -> ProbeReport:
        """χ' of every switching class of K_n"""
        return analysis.probe_complete_conjecture(n, settings.complete_guard)

    def probe_joined_cliques(n: int) -> ProbeReport:
        """χ' of every switching class of two joined copies of K_n"""
        return analysis.probe_joined_cliques_conjecture(n, settings.cliques_guard)

    def reproduce(table: str, limit: Optional[int] = None) -> ReproductionReport:
        """Run one experiment table"""
        return analysis.reproduce(table, settings, limit)

    return type("AnalysisHelpers", (), {
        "class_ratio_full": staticmethod(class_ratio_full),
        "class_ratio_cosets": staticmethod(class_ratio_cosets),
        "class_ratio_product_induced": staticmethod(analysis.class_ratio_product_induced),
        "probe_complete": staticmethod(probe_complete),
        "probe_joined_cliques": staticmethod(probe_joined_cliques),
        "reproduce": staticmethod(reproduce),
    })()
