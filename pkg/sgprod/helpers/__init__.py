from .async_helpers import (
    create_analysis_helpers,
    create_coloring_helpers,
    create_theorem_helpers,
)
from .sync_helpers import create_analysis_helpers as create_analysis_helpers_sync
from .sync_helpers import create_coloring_helpers as create_coloring_helpers_sync
from .sync_helpers import create_graph_helpers as create_graph_helpers_sync
from .sync_helpers import create_product_helpers as create_product_helpers_sync
from .sync_helpers import create_theorem_helpers as create_theorem_helpers_sync

__all__ = [
    "create_analysis_helpers",
    "create_coloring_helpers",
    "create_theorem_helpers",
    "create_analysis_helpers_sync",
    "create_coloring_helpers_sync",
    "create_graph_helpers_sync",
    "create_product_helpers_sync",
    "create_theorem_helpers_sync",
]
