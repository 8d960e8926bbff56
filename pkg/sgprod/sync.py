from typing import Optional

from .base import BaseToolkit, Settings
from .helpers import (
    create_analysis_helpers_sync,
    create_coloring_helpers_sync,
    create_graph_helpers_sync,
    create_product_helpers_sync,
    create_theorem_helpers_sync,
)


class SignedGraphToolkit(BaseToolkit):
    """Synchronous toolkit for signed graphs, their products and colorings."""

    def __init__(self, settings: Optional[Settings] = None, **overrides):
        super().__init__(settings, **overrides)

        # Initialize helper functions
        self.graphs = create_graph_helpers_sync(self)
        self.coloring = create_coloring_helpers_sync(self)
        self.products = create_product_helpers_sync(self)
        self.theorems = create_theorem_helpers_sync(self)
        self.analysis = create_analysis_helpers_sync(self)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

    def close(self):
        """Nothing is held between calls; kept for symmetry with the async toolkit."""
