import asyncio
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from functools import partial
from typing import Any, Callable, Optional

from .base import BaseToolkit, Settings
from .helpers import (
    create_graph_helpers_sync,
    create_product_helpers_sync,
)
from .helpers.async_helpers import (
    create_analysis_helpers,
    create_coloring_helpers,
    create_theorem_helpers,
)

logger = logging.getLogger(__name__)


class AsyncSignedGraphToolkit(BaseToolkit):
    """
    Asynchronous toolkit; searches run off the event loop.

    With ``jobs`` above 1 the work goes to a process pool, otherwise to the loop's
    default executor.
    """

    def __init__(self, settings: Optional[Settings] = None, **overrides):
        super().__init__(settings, **overrides)
        self._executor: Optional[Executor] = None
        self._closed = False

        # Graph and product construction stays synchronous
        self.graphs = create_graph_helpers_sync(self)
        self.products = create_product_helpers_sync(self)

        # Initialize helper functions as None - they will be set in __aenter__
        self.coloring = None
        self.theorems = None
        self.analysis = None

    async def __aenter__(self):
        if self.settings.jobs > 1:
            self._executor = ProcessPoolExecutor(max_workers=self.settings.jobs)
            logger.debug("started a process pool of %d workers", self.settings.jobs)
        self.coloring = await create_coloring_helpers(self)
        self.theorems = await create_theorem_helpers(self)
        self.analysis = await create_analysis_helpers(self)
        return self

    async def __aexit__(self, exc_type, exc_val, exc_tb):
        await self.close()

    async def close(self):
        """Shut the process pool down."""
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None
        self._closed = True

    async def _run(self, fn: Callable[..., Any], *args: Any) -> Any:
        """Run ``fn(*args)`` in the worker pool."""
        if self._closed:
            raise RuntimeError("Toolkit is closed")
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(self._executor, partial(fn, *args))

    async def _run_local(self, fn: Callable[..., Any], *args: Any) -> Any:
        """Run ``fn(*args)`` in a thread of this process."""
        if self._closed:
            raise RuntimeError("Toolkit is closed")
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(None, partial(fn, *args))
