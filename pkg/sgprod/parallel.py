"""Fixed-size work chunks and a serial-or-process-pool map over them."""

import logging
from contextlib import contextmanager
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, List, Tuple, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

Chunk = Tuple[int, int, int]


def chunk_ranges(total: int, size: int) -> List[Chunk]:
    """Split ``range(total)`` into ``(number, start, stop)`` chunks of ``size`` indices."""
    if size < 1:
        raise ValueError(f"Chunk size must be positive, got {size}")
    return [(number, start, min(start + size, total)) for number, start in enumerate(range(0, total, size))]


@contextmanager
def pool(jobs: int) -> Iterator[Callable[[Callable[[T], R], Iterable[T]], Iterator[R]]]:
    """
    An ordered ``imap`` over a process pool, or a serial one for ``jobs <= 1``.

    Falls back to serial execution when the pool cannot be created.
    """
    if jobs > 1:
        try:
            workers = Pool(jobs)
        except OSError as e:
            logger.warning("failed to create a pool of %d workers (%s); running serially", jobs, e)
        else:
            logger.debug("created a pool of %d workers", jobs)
            try:
                yield workers.imap
            finally:
                workers.close()
                workers.join()
            return
    yield lambda fn, items: (fn(item) for item in items)


def add_counts(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    """Componentwise sum; count tuples merge in any order."""
    return tuple(x + y for x, y in zip(a, b))
