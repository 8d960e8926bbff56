"""JSON reading and writing for every artifact."""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from .exceptions import ColoringError, GraphError, ProductError, SgProdError
from .models import IncidenceColoring, ProductGraph, SignedGraph

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)
Source = Union[str, bytes, dict]


def _parse(model: Type[M], source: Source, error: Type[SgProdError], what: str) -> M:
    try:
        if isinstance(source, dict):
            return model.model_validate(source)
        return model.model_validate_json(source)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        raise error(f"Invalid {what}{' at ' + where if where else ''}: {first['msg']}")


def parse_graph(source: Source) -> SignedGraph:
    """
    Parse graph JSON ``{"n": ..., "edges": [[u, v, s], ...]}``.

    Edges may come in any order and orientation; they are stored canonically.

    Raises:
        GraphError: On duplicates, self-loops, bad vertices or bad signs
    """
    return _parse(SignedGraph, source, GraphError, "graph")


def parse_coloring(source: Source) -> IncidenceColoring:
    """Parse coloring JSON ``{"k": ..., "values": [[u, v, fu, fv], ...]}``."""
    return _parse(IncidenceColoring, source, ColoringError, "coloring")


def parse_product(source: Source) -> ProductGraph:
    """Parse a product sidecar as written by ``dump_json(product)``."""
    return _parse(ProductGraph, source, ProductError, "product sidecar")


def dump_json(model: BaseModel, indent: Optional[int] = None) -> str:
    return model.model_dump_json(indent=indent)


def canonical_json(model: BaseModel) -> str:
    """Compact, key-sorted JSON of a model, stable for hashing and diffing."""
    return json.dumps(
        model.model_dump(mode="json"),
        ensure_ascii=False,
        separators=(",", ":"),
        sort_keys=True,
    )


def read_text(path: Union[str, Path]) -> str:
    """Read a UTF-8 file, ``-`` meaning stdin."""
    if str(path) == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SgProdError(f"Cannot read {path}: {e.strerror}")


def write_text(text: str, path: Optional[Union[str, Path]] = None) -> None:
    """Write to a UTF-8 file, or stdout when ``path`` is None or ``-``."""
    if path is None or str(path) == "-":
        sys.stdout.write(text + "\n")
        return
    logger.debug("writing %s", path)
    Path(path).write_text(text + "\n", encoding="utf-8")


def load_graph(path: Union[str, Path]) -> SignedGraph:
    return parse_graph(read_text(path))


def load_coloring(path: Union[str, Path]) -> IncidenceColoring:
    return parse_coloring(read_text(path))


def load_product(path: Union[str, Path]) -> ProductGraph:
    return parse_product(read_text(path))


def load_model(model: Type[M], path: Union[str, Path], error: Type[SgProdError] = SgProdError) -> M:
    return _parse(model, read_text(path), error, model.__name__)


def to_plain(model: BaseModel) -> Any:
    return model.model_dump(mode="json")
