"""
Command line front end.

Every command reads and writes UTF-8 JSON. Exit codes: 0 success, 1 a semantic
failure (invalid coloring, failed reproduction row, guard exceeded), 2 a usage error.
"""

import argparse
import json
import logging
import re
import sys
from typing import Callable, Dict, List, Literal, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from . import __version__
from .analysis import class_ratio_cosets, class_ratio_full, class_ratio_product_induced, reproduce
from .base import Settings
from .coloring import switch_coloring, verify_coloring
from .core import (
    make_complete,
    make_cycle,
    make_path,
    make_star,
    make_tree,
    max_degree,
    random_signs,
    switch,
    switch_to_positive,
    switching_set_to,
)
from .exceptions import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, GraphError, SgProdError
from .models import IncidenceColoring, SignedGraph
from .oracle import exact_chromatic_index
from .products import build_product
from .serialization import dump_json, load_coloring, load_graph, load_product, write_text
from .theorems import METHODS, color_product

logger = logging.getLogger(__name__)

Family = Literal["path", "cycle", "complete", "tree", "star"]

FAMILIES: Dict[str, Callable[[int], int]] = {
    "path": lambda size: max(size - 1, 0),
    "cycle": lambda size: size,
    "complete": lambda size: size * (size - 1) // 2,
    "tree": lambda size: max(size - 1, 0),
    "star": lambda size: size,
}

RANDOM_SIGNS = re.compile(r"random\((-?\d+)\)")


class CommandConfig(BaseModel):
    """Validated command line: the subcommand, its files and the settings it runs with."""

    model_config = ConfigDict(extra="forbid")

    command: str
    inputs: List[str] = []
    output: Optional[str] = None
    method: str = "auto"
    strategy: Optional[str] = None
    edge_guard: Optional[int] = Field(default=None, ge=1)
    coset_guard: Optional[int] = Field(default=None, ge=0)
    seed: Optional[int] = None
    jobs: Optional[int] = Field(default=None, ge=0)
    chunk: Optional[int] = Field(default=None, ge=1)
    limit: Optional[int] = Field(default=None, ge=0)
    resume: Optional[str] = None
    verbose: int = 0

    def settings(self) -> Settings:
        return Settings.from_env(
            oracle_edge_guard=self.edge_guard,
            coset_guard=self.coset_guard,
            seed=self.seed,
            jobs=self.jobs,
            chunk_size=self.chunk,
        )


class ChiResult(BaseModel):
    delta: int
    chi: int
    witness: IncidenceColoring


def parse_signs(spec: str, m: int, seed: int = 0) -> List[int]:
    """
    Expand a signs spec for m edges.

    ``all-plus``, ``all-minus``, ``random(SEED)`` or an explicit comma separated
    list of 1/-1 (``+``/``-`` also accepted).

    Raises:
        GraphError: If the spec is malformed or the list has the wrong length
    """
    spec = spec.strip()
    if spec == "all-plus":
        return [1] * m
    if spec == "all-minus":
        return [-1] * m
    match = RANDOM_SIGNS.fullmatch(spec)
    if match:
        return random_signs(m, int(match.group(1)))
    if spec == "random":
        return random_signs(m, seed)
    try:
        raw = json.loads(spec) if spec.startswith("[") else [x for x in spec.split(",") if x.strip()]
        signs = [{"+": 1, "-": -1}.get(str(x).strip()) or int(x) for x in raw]
    except (ValueError, TypeError):
        raise GraphError(f"Bad signs spec {spec!r}: use all-plus, all-minus, random(SEED) or a list like 1,-1,1")
    bad = [s for s in signs if s not in (1, -1)]
    if bad:
        raise GraphError(f"Bad signs spec {spec!r}: signs must be 1 or -1, got {bad}")
    if len(signs) != m:
        raise GraphError(f"Signs spec has {len(signs)} signs, the graph has {m} edges")
    return signs


def generate(family: Family, size: int, spec: str = "all-plus", seed: int = 0) -> SignedGraph:
    """Graph of one family with signs from ``spec``; ``seed`` also fixes the tree shape."""
    if family not in FAMILIES:
        raise GraphError(f"Unknown family {family!r}, expected one of {', '.join(FAMILIES)}")
    signs = parse_signs(spec, FAMILIES[family](size), seed)
    if family == "path":
        return make_path(size, signs)
    if family == "cycle":
        return make_cycle(size, signs)
    if family == "complete":
        return make_complete(size, signs)
    if family == "star":
        return make_star(size, signs)
    return make_tree(size, signs, seed)


def cmd_gen(args: argparse.Namespace, config: CommandConfig) -> int:
    settings = config.settings()
    G = generate(args.family, args.size, args.signs, settings.seed)
    write_text(dump_json(G), config.output)
    return EXIT_OK


def cmd_product(args: argparse.Namespace, config: CommandConfig) -> int:
    S1, S2 = load_graph(args.first), load_graph(args.second)
    links = None
    if args.links is not None:
        links = parse_signs(args.links, S1.n * S2.n, config.settings().seed)
    P = build_product(args.kind, S1, S2, links)
    logger.info("%s product: n=%d m=%d", P.kind, P.graph.n, P.graph.m)
    write_text(dump_json(P), config.output)
    return EXIT_OK


def cmd_color(args: argparse.Namespace, config: CommandConfig) -> int:
    settings = config.settings()
    P = load_product(args.product)
    outcome = color_product(P, config.method, settings.oracle_edge_guard)
    if args.verify and outcome.coloring is not None:
        report = verify_coloring(P.graph, outcome.coloring)
        if not report.valid:
            write_text(dump_json(report), config.output)
            return EXIT_FAILURE
    write_text(dump_json(outcome), config.output)
    return EXIT_OK


def cmd_chi(args: argparse.Namespace, config: CommandConfig) -> int:
    settings = config.settings()
    S = load_graph(args.graph)
    chi, witness = exact_chromatic_index(S, settings.oracle_edge_guard)
    write_text(dump_json(ChiResult(delta=max_degree(S), chi=chi, witness=witness)), config.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: CommandConfig) -> int:
    report = verify_coloring(load_graph(args.graph), load_coloring(args.coloring))
    write_text(dump_json(report), config.output)
    return EXIT_OK if report.valid else EXIT_FAILURE


def cmd_class_ratio(args: argparse.Namespace, config: CommandConfig) -> int:
    settings = config.settings()
    if config.strategy == "product-induced":
        if args.cycles is None:
            raise GraphError("product-induced needs --cycles R S")
        r, s = args.cycles
        report = class_ratio_product_induced(r, s, exhaustive=args.exhaustive)
    else:
        if args.graph is None:
            raise GraphError(f"{config.strategy} needs --graph")
        G = load_graph(args.graph)
        options = {
            "chunk_size": settings.chunk_size,
            "jobs": settings.jobs,
            "state_path": config.resume,
            "limit": config.limit,
        }
        if config.strategy == "full":
            report = class_ratio_full(G, settings.full_cap, **options)
        else:
            report = class_ratio_cosets(G, settings.coset_guard, **options)
    write_text(dump_json(report), config.output)
    return EXIT_OK


def cmd_switch(args: argparse.Namespace, config: CommandConfig) -> int:
    S = load_graph(args.graph)
    if args.to_positive:
        X = sorted(switch_to_positive(S))
    elif args.to is not None:
        target = switching_set_to(S, parse_signs(args.to, S.m))
        if target is None:
            raise GraphError("The target signature is not switching equivalent to the graph")
        X = sorted(target)
    else:
        X = list(args.vertices)
    logger.info("switching at %s", X)
    write_text(dump_json(switch(S, X)), config.output)
    if args.coloring is not None:
        c = switch_coloring(load_coloring(args.coloring), X)
        write_text(dump_json(c), args.coloring_out)
    return EXIT_OK


def cmd_reproduce(args: argparse.Namespace, config: CommandConfig) -> int:
    report = reproduce(args.table, config.settings(), config.limit)
    write_text(dump_json(report, indent=2), config.output)
    for row in report.rows:
        logger.info("%s: %s (expected %s, observed %s)", row.name, row.status, row.expected, row.observed)
    return EXIT_OK if report.ok else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgprod",
        description="Edge coloring of signed graphs and their products.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="INFO with -v, DEBUG with -vv")
    common.add_argument("-o", "--output", help="output file (default: stdout)")
    common.add_argument("--edge-guard", type=int, help="oracle edge guard (default 24, env SG_GUARD_EDGES)")
    common.add_argument("--seed", type=int, help="seed for random signs and trees (default 0, env SG_SEED)")
    common.add_argument("--jobs", type=int, help="worker processes for enumerations (default serial, env SG_JOBS)")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    gen = commands.add_parser("gen", parents=[common], help="generate a signed graph")
    gen.add_argument("family", choices=sorted(FAMILIES))
    gen.add_argument("size", type=int, help="vertices (leaves for a star)")
    gen.add_argument(
        "signs", nargs="?", default="all-plus", help="all-plus, all-minus, random(SEED) or 1,-1,... (default all-plus)"
    )
    gen.set_defaults(handler=cmd_gen)

    product = commands.add_parser("product", parents=[common], help="build a product graph sidecar")
    product.add_argument("kind", choices=["cartesian", "tensor", "strong", "corona"])
    product.add_argument("first", help="first factor graph JSON")
    product.add_argument("second", help="second factor graph JSON")
    product.add_argument("--links", help="corona attachment signs, copy-major (default all-plus)")
    product.set_defaults(handler=cmd_product)

    color = commands.add_parser("color", parents=[common], help="Δ-color a product")
    color.add_argument("product", help="product sidecar JSON")
    color.add_argument("--method", choices=METHODS, default="auto", help="construction (default auto)")
    color.add_argument("--verify", action="store_true", help="re-verify the coloring; exit 1 when invalid")
    color.set_defaults(handler=cmd_color)

    chi = commands.add_parser("chi", parents=[common], help="exact chromatic index with a witness")
    chi.add_argument("graph")
    chi.set_defaults(handler=cmd_chi)

    verify = commands.add_parser("verify", parents=[common], help="check a coloring; exit 1 when invalid")
    verify.add_argument("graph")
    verify.add_argument("coloring")
    verify.set_defaults(handler=cmd_verify)

    ratio = commands.add_parser("class-ratio", parents=[common], help="share of Δ-colorable signatures")
    ratio.add_argument("--graph", help="graph JSON; its signs are ignored")
    ratio.add_argument("--strategy", choices=["full", "cosets", "product-induced"], default="cosets")
    ratio.add_argument("--cycles", type=int, nargs=2, metavar=("R", "S"), help="C_R x C_S for product-induced")
    ratio.add_argument("--exhaustive", action="store_true", help="product-induced over every factor signature pair")
    ratio.add_argument("--coset-guard", type=int, help="maximum cyclomatic number (default 17)")
    ratio.add_argument("--chunk", type=int, help="signatures per chunk (default 1024)")
    ratio.add_argument("--limit", type=int, help="enumerate only this prefix")
    ratio.add_argument("--resume", metavar="STATE", help="state file recording finished chunks")
    ratio.set_defaults(handler=cmd_class_ratio)

    sw = commands.add_parser("switch", parents=[common], help="switch a graph (and optionally a coloring)")
    sw.add_argument("graph")
    sw.add_argument("vertices", type=int, nargs="*", help="switching set")
    target = sw.add_mutually_exclusive_group()
    target.add_argument("--to-positive", action="store_true", help="switch a balanced graph to all-plus")
    target.add_argument("--to", metavar="SIGNS", help="switch to an equivalent signature")
    sw.add_argument("--coloring", help="coloring of the graph to switch along")
    sw.add_argument("--coloring-out", help="where to write the switched coloring (default: stdout)")
    sw.set_defaults(handler=cmd_switch)

    rep = commands.add_parser("reproduce", parents=[common], help="run an experiment table")
    rep.add_argument("table", choices=["cycle-ratios", "conjectures"])
    rep.add_argument("--coset-guard", type=int, help="maximum cyclomatic number (default 17)")
    rep.add_argument("--chunk", type=int, help="signatures per chunk (default 1024)")
    rep.add_argument("--limit", type=int, help="coset enumeration prefix")
    rep.set_defaults(handler=cmd_reproduce)
    return parser


def _config(args: argparse.Namespace) -> CommandConfig:
    inputs = [
        getattr(args, name)
        for name in ("graph", "coloring", "product", "first", "second")
        if isinstance(getattr(args, name, None), str)
    ]
    return CommandConfig(
        command=args.command,
        inputs=inputs,
        output=args.output,
        method=getattr(args, "method", "auto"),
        strategy=getattr(args, "strategy", None),
        edge_guard=args.edge_guard,
        coset_guard=getattr(args, "coset_guard", None),
        seed=args.seed,
        jobs=args.jobs,
        chunk=getattr(args, "chunk", None),
        limit=getattr(args, "limit", None),
        resume=getattr(args, "resume", None),
        verbose=args.verbose,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    levels = (logging.WARNING, logging.INFO, logging.DEBUG)
    logging.basicConfig(
        level=levels[min(args.verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = _config(args)
    except ValidationError as e:
        first = e.errors()[0]
        print(f"sgprod: error: {'.'.join(map(str, first['loc']))}: {first['msg']}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return args.handler(args, config)
    except SgProdError as e:
        print(f"sgprod: error: {e.message}", file=sys.stderr)
        return e.exit_code
