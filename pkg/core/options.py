"""Argumentos compartilhados pelos comandos e a configuração de execução."""

from dataclasses import dataclass
from logging import getLogger

from django.conf import settings
from django.core.management.base import CommandError

from graphs.exceptions import GraphAxiomError, InvalidParameter
from graphs.generators import generate
from graphs.graph import Graph
from graphs.io import load_graph
from utils.parsing import parse_grid

logger = getLogger(__name__)

USAGE_ERROR = 2
COMPUTATION_ERROR = 1


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    graph: Graph
    root: int = 0
    target: int | None = None
    order: int = 10
    u_values: tuple[float, ...] = ()
    t_values: tuple[float, ...] = ()
    tolerance: float | None = None
    output: str = "json"

    @property
    def resolved_target(self) -> int:
        return self.root if self.target is None else self.target


def add_graph_arguments(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", help="Arquivo do grafo (JSON ou lista de arestas)")
    source.add_argument("--family", help="Família gerada: cycle, complete, hypercube, petersen, path, star, tree_ball")
    parser.add_argument("--n", type=int, help="Tamanho da família (cycle, complete, path, star)")
    parser.add_argument("--d", type=int, help="Dimensão do hipercubo")
    parser.add_argument("--degree", type=int, default=3, help="Grau q+1 da árvore (tree_ball)")
    parser.add_argument("--radius", type=int, default=2, help="Raio da bola na árvore (tree_ball)")


def add_vertex_arguments(parser):
    parser.add_argument("--root", type=int, default=0, help="Vértice raiz x0")
    parser.add_argument("--target", type=int, default=None, help="Vértice alvo x (padrão: a raiz)")


def add_order_argument(parser):
    parser.add_argument(
        "--order", type=int, default=settings.BZK_DEFAULT_ORDER, help="Ordem de truncamento M em u"
    )


def resolve_graph(options: dict) -> Graph:
    try:
        if options.get("graph"):
            return load_graph(options["graph"])
        params = {"n": options.get("n"), "d": options.get("d")}
        params = {key: value for key, value in params.items() if value is not None}
        return generate(
            options["family"], q_plus_1=options.get("degree", 3), radius=options.get("radius", 2), **params
        )
    except (GraphAxiomError, InvalidParameter, ValueError) as exc:
        raise CommandError(f"Grafo inválido: {exc}", returncode=USAGE_ERROR) from exc
    except OSError as exc:
        raise CommandError(f"Não foi possível ler o grafo: {exc}", returncode=USAGE_ERROR) from exc


def parse_values(text: str | None) -> tuple[float, ...]:
    if text is None:
        return ()
    try:
        return tuple(parse_grid(text))
    except ValueError as exc:
        raise CommandError(str(exc), returncode=USAGE_ERROR) from exc


def build_config(subcommand: str, options: dict) -> RunConfig:
    """Lê as opções do comando e valida raiz, alvo e ordem contra o grafo antes de despachar."""
    graph = resolve_graph(options)
    config = RunConfig(
        subcommand=subcommand,
        graph=graph,
        root=options.get("root", 0) or 0,
        target=options.get("target"),
        order=options.get("order") or settings.BZK_DEFAULT_ORDER,
        u_values=parse_values(options.get("u")),
        t_values=parse_values(options.get("t")),
        tolerance=options.get("tol"),
        output=options.get("out") or "json",
    )
    try:
        graph.check_vertex(config.root)
        graph.check_vertex(config.resolved_target)
    except ValueError as exc:
        raise CommandError(str(exc), returncode=USAGE_ERROR) from exc
    if config.order < 1:
        raise CommandError(f"--order deve ser >= 1 (recebido {config.order})", returncode=USAGE_ERROR)
    logger.debug(f"[CLI] {subcommand}: {graph!r}, raiz={config.root}, alvo={config.resolved_target}, M={config.order}")
    return config
