from enum import Enum
from logging import getLogger

import networkx as nx

from graphs.exceptions import InvalidParameter
from graphs.graph import Graph, build_graph
from utils.parsing import normalize_name

logger = getLogger(__name__)


class GraphFamily(str, Enum):
    CYCLE = "cycle"
    COMPLETE = "complete"
    HYPERCUBE = "hypercube"
    PETERSEN = "petersen"
    PATH = "path"
    STAR = "star"
    TREE_BALL = "tree_ball"

    @classmethod
    def parse(cls, name: str) -> "GraphFamily":
        normalized = normalize_name(name)
        aliases = {"k": cls.COMPLETE, "q": cls.HYPERCUBE, "cube": cls.HYPERCUBE, "tree": cls.TREE_BALL}
        if normalized in aliases:
            return aliases[normalized]
        try:
            return cls(normalized)
        except ValueError:
            options = ", ".join(f.value for f in cls)
            raise InvalidParameter(f"Família desconhecida '{name}'. Opções: {options}") from None


def _require(condition: bool, message: str):
    if not condition:
        raise InvalidParameter(message)


def _from_networkx(graph: nx.Graph, name: str) -> Graph:
    relabeled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
    return build_graph(relabeled.number_of_nodes(), sorted(tuple(sorted(e)) for e in relabeled.edges()), name=name)


def tree_ball_edges(q_plus_1: int, radius: int) -> tuple[int, list[tuple[int, int]]]:
    """Bola de raio r na árvore (q+1)-regular: raiz com q+1 filhos, demais com q."""
    edges = []
    frontier = [0]
    count = 1
    for depth in range(radius):
        children_per_vertex = q_plus_1 if depth == 0 else q_plus_1 - 1
        next_frontier = []
        for parent in frontier:
            for _ in range(children_per_vertex):
                edges.append((parent, count))
                next_frontier.append(count)
                count += 1
        frontier = next_frontier
    return count, edges


def generate(family: GraphFamily | str, **params) -> Graph:
    """
    Gera um grafo da família pedida.

    Parâmetros: n (cycle, complete, path, star), d (hypercube),
    q_plus_1 e radius (tree_ball). star(n) tem centro 0 e n folhas.
    """
    family = GraphFamily.parse(family) if isinstance(family, str) else family

    if family is GraphFamily.PETERSEN:
        return _from_networkx(nx.petersen_graph(), "petersen")

    if family is GraphFamily.HYPERCUBE:
        d = int(params.get("d", params.get("n", 3)))
        _require(d >= 1, f"hypercube(d) exige d >= 1 (recebido {d})")
        return _from_networkx(nx.hypercube_graph(d), f"hypercube({d})")

    if family is GraphFamily.TREE_BALL:
        q_plus_1 = int(params.get("q_plus_1", 3))
        radius = int(params.get("radius", 2))
        _require(q_plus_1 >= 2, f"tree_ball exige q+1 >= 2 (recebido {q_plus_1})")
        _require(radius >= 1, f"tree_ball exige raio >= 1 (recebido {radius})")
        count, edges = tree_ball_edges(q_plus_1, radius)
        return build_graph(count, edges, name=f"tree_ball({q_plus_1},{radius})")

    n = params.get("n")
    _require(n is not None, f"A família {family.value} exige o parâmetro n")
    n = int(n)

    if family is GraphFamily.CYCLE:
        _require(n >= 3, f"cycle(n) exige n >= 3 para ser simples (recebido {n})")
        return _from_networkx(nx.cycle_graph(n), f"cycle({n})")
    if family is GraphFamily.COMPLETE:
        _require(n >= 2, f"complete(n) exige n >= 2 (recebido {n})")
        return _from_networkx(nx.complete_graph(n), f"complete({n})")
    if family is GraphFamily.PATH:
        _require(n >= 2, f"path(n) exige n >= 2 (recebido {n})")
        return _from_networkx(nx.path_graph(n), f"path({n})")
    if family is GraphFamily.STAR:
        _require(n >= 1, f"star(n) exige n >= 1 folha (recebido {n})")
        return _from_networkx(nx.star_graph(n), f"star({n})")

    raise InvalidParameter(f"Família não suportada: {family}")


def corpus() -> dict[str, Graph]:
    """Corpus padrão de verificação."""
    return {
        "triangle": generate(GraphFamily.CYCLE, n=3),
        "cycle(4)": generate(GraphFamily.CYCLE, n=4),
        "cycle(6)": generate(GraphFamily.CYCLE, n=6),
        "K4": generate(GraphFamily.COMPLETE, n=4),
        "star(4)": generate(GraphFamily.STAR, n=4),
        "path(4)": generate(GraphFamily.PATH, n=4),
        "hypercube(3)": generate(GraphFamily.HYPERCUBE, d=3),
        "petersen": generate(GraphFamily.PETERSEN),
        "tree_ball(3,3)": generate(GraphFamily.TREE_BALL, q_plus_1=3, radius=3),
    }
