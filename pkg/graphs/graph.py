from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from logging import getLogger
from typing import NamedTuple

import networkx as nx
import numpy as np

from graphs.exceptions import Disconnected, DuplicateEdge, EmptyGraph, InvalidVertex, LoopEdge

logger = getLogger(__name__)


@dataclass(frozen=True)
class DirectedEdge:
    """Aresta orientada; a aresta 2k e 2k+1 formam o par (e, ē) da aresta não orientada k."""

    id: int
    origin: int
    terminus: int
    twin: int


@dataclass(frozen=True)
class Graph:
    """
    Grafo finito simples com arestas orientadas pareadas pela involução e ↦ ē.

    Imutável depois de construído: pode ser compartilhado entre threads
    e usado como chave de cache.
    """

    vertex_count: int
    directed_edges: tuple[DirectedEdge, ...]
    out_edges: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(edges) for edges in self.out_edges)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def edge_count(self) -> int:
        return len(self.directed_edges) // 2

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def twin(self, edge_id: int) -> int:
        return self.directed_edges[edge_id].twin

    def origin(self, edge_id: int) -> int:
        return self.directed_edges[edge_id].origin

    def terminus(self, edge_id: int) -> int:
        return self.directed_edges[edge_id].terminus

    def neighbors(self, x: int) -> tuple[int, ...]:
        return tuple(self.directed_edges[e].terminus for e in self.out_edges[x])

    def undirected_edges(self) -> list[tuple[int, int]]:
        return [(e.origin, e.terminus) for e in self.directed_edges[::2]]

    def check_vertex(self, x: int) -> int:
        if not isinstance(x, (int, np.integer)) or not 0 <= x < self.vertex_count:
            raise InvalidVertex(f"Vértice {x} inexistente (grafo com {self.vertex_count} vértices)")
        return int(x)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.undirected_edges())
        return graph

    def distances_from(self, x0: int) -> dict[int, int]:
        return nx.single_source_shortest_path_length(self.to_networkx(), self.check_vertex(x0))

    def __repr__(self):
        label = self.name or "graph"
        return f"Graph({label}, V={self.vertex_count}, E={self.edge_count})"


class GraphOperators(NamedTuple):
    adjacency: np.ndarray
    valency: np.ndarray
    laplacian: np.ndarray


def build_graph(
    vertex_count: int,
    undirected_edges,
    *,
    name: str = "",
    require_connected: bool = True,
) -> Graph:
    """
    Monta o grafo a partir das arestas não orientadas, validando os axiomas.

    Cada aresta {a, b} vira o par de arestas orientadas (a→b, b→a) com ids
    2k e 2k+1. `require_connected=False` só é usado na extração de bolas,
    onde a bola de raio 0 é um vértice isolado.
    """
    if vertex_count < 1:
        raise EmptyGraph(f"O grafo precisa de ao menos um vértice (recebido {vertex_count})")

    seen: set[frozenset[int]] = set()
    directed: list[DirectedEdge] = []
    out_edges: list[list[int]] = [[] for _ in range(vertex_count)]

    for pair in undirected_edges:
        a, b = (int(v) for v in pair)
        for v in (a, b):
            if not 0 <= v < vertex_count:
                raise InvalidVertex(f"Aresta ({a}, {b}) referencia vértice inexistente {v}")
        if a == b:
            raise LoopEdge(f"Laço no vértice {a}: o grafo deve ser simples (sem laços)")
        key = frozenset((a, b))
        if key in seen:
            raise DuplicateEdge(f"Aresta repetida ({a}, {b}): o grafo deve ser simples (sem arestas múltiplas)")
        seen.add(key)

        forward = len(directed)
        directed.append(DirectedEdge(id=forward, origin=a, terminus=b, twin=forward + 1))
        directed.append(DirectedEdge(id=forward + 1, origin=b, terminus=a, twin=forward))
        out_edges[a].append(forward)
        out_edges[b].append(forward + 1)

    graph = Graph(
        vertex_count=vertex_count,
        directed_edges=tuple(directed),
        out_edges=tuple(tuple(edges) for edges in out_edges),
        name=name,
    )

    if require_connected:
        if not directed:
            raise EmptyGraph("O grafo precisa de ao menos uma aresta (grau máximo >= 1)")
        if not nx.is_connected(graph.to_networkx()):
            raise Disconnected(f"Grafo '{name or 'sem nome'}' não é conexo")

    logger.debug(f"[GRAPH] Grafo construído: {graph!r}")
    return graph


def operators(g: Graph) -> GraphOperators:
    """Matrizes inteiras A_X, D_X e Δ_X = D_X - A_X (linha x0, coluna x)."""
    adjacency = np.zeros((g.vertex_count, g.vertex_count), dtype=np.int64)
    for edge in g.directed_edges:
        adjacency[edge.origin, edge.terminus] = 1
    valency = np.diag(np.array(g.degrees, dtype=np.int64))
    return GraphOperators(adjacency=adjacency, valency=valency, laplacian=valency - adjacency)


def ball(g: Graph, x0: int, radius: int) -> tuple[Graph, tuple[int, ...]]:
    """
    Subgrafo induzido pelos vértices a distância <= radius de x0.

    Devolve (bola, mapa) com mapa[novo_id] = id original; os ids novos
    seguem a ordem dos originais.
    """
    if radius < 0:
        raise ValueError(f"Raio negativo: {radius}")
    distances = g.distances_from(x0)
    kept = tuple(sorted(v for v, d in distances.items() if d <= radius))
    index = {v: i for i, v in enumerate(kept)}
    edges = [(index[a], index[b]) for a, b in g.undirected_edges() if a in index and b in index]
    name = f"ball({g.name or 'graph'},{x0},{radius})"
    return build_graph(len(kept), edges, name=name, require_connected=False), kept


def girth(g: Graph) -> float:
    """Menor ciclo, por BFS a partir de cada vértice; inf em árvores."""
    best = float("inf")
    for source in range(g.vertex_count):
        dist = {source: 0}
        parent = {source: -1}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best
