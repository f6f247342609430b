"""
Enumeração ingênua (DFS sobre arestas orientadas) de caminhos e caminhos
fechados, com contagem de bumps. É o oráculo independente contra o qual as
identidades do engine são conferidas: nenhuma matriz de transferência aqui.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from logging import getLogger
from typing import Iterator

import numpy as np
from django.conf import settings

from graphs.graph import Graph
from paths.exceptions import InvalidFilterEdge, NotClosed, PathLengthExceeded
from series.operators import OperatorPoly
from series.tpoly import TPoly

logger = getLogger(__name__)


@dataclass(frozen=True)
class Path:
    graph: Graph = field(repr=False)
    start: int
    edges: tuple[int, ...] = ()

    def __post_init__(self):
        vertex = self.start
        for e in self.edges:
            if self.graph.origin(e) != vertex:
                raise ValueError(f"Arestas não consecutivas no caminho {self.edges}")
            vertex = self.graph.terminus(e)

    @classmethod
    def from_vertices(cls, g: Graph, vertices) -> "Path":
        vertices = list(vertices)
        edges = []
        for a, b in zip(vertices, vertices[1:]):
            match = [e for e in g.out_edges[a] if g.terminus(e) == b]
            if not match:
                raise ValueError(f"Não há aresta {a} -> {b}")
            edges.append(match[0])
        return cls(g, vertices[0], tuple(edges))

    @property
    def origin(self) -> int:
        return self.start

    @property
    def terminus(self) -> int:
        return self.graph.terminus(self.edges[-1]) if self.edges else self.start

    @property
    def length(self) -> int:
        return len(self.edges)

    def is_closed(self) -> bool:
        return self.origin == self.terminus


class Weight(str, Enum):
    BC = "bc"
    CBC = "cbc"


class FilterKind(str, Enum):
    ALL = "all"
    NO_TAIL = "no_tail"
    FIRST_EDGE = "first_edge"
    LAST_EDGE = "last_edge"
    FIRST_AND_LAST = "first_and_last"


@dataclass(frozen=True)
class PathFilter:
    kind: FilterKind = FilterKind.ALL
    edge: int | None = None

    @classmethod
    def all(cls) -> "PathFilter":
        return cls(FilterKind.ALL)

    @classmethod
    def no_tail(cls) -> "PathFilter":
        return cls(FilterKind.NO_TAIL)

    @classmethod
    def first_edge(cls, edge: int) -> "PathFilter":
        return cls(FilterKind.FIRST_EDGE, edge)

    @classmethod
    def last_edge(cls, edge: int) -> "PathFilter":
        return cls(FilterKind.LAST_EDGE, edge)

    @classmethod
    def first_and_last(cls, edge: int) -> "PathFilter":
        """Primeira aresta e, última ē."""
        return cls(FilterKind.FIRST_AND_LAST, edge)

    def accepts(self, g: Graph, edges: tuple[int, ...]) -> bool:
        if self.kind is FilterKind.ALL:
            return True
        if not edges:
            return self.kind is FilterKind.NO_TAIL
        first, last = edges[0], edges[-1]
        if self.kind is FilterKind.NO_TAIL:
            return last != g.twin(first)
        if self.kind is FilterKind.FIRST_EDGE:
            return first == self.edge
        if self.kind is FilterKind.LAST_EDGE:
            return last == self.edge
        return first == self.edge and last == g.twin(self.edge)


def bump_count(p: Path) -> int:
    g = p.graph
    return sum(1 for a, b in zip(p.edges, p.edges[1:]) if b == g.twin(a))


def cyclic_bump_count(p: Path) -> int:
    if not p.is_closed():
        raise NotClosed(f"Caminho de {p.origin} a {p.terminus} não é fechado")
    if p.length == 0:
        return 0
    g = p.graph
    m = p.length
    return sum(1 for i in range(m) if p.edges[(i + 1) % m] == g.twin(p.edges[i]))


def _check_length(m: int, cap: int | None):
    if m < 0:
        raise ValueError(f"Comprimento negativo: {m}")
    cap = cap if cap is not None else settings.BZK_PATH_LENGTH_CAP
    if m > cap:
        raise PathLengthExceeded(f"Comprimento {m} acima do limite de enumeração {cap}")


def _walks(g: Graph, start: int, m: int, target_distance: dict[int, int] | None = None) -> Iterator[tuple[tuple[int, ...], int]]:
    """
    Gera (arestas, bc) de todos os caminhos de comprimento m a partir de start.

    Com target_distance (distâncias ao alvo), poda ramos que não conseguem
    voltar a tempo; só caminhos que terminam no alvo são gerados.
    """
    path: list[int] = []

    def extend(vertex: int, remaining: int, bc: int):
        if remaining == 0:
            yield tuple(path), bc
            return
        last = path[-1] if path else None
        for e in g.out_edges[vertex]:
            w = g.terminus(e)
            if target_distance is not None and target_distance.get(w, remaining) > remaining - 1:
                continue
            bump = 1 if last is not None and e == g.twin(last) else 0
            path.append(e)
            yield from extend(w, remaining - 1, bc + bump)
            path.pop()

    if target_distance is not None and target_distance.get(start, m + 1) > m:
        return
    yield from extend(start, m, 0)


def _closed_walks(g: Graph, x0: int, m: int):
    return _walks(g, x0, m, target_distance=g.distances_from(x0))


def _tally(counter: Counter) -> TPoly:
    if not counter:
        return TPoly()
    return TPoly(counter.get(k, 0) for k in range(max(counter) + 1))


def enumerate_closed_weighted(
    g: Graph,
    x0: int,
    m: int,
    weight: Weight = Weight.CBC,
    path_filter: PathFilter | None = None,
    *,
    cap: int | None = None,
) -> TPoly:
    """Σ t^{peso(C)} sobre os caminhos fechados de comprimento m em x0 que passam no filtro."""
    x0 = g.check_vertex(x0)
    _check_length(m, cap)
    path_filter = path_filter or PathFilter.all()
    if path_filter.edge is not None and path_filter.edge not in g.out_edges[x0]:
        raise InvalidFilterEdge(f"Aresta {path_filter.edge} não sai de {x0}")

    counter: Counter = Counter()
    for edges, bc in _closed_walks(g, x0, m):
        if not path_filter.accepts(g, edges):
            continue
        value = bc
        if weight is Weight.CBC and len(edges) >= 2 and edges[0] == g.twin(edges[-1]):
            value += 1
        counter[value] += 1

    logger.debug(f"[ORACLE] x0={x0} m={m} {weight.value}/{path_filter.kind.value}: {sum(counter.values())} caminhos")
    return _tally(counter)


def cm_bruteforce(g: Graph, m: int, *, cap: int | None = None) -> OperatorPoly:
    """Entrada (x, y) = Σ t^{bc(C)} sobre os caminhos x → y de comprimento m."""
    _check_length(m, cap)
    n = g.vertex_count
    rows = []
    for x in range(n):
        counters = [Counter() for _ in range(n)]
        for edges, bc in _walks(g, x, m):
            end = g.terminus(edges[-1]) if edges else x
            counters[end][bc] += 1
        rows.append([_tally(c) for c in counters])
    return OperatorPoly(rows)


def primitive_rooted_closed_paths(g: Graph, x0: int, max_len: int, *, cap: int | None = None) -> list[tuple[Path, int, int]]:
    """
    Caminhos fechados em x0 de comprimento <= max_len que não são repetição
    k-upla (k >= 2) de um caminho fechado mais curto, com (caminho, ℓ, cbc).
    """
    if max_len < 1:
        raise ValueError(f"max_len deve ser >= 1 (recebido {max_len})")
    x0 = g.check_vertex(x0)
    _check_length(max_len, cap)
    found = []
    for m in range(1, max_len + 1):
        periods = [p for p in range(1, m) if m % p == 0]
        for edges, bc in _closed_walks(g, x0, m):
            if any(edges == edges[:p] * (m // p) for p in periods):
                continue
            cbc = bc + (1 if edges[0] == g.twin(edges[-1]) else 0)
            found.append((Path(g, x0, edges), m, cbc))
    logger.debug(f"[ORACLE] {len(found)} caminhos primitivos em x0={x0} até comprimento {max_len}")
    return found


def _non_backtracking_walks(g: Graph, start: int, m: int) -> Iterator[tuple[int, ...]]:
    path: list[int] = []

    def extend(vertex: int, remaining: int):
        if remaining == 0:
            yield tuple(path)
            return
        last = path[-1] if path else None
        for e in g.out_edges[vertex]:
            if last is not None and e == g.twin(last):
                continue
            path.append(e)
            yield from extend(g.terminus(e), remaining - 1)
            path.pop()

    yield from extend(start, m)


def count_non_backtracking_paths(g: Graph, m: int, *, cap: int | None = None) -> np.ndarray:
    """Contagem de caminhos sem retrocesso x → y de comprimento m (DFS dedicado)."""
    _check_length(m, cap)
    counts = np.zeros((g.vertex_count, g.vertex_count), dtype=np.int64)
    for x in range(g.vertex_count):
        for edges in _non_backtracking_walks(g, x, m):
            end = g.terminus(edges[-1]) if edges else x
            counts[x, end] += 1
    return counts


def count_closed_geodesics(g: Graph, x0: int, m: int, *, cap: int | None = None) -> int:
    """Caminhos fechados em x0 sem retrocesso e sem cauda (geodésicas fechadas enraizadas)."""
    x0 = g.check_vertex(x0)
    _check_length(m, cap)
    if m == 0:
        return 0
    return sum(
        1
        for edges in _non_backtracking_walks(g, x0, m)
        if g.terminus(edges[-1]) == x0 and edges[0] != g.twin(edges[-1])
    )
