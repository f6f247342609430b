import json
from logging import getLogger
from pathlib import Path

from graphs.graph import Graph, build_graph

logger = getLogger(__name__)


def parse_edge_list(text: str, name: str = "") -> Graph:
    """Uma aresta "a b" por linha; '#' inicia comentário. |V| = maior id + 1."""
    edges = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"Linha {line_number}: esperado 'a b', recebido '{raw.strip()}'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"Linha {line_number}: ids de vértice devem ser inteiros") from None
    vertex_count = max((max(a, b) for a, b in edges), default=-1) + 1
    return build_graph(vertex_count, edges, name=name)


def parse_json_graph(text: str, name: str = "") -> Graph:
    data = json.loads(text)
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise ValueError('JSON de grafo deve ser {"vertices": n, "edges": [[a, b], ...]}')
    return build_graph(int(data["vertices"]), [tuple(edge) for edge in data["edges"]], name=name)


def load_graph(path: str | Path) -> Graph:
    """Carrega JSON (.json ou conteúdo iniciando com '{') ou lista de arestas."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    name = path.stem
    if path.suffix.lower() == ".json" or text.lstrip().startswith("{"):
        graph = parse_json_graph(text, name=name)
    else:
        graph = parse_edge_list(text, name=name)
    logger.info(f"[GRAPH] Grafo carregado de {path}: {graph!r}")
    return graph


def graph_to_json(g: Graph) -> dict:
    return {"vertices": g.vertex_count, "edges": [list(edge) for edge in g.undirected_edges()]}


def dump_graph(g: Graph, path: str | Path):
    Path(path).write_text(json.dumps(graph_to_json(g), indent=2) + "\n", encoding="utf-8")
