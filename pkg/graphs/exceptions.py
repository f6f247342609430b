class GraphAxiomError(ValueError):
    """Grafo viola um dos axiomas (simples, conexo, não vazio)."""


class LoopEdge(GraphAxiomError):
    pass


class DuplicateEdge(GraphAxiomError):
    pass


class Disconnected(GraphAxiomError):
    pass


class EmptyGraph(GraphAxiomError):
    pass


class InvalidVertex(GraphAxiomError):
    pass


class InvalidParameter(ValueError):
    """Parâmetro de família de grafos fora do domínio."""
