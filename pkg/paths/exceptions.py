class NotClosed(ValueError):
    """cbc só é definido para caminhos fechados."""


class PathLengthExceeded(ValueError):
    """Comprimento pedido acima do limite de enumeração (BZK_PATH_LENGTH_CAP)."""


class InvalidFilterEdge(ValueError):
    """Aresta do filtro não pertence a E_{x0}."""
