class DomainError(ValueError):
    """(u, t) fora da região onde a fórmula é garantida."""


class NotRegular(ValueError):
    """A rota exige grafo (q+1)-regular."""


class EigensolverFailure(ArithmeticError):
    """Decomposição espectral falhou ou divergiu do polinômio característico."""
