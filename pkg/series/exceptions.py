class SeriesError(ValueError):
    """Erro base da álgebra de séries."""


class OrderMismatch(SeriesError):
    """Operação entre séries truncadas em ordens diferentes."""


class DimensionMismatch(SeriesError):
    """Operação entre operadores de dimensões diferentes."""


class BadConstantTerm(SeriesError):
    """log exige termo constante 1 (ou I); exp exige termo constante 0."""
