from series.tpoly import TPoly
from series.useries import USeries
from utils.parsing import format_rational, parse_rational


def tpoly_to_json(poly: TPoly) -> list[str]:
    return [format_rational(c) for c in poly.coeffs]


def tpoly_from_json(data: list[str]) -> TPoly:
    return TPoly(parse_rational(c) for c in data)


def series_to_json(series: USeries) -> list[list[str]]:
    """Array de arrays de coeficientes: índice externo é a potência de u, interno a de t."""
    return [tpoly_to_json(c) for c in series.coeffs]


def series_from_json(data: list[list[str]]) -> USeries:
    if not data:
        raise ValueError("Série vazia: é preciso ao menos o termo constante")
    return USeries((tpoly_from_json(c) for c in data), len(data) - 1)
