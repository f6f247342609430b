"""
Verificação exata (coeficiente a coeficiente) das identidades de contagem de
caminhos e da série de operadores. Cada check devolve um IdentityReport
quando passa e levanta IdentityViolation (com o relatório) quando falha.
"""

from logging import getLogger
from typing import Any, TypedDict

from engine.calculus import (
    ONE_MINUS_T_SQUARED,
    CmSequence,
    LaplacianReading,
    cm_sequence,
    delta_diag,
    r_m,
)
from engine.exceptions import IdentityViolation
from graphs.graph import Graph, operators
from paths.oracle import PathFilter, Weight, enumerate_closed_weighted
from series.operators import OperatorPoly, OperatorSeries
from series.tpoly import ONE_MINUS_T, T, ZERO, TPoly
from series.useries import USeries

logger = getLogger(__name__)

IdentityReport = TypedDict(
    "IdentityReport",
    {
        "identity": str,
        "graph": str,
        "root": Any,
        "order": int,
        "pass": bool,
        "first_failure": Any,
    },
)


class FailureDetail(TypedDict):
    display: str
    power: int
    entry: Any
    lhs: str
    rhs: str


def make_report(identity: str, g: Graph, root, order: int, failure: FailureDetail | None) -> IdentityReport:
    report: IdentityReport = {
        "identity": identity,
        "graph": g.name or repr(g),
        "root": root,
        "order": order,
        "pass": failure is None,
        "first_failure": failure,
    }
    if failure is not None:
        logger.error(f"[ENGINE] {identity} falhou em {report['graph']} raiz={root}: {failure}")
        raise IdentityViolation(report)
    logger.info(f"[ENGINE] {identity} ok em {report['graph']} raiz={root} ordem={order}")
    return report


def first_series_difference(display: str, lhs: USeries, rhs: USeries, entry=None) -> FailureDetail | None:
    for k, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return {"display": display, "power": k, "entry": entry, "lhs": str(a), "rhs": str(b)}
    return None


def first_scalar_difference(display: str, power: int, lhs: TPoly, rhs: TPoly) -> FailureDetail | None:
    if lhs != rhs:
        return {"display": display, "power": power, "entry": None, "lhs": str(lhs), "rhs": str(rhs)}
    return None


def _quadratic(coefficient: TPoly, order: int) -> USeries:
    """1 - coefficient · u²."""
    return USeries.from_terms({0: 1, 2: -coefficient}, order)


def _diagonal_series(seq: CmSequence, x0: int, order: int) -> USeries:
    """C(t, x0: u) = Σ_{m>=1} C_m(t)(x0, x0) u^m."""
    return USeries([ZERO] + [seq[m].entry(x0, x0) for m in range(1, order + 1)], order)


def _delta_series(g: Graph, seq: CmSequence, x0: int, order: int) -> USeries:
    """Δ_X C(t, · : u)(x0), aplicando delta_diag em cada coeficiente de u."""
    return USeries([ZERO] + [delta_diag(g, seq[m])[x0] for m in range(1, order + 1)], order)


def _oracle_series(g: Graph, x0: int, order: int, path_filter: PathFilter) -> USeries:
    coeffs = [ZERO] + [enumerate_closed_weighted(g, x0, m, Weight.CBC, path_filter) for m in range(1, order + 1)]
    return USeries(coeffs, order)


def _inner_sum(seq: CmSequence, x0: int, m: int, shift: int) -> TPoly:
    # Σ_{j=1}^{⌈m/2⌉-1} (1-t)^{2j+shift} C_{m-2j}(x0, x0)
    total = ZERO
    for j in range(1, (m + 1) // 2):
        total = total + ONE_MINUS_T ** (2 * j + shift) * seq[m - 2 * j].entry(x0, x0)
    return total


def check_fNC(g: Graph, x0: int, order: int) -> IdentityReport:
    """Série N(t, x0: u) de caminhos fechados sem cauda contra C(t, x0: u)."""
    if order < 4:
        raise ValueError(f"check_fNC exige ordem >= 4 (recebido {order})")
    x0 = g.check_vertex(x0)
    d = g.degrees[x0]
    seq = cm_sequence(g, order)
    N = _oracle_series(g, x0, order, PathFilter.no_tail())
    C = _diagonal_series(seq, x0, order)
    delta_C = _delta_series(g, seq, x0, order)

    lhs = _quadratic(ONE_MINUS_T**2, order) * N
    rhs = (
        _quadratic(TPoly((d - 1, 0, 1)), order) * C  # d - (1 - t²)
        - USeries.from_terms({2: T * d}, order)
        + (delta_C * _quadratic(ONE_MINUS_T_SQUARED, order).inverse()).shift(2)
    )
    failure = first_series_difference("generating_function", lhs, rhs)

    for m in range(3, order + 1):
        if failure is not None:
            break
        expected = (
            seq[m].entry(x0, x0)
            - TPoly((d - 2, 2)) * _inner_sum(seq, x0, m, -2)
            + r_m(g, m, seq=seq)[x0]
            - (ONE_MINUS_T ** (m - 2) * T * d if m % 2 == 0 else ZERO)
        )
        failure = first_scalar_difference("coefficient", m, N.coefficient(m), expected)

    return make_report("fNC", g, x0, order, failure)


def check_cbc(g: Graph, x0: int, order: int, *, laplacian: LaplacianReading = "diagonal") -> IdentityReport:
    """
    Série C^cbc(t, x0: u) do oráculo contra C(t, x0: u), nas formas:
    a da demonstração (com 1/(1 - (1-t²)u²)), a forma com denominadores
    eliminados e a identidade por coeficiente para m >= 3.
    `laplacian="operator"` usa a leitura Δ·C de R_m (precisa falhar fora
    de grafos vértice-transitivos).
    """
    if order < 4:
        raise ValueError(f"check_cbc exige ordem >= 4 (recebido {order})")
    x0 = g.check_vertex(x0)
    d = g.degrees[x0]
    c = ONE_MINUS_T
    seq = cm_sequence(g, order)
    cbc = _oracle_series(g, x0, order, PathFilter.all())
    C = _diagonal_series(seq, x0, order)
    delta_C = _delta_series(g, seq, x0, order)
    s_factor = _quadratic(ONE_MINUS_T_SQUARED, order)

    # (1 - (1-t)²u²) C^cbc = (1 - (1-t)(d + t - 1)u²) C - (1-t) t d u² + (1-t)u²/(1 - (1-t²)u²) ΔC
    lhs = _quadratic(c**2, order) * cbc
    rhs = (
        _quadratic(c * TPoly((d - 1, 1)), order) * C
        - USeries.from_terms({2: c * T * d}, order)
        + (delta_C * s_factor.inverse() * c).shift(2)
    )
    failure = first_series_difference("generating_function", lhs, rhs)

    if failure is None:
        lhs = s_factor * _quadratic(c**2, order) * cbc
        bracket = USeries.from_terms(
            {0: 1, 2: -(c * TPoly((d, 2))), 4: ONE_MINUS_T_SQUARED * c * TPoly((d - 1, 1))},
            order,
        )
        rhs = bracket * C + (delta_C * c).shift(2) - (s_factor * (c * T * d)).shift(2)
        failure = first_series_difference("cleared_generating_function", lhs, rhs)

    for m in range(3, order + 1):
        if failure is not None:
            break
        expected = (
            seq[m].entry(x0, x0)
            - TPoly((d - 2, 2)) * _inner_sum(seq, x0, m, -1)
            + c * r_m(g, m, laplacian=laplacian, seq=seq)[x0]
            - (c ** (m - 1) * T * d if m % 2 == 0 else ZERO)
        )
        failure = first_scalar_difference("coefficient", m, cbc.coefficient(m), expected)

    return make_report("cbc", g, x0, order, failure)


def check_fC(g: Graph, order: int) -> IdentityReport:
    """
    (Σ C_m u^m)(I - uA + (1-t)Q_X(t)u²) = (1 - (1-t)²u²) I e
    (Σ_m Σ_j C_{m-2j}(1-t)^{2j} u^m)(I - uA + (1-t)Q_X(t)u²) = I.
    """
    if order < 2:
        raise ValueError(f"check_fC exige ordem >= 2 (recebido {order})")
    n = g.vertex_count
    c = ONE_MINUS_T
    seq = cm_sequence(g, order)
    A = OperatorPoly.from_array(operators(g).adjacency)
    q_t = OperatorPoly.diagonal([TPoly((d - 1, 1)) for d in g.degrees])
    kernel = OperatorSeries.from_terms({0: OperatorPoly.identity(n), 1: -A, 2: q_t * c}, order, n)

    generating = OperatorSeries(seq, order, n)
    expected = OperatorSeries.from_terms(
        {0: OperatorPoly.identity(n), 2: OperatorPoly.identity(n) * -(c**2)}, order, n
    )
    failure = _first_operator_difference("first_display", generating @ kernel, expected)

    if failure is None:
        partial_sums = []
        for m in range(order + 1):
            total = OperatorPoly.zero(n)
            for j in range(m // 2 + 1):
                total = total + seq[m - 2 * j] * c ** (2 * j)
            partial_sums.append(total)
        inverse = OperatorSeries(partial_sums, order, n)
        failure = _first_operator_difference("second_display", inverse @ kernel, OperatorSeries.identity(n, order))

    return make_report("fC", g, None, order, failure)


def _first_operator_difference(display: str, lhs: OperatorSeries, rhs: OperatorSeries) -> FailureDetail | None:
    for k, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a == b:
            continue
        for i in range(a.dim):
            for j in range(a.dim):
                if a.entry(i, j) != b.entry(i, j):
                    return {
                        "display": display,
                        "power": k,
                        "entry": [i, j],
                        "lhs": str(a.entry(i, j)),
                        "rhs": str(b.entry(i, j)),
                    }
    return None


def check_R_generating(g: Graph, x0: int, order: int) -> IdentityReport:
    """Σ R_m(t)(x0) u^m = u² / ((1 - (1-t)²u²)(1 - (1-t²)u²)) · Δ_X C(t, ·: u)(x0)."""
    if order < 3:
        raise ValueError(f"check_R_generating exige ordem >= 3 (recebido {order})")
    x0 = g.check_vertex(x0)
    seq = cm_sequence(g, order)
    lhs = USeries([ZERO] + [r_m(g, m, seq=seq)[x0] for m in range(1, order + 1)], order)
    denominator = _quadratic(ONE_MINUS_T**2, order) * _quadratic(ONE_MINUS_T_SQUARED, order)
    rhs = (_delta_series(g, seq, x0, order) * denominator.inverse()).shift(2)
    failure = first_series_difference("generating_function", lhs, rhs)
    return make_report("R_generating", g, x0, order, failure)
