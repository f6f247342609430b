"""
Rotas simbólicas da zeta de Bartholdi enraizada Z_X(u, t, x0, x), como séries
truncadas em u com coeficientes em Q[t]:

- log: exp(Σ C_m^cbc(t)(x0, x) u^m / m);
- rhs: produto dos quatro fatores da fórmula tipo Ihara (log(I - f(u)),
  comutador AD - DA, correção C_2/D e série R_m);
- euler: produto sobre caminhos fechados primitivos em x0.

Além das rotas enraizadas: zeta global (traço) e a expressão por determinante.
"""

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from logging import getLogger

import numpy as np
import sympy

from engine.calculus import alpha, cbc_sequence, cm_cbc_numeric, cm_sequence, r_m
from graphs.graph import Graph, operators
from paths.oracle import count_closed_geodesics, primitive_rooted_closed_paths
from series.algebra import binomial_power, series_exp, series_log, termwise_integrate
from series.operators import OperatorPoly, OperatorSeries
from series.tpoly import ONE_MINUS_T, T, ZERO, TPoly
from series.useries import USeries

logger = getLogger(__name__)

ROUTES = ("log", "rhs", "euler", "spectral")


@dataclass(frozen=True)
class ZetaSeries:
    series: USeries
    root: int
    target: int
    route: str


def _check_order(order: int):
    if order < 1:
        raise ValueError(f"Ordem de truncamento deve ser >= 1 (recebido {order})")


def zeta_log_series(g: Graph, x0: int, x: int, order: int) -> ZetaSeries:
    _check_order(order)
    x0, x = g.check_vertex(x0), g.check_vertex(x)
    cbc = cbc_sequence(g, order)
    log_terms = [ZERO] + [cbc[m].entry(x0, x) * Fraction(1, m) for m in range(1, order + 1)]
    return ZetaSeries(series_exp(USeries(log_terms, order)), x0, x, "log")


# --- rota rhs ---


def _f_series(g: Graph, order: int) -> OperatorSeries:
    """f(u) = uA - u²(1-t)Q_X(t) como série de operadores."""
    n = g.vertex_count
    A = OperatorPoly.from_array(operators(g).adjacency)
    q_t = OperatorPoly.diagonal([TPoly((d - 1, 1)) for d in g.degrees])
    return OperatorSeries.from_terms({1: A, 2: q_t * -ONE_MINUS_T}, order, n)


@lru_cache(maxsize=32)
def log_kernel(g: Graph, order: int) -> OperatorSeries:
    """log(I - f(u)); independe da raiz, então fica em cache por grafo."""
    identity = OperatorSeries.identity(g.vertex_count, order)
    logger.debug(f"[ZETA] Calculando log(I - f(u)) para {g!r} até u^{order}")
    return series_log(identity - _f_series(g, order))


def _row_times_f(g: Graph, row: list[USeries], q_diagonal: list[TPoly]) -> list[USeries]:
    """(v f)(j) = z Σ_{i ~ j} v(i) - z² (1-t) Q_X(t)(j) v(j), com v vetor-linha de séries."""
    order = row[0].order
    out = []
    for j in range(g.vertex_count):
        acc = USeries.zero(order)
        for i in g.neighbors(j):
            if not row[i].is_zero():
                acc = acc + row[i]
        acc = acc.shift(1)
        if not row[j].is_zero():
            acc = acc - (row[j] * (ONE_MINUS_T * q_diagonal[j])).shift(2)
        out.append(acc)
    return out


def _unit_row(g: Graph, x: int, order: int) -> list[USeries]:
    return [USeries.one(order) if y == x else USeries.zero(order) for y in range(g.vertex_count)]


def _row_powers(g: Graph, x: int, count: int, order: int) -> list[list[USeries]]:
    """[δ_x f^0, δ_x f^1, ..., δ_x f^{count-1}] (f é simétrico: também são as colunas f^b δ_x)."""
    q_diagonal = [TPoly((d - 1, 1)) for d in g.degrees]
    rows = [_unit_row(g, x, order)]
    for _ in range(1, count):
        rows.append(_row_times_f(g, rows[-1], q_diagonal))
    return rows


def commutator_integrand(g: Graph, x0: int, x: int, order: int) -> USeries:
    """
    (1-t) z² Σ_{n>=2} (1/n) Σ_{j=1}^{n-1} j [f^{n-1-j} K f^{j-1}](x0, x), K = AD - DA.

    Com a = n-1-j e b = j-1 o peso é (b+1)/(a+b+2); f^k começa em z^k,
    então só a + b <= M - 3 contribui depois da integração.
    """
    if order < 3:
        return USeries.zero(order)
    degrees = g.degrees
    # K(i, k) = A(i, k) (deg(k) - deg(i))
    k_entries = [
        (e.origin, e.terminus, degrees[e.terminus] - degrees[e.origin])
        for e in g.directed_edges
        if degrees[e.terminus] != degrees[e.origin]
    ]
    if not k_entries:
        return USeries.zero(order)

    span = order - 2
    left = _row_powers(g, x0, span, order)
    right = _row_powers(g, x, span, order)
    # W_b = K f^b δ_x
    weighted = []
    for row in right:
        w = [USeries.zero(order) for _ in range(g.vertex_count)]
        for i, k, value in k_entries:
            if not row[k].is_zero():
                w[i] = w[i] + row[k] * value
        weighted.append(w)

    total = USeries.zero(order)
    for a in range(span):
        for b in range(span - a):
            dot = USeries.zero(order)
            for i in range(g.vertex_count):
                if left[a][i].is_zero() or weighted[b][i].is_zero():
                    continue
                dot = dot + left[a][i] * weighted[b][i]
            if not dot.is_zero():
                total = total + dot * Fraction(b + 1, a + b + 2)
    return (total * ONE_MINUS_T).shift(2)


def correction_log_series(g: Graph, x0: int, x: int, order: int) -> USeries:
    """[tD - C_2](x0, x)(1-t)u²/2 + Σ_{m>=3} (1-t) R_m(t)(x0, x) u^m / m."""
    seq = cm_sequence(g, max(order, 2))
    c2_term = -seq[2].entry(x0, x) + (T * g.degrees[x0] if x0 == x else ZERO)
    terms = {2: c2_term * ONE_MINUS_T * Fraction(1, 2)}
    if x0 == x:
        for m in range(3, order + 1):
            terms[m] = r_m(g, m, seq=seq)[x0] * ONE_MINUS_T * Fraction(1, m)
    return USeries.from_terms(terms, order)


def zeta_rhs_series(g: Graph, x0: int, x: int, order: int) -> ZetaSeries:
    _check_order(order)
    x0, x = g.check_vertex(x0), g.check_vertex(x)
    d = g.degrees[x0]

    if x0 == x and d != 2:
        prefactor = binomial_power(USeries.from_terms({0: 1, 2: -(ONE_MINUS_T**2)}, order), Fraction(-(d - 2), 2))
    else:
        prefactor = USeries.one(order)

    spectral_part = series_exp(-log_kernel(g, order).entry(x0, x))
    commutator_part = series_exp(termwise_integrate(commutator_integrand(g, x0, x, order)))
    correction_part = series_exp(correction_log_series(g, x0, x, order))

    series = prefactor * spectral_part * commutator_part * correction_part
    return ZetaSeries(series, x0, x, "rhs")


# --- produto de Euler ---


def euler_product_series(g: Graph, x0: int, order: int) -> ZetaSeries:
    """Π_C (1 - t^{cbc(C)} u^{ℓ(C)})^{-1/ℓ(C)} sobre os caminhos primitivos com ℓ <= M."""
    _check_order(order)
    x0 = g.check_vertex(x0)
    groups = Counter((length, cbc) for _, length, cbc in primitive_rooted_closed_paths(g, x0, order))
    result = USeries.one(order)
    for (length, cbc), count in sorted(groups.items()):
        factor = USeries.from_terms({0: 1, length: -TPoly.monomial(cbc)}, order)
        result = result * binomial_power(factor, Fraction(-count, length))
    logger.debug(f"[ZETA] Produto de Euler em x0={x0}: {sum(groups.values())} caminhos primitivos, {len(groups)} fatores")
    return ZetaSeries(result, x0, x0, "euler")


def ihara_series(g: Graph, x0: int, order: int) -> ZetaSeries:
    """Especialização t = 0: exp(Σ N_m(x0) u^m / m), N_m = geodésicas fechadas em x0."""
    _check_order(order)
    x0 = g.check_vertex(x0)
    log_terms = [0] + [Fraction(count_closed_geodesics(g, x0, m), m) for m in range(1, order + 1)]
    return ZetaSeries(series_exp(USeries(log_terms, order)), x0, x0, "ihara")


# --- zeta global ---


def global_zeta_series(g: Graph, order: int) -> USeries:
    """exp(Σ_m tr(C_m^cbc(t)) u^m / m) = Π_{x0} Z_X(u, t, x0)."""
    _check_order(order)
    cbc = cbc_sequence(g, order)
    log_terms = [ZERO] + [cbc[m].trace() * Fraction(1, m) for m in range(1, order + 1)]
    return series_exp(USeries(log_terms, order))


def sympy_to_series(expr, u: sympy.Symbol, t: sympy.Symbol, order: int) -> USeries:
    poly = sympy.Poly(sympy.expand(expr), u, t)
    terms: dict[int, list] = {}
    for (i, j), coefficient in poly.terms():
        if i > order:
            continue
        rational = sympy.Rational(coefficient)
        row = terms.setdefault(i, [])
        row.extend([0] * (j + 1 - len(row)))
        row[j] += Fraction(int(rational.p), int(rational.q))
    return USeries.from_terms({i: TPoly(row) for i, row in terms.items()}, order)


def bartholdi_determinant_series(g: Graph, order: int) -> USeries:
    """
    Z_X(u, t) = (1 - (1-t)²u²)^{χ} / det(I - uA + (1-t)u²(D - (1-t)I)), χ = |V| - |E|.
    Determinante exato pelo sympy (Berkowitz); viável para grafos pequenos.
    """
    _check_order(order)
    u, t = sympy.symbols("u t")
    A, D, _ = operators(g)
    n = g.vertex_count
    matrix = (
        sympy.eye(n)
        - u * sympy.Matrix(A.tolist())
        + (1 - t) * u**2 * (sympy.Matrix(D.tolist()) - (1 - t) * sympy.eye(n))
    )
    determinant = sympy_to_series(matrix.det(method="berkowitz"), u, t, order)
    chi = n - g.edge_count
    factor = binomial_power(USeries.from_terms({0: 1, 2: -(ONE_MINUS_T**2)}, order), chi)
    logger.debug(f"[ZETA] Determinante de Bartholdi calculado para {g!r} (χ={chi})")
    return factor * determinant.inverse()


# --- avaliação numérica da série log ---


@dataclass(frozen=True)
class NumericZetaValue:
    value: float
    order: int
    tail_bound: float


def zeta_log_numeric(g: Graph, x0: int, x: int, u: float, t: float, order: int | None = None) -> NumericZetaValue:
    """
    exp(Σ_{m<=N} C_m^cbc(t)(x0, x) u^m / m) em ponto flutuante.

    Sem `order`, N é escolhido para que Σ_{m>N} α^m u^m / m fique abaixo de
    1e-15 (exige α(|t|) u < 1).

    A cota da cauda supõe |C_m^cbc(t)(x0, x)| <= α(|t|)^m. Na diagonal isso
    vale para |t| <= 1: C_m^cbc(x0, x0) soma t^cbc sobre os caminhos fechados,
    logo é limitado por (A^m)(x0, x0) <= M^m. Fora da diagonal a majoração não
    está demonstrada e tail_bound é só uma estimativa.
    """
    x0, x = g.check_vertex(x0), g.check_vertex(x)
    ratio = alpha(g, abs(t)) * u
    if order is None:
        if not 0 <= ratio < 1:
            raise ValueError(f"Série log só converge garantidamente para α(|t|)u < 1 (obtido {ratio:.4f})")
        order = 1
        while ratio ** (order + 1) / ((order + 1) * (1 - ratio)) > 1e-15 and order < 300:
            order += 1
    cbc = cm_cbc_numeric(g, t, order)
    m = np.arange(1, order + 1)
    log_value = float(np.sum(cbc[1:, x0, x] * u**m / m))
    tail = ratio ** (order + 1) / ((order + 1) * (1 - ratio)) if ratio < 1 else math.inf
    return NumericZetaValue(value=math.exp(log_value), order=order, tail_bound=tail)
