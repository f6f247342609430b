"""
Cálculo de operadores: recursão de C_m(t), Laplaciano da diagonal, R_m(t),
C_m^cbc(t) e α(t), em aritmética exata (OperatorPoly) e em ponto flutuante (numpy).

Convenção: B(x0, x) é a entrada linha x0, coluna x; composição de
operadores é produto matricial na mesma ordem.
"""

import math
from functools import lru_cache
from logging import getLogger
from typing import Literal

import numpy as np

from graphs.graph import Graph, operators
from series.operators import OperatorPoly
from series.tpoly import ONE_MINUS_T, T, ZERO, TPoly

logger = getLogger(__name__)

CmSequence = tuple[OperatorPoly, ...]
RmVector = tuple[TPoly, ...]
LaplacianReading = Literal["diagonal", "operator"]

ONE_MINUS_T_SQUARED = TPoly((1, 0, -1))  # 1 - t²


def _q_of_t(g: Graph) -> list[TPoly]:
    """Diagonal de Q_X(t) = D_X - (1 - t) I."""
    return [TPoly((d - 1, 1)) for d in g.degrees]


@lru_cache(maxsize=64)
def cm_sequence(g: Graph, order: int) -> CmSequence:
    """
    [C_0(t), ..., C_M(t)] pela recursão
    C_2 = A² - (1-t) D,  C_m = C_{m-1} A - (1-t) C_{m-2} Q_X(t).
    """
    if order < 0:
        raise ValueError(f"Ordem negativa: {order}")
    A = OperatorPoly.from_array(operators(g).adjacency)
    seq = [OperatorPoly.identity(g.vertex_count), A]
    if order >= 2:
        seq.append(A @ A - OperatorPoly.diagonal(g.degrees) * ONE_MINUS_T)
    q_t = _q_of_t(g)
    for m in range(3, order + 1):
        seq.append(seq[m - 1] @ A - seq[m - 2].scale_columns(q_t) * ONE_MINUS_T)
    logger.debug(f"[ENGINE] C_m calculado até m={order} para {g!r}")
    return tuple(seq[: order + 1])


def delta_diag(g: Graph, C: OperatorPoly) -> RmVector:
    """(Δ_X c)(x) para a função diagonal c(y) = C(y, y)."""
    diagonal = C.diagonal_entries()
    values = []
    for x in range(g.vertex_count):
        value = diagonal[x] * g.degrees[x]
        for y in g.neighbors(x):
            value = value - diagonal[y]
        values.append(value)
    return tuple(values)


def delta_operator_diag(g: Graph, C: OperatorPoly) -> RmVector:
    """[Δ_X · C](x, x) como produto de operadores; leitura alternativa de R_m."""
    values = []
    for x in range(g.vertex_count):
        value = C.entry(x, x) * g.degrees[x]
        for y in g.neighbors(x):
            value = value - C.entry(y, x)
        values.append(value)
    return tuple(values)


def _r_weight(j: int) -> TPoly:
    # Σ_{i=1}^{j} (1-t)^{2(j-i)} (1-t²)^{i-1}
    total = ZERO
    for i in range(1, j + 1):
        total = total + ONE_MINUS_T ** (2 * (j - i)) * ONE_MINUS_T_SQUARED ** (i - 1)
    return total


def r_m(g: Graph, m: int, *, laplacian: LaplacianReading = "diagonal", seq: CmSequence | None = None) -> RmVector:
    if m < 1:
        raise ValueError(f"R_m exige m >= 1 (recebido {m})")
    if m <= 2:
        return (ZERO,) * g.vertex_count
    seq = seq if seq is not None and len(seq) > m - 2 else cm_sequence(g, m - 2)
    apply = delta_diag if laplacian == "diagonal" else delta_operator_diag
    totals = [ZERO] * g.vertex_count
    for j in range(1, (m + 1) // 2):
        weight = _r_weight(j)
        for x, value in enumerate(apply(g, seq[m - 2 * j])):
            if value:
                totals[x] = totals[x] + weight * value
    return tuple(totals)


def cm_cbc(g: Graph, m: int, *, laplacian: LaplacianReading = "diagonal", seq: CmSequence | None = None) -> OperatorPoly:
    """
    C_m^cbc(t). Para m >= 3 a divisão por (1-t) é absorvida:
    C_m - (D - 2(1-t)I) Σ_j (1-t)^{2j-1} C_{m-2j} + (1-t) R_m - δ_par(m) (1-t)^{m-1} t D.
    """
    if m < 0:
        raise ValueError(f"Ordem negativa: {m}")
    seq = seq if seq is not None and len(seq) > m else cm_sequence(g, m)
    if m <= 1:
        return seq[m]
    if m == 2:
        return seq[2] * T

    inner = OperatorPoly.zero(g.vertex_count)
    for j in range(1, (m + 1) // 2):
        inner = inner + seq[m - 2 * j] * ONE_MINUS_T ** (2 * j - 1)
    row_factors = [TPoly((d - 2, 2)) for d in g.degrees]  # deg(x) - 2(1-t)
    result = seq[m] - inner.scale_rows(row_factors)

    r_values = r_m(g, m, laplacian=laplacian, seq=seq)
    result = result + OperatorPoly.diagonal(r_values) * ONE_MINUS_T
    if m % 2 == 0:
        result = result - OperatorPoly.diagonal(g.degrees) * (ONE_MINUS_T ** (m - 1) * T)
    return result


@lru_cache(maxsize=64)
def cbc_sequence(g: Graph, order: int) -> CmSequence:
    """[C_0^cbc, ..., C_M^cbc] reaproveitando a mesma sequência C_m."""
    seq = cm_sequence(g, order)
    return tuple(cm_cbc(g, m, seq=seq) for m in range(order + 1))


def alpha(g: Graph, t_abs: float) -> float:
    """α(t) = (M + √(M² + 4(|t| + 1) M)) / 2, M = grau máximo."""
    if t_abs < 0:
        raise ValueError(f"alpha espera |t| >= 0 (recebido {t_abs})")
    M = g.max_degree
    return (M + math.sqrt(M * M + 4 * (t_abs + 1) * M)) / 2


# --- versões numéricas ---


@lru_cache(maxsize=128)
def cm_numeric(g: Graph, t: float, n_max: int) -> np.ndarray:
    """Array (n_max+1, V, V) com C_n(t) avaliado em t pela mesma recursão."""
    A, D, _ = operators(g)
    A = A.astype(float)
    D = D.astype(float)
    c = 1.0 - t
    q_t = D - c * np.eye(g.vertex_count)
    out = np.zeros((n_max + 1, g.vertex_count, g.vertex_count))
    out[0] = np.eye(g.vertex_count)
    if n_max >= 1:
        out[1] = A
    if n_max >= 2:
        out[2] = A @ A - c * D
    for m in range(3, n_max + 1):
        out[m] = out[m - 1] @ A - c * (out[m - 2] @ q_t)
    out.flags.writeable = False
    return out


def delta_diag_numeric(g: Graph, C: np.ndarray) -> np.ndarray:
    A, D, _ = operators(g)
    diagonal = np.diag(C)
    return np.diag(D) * diagonal - A @ diagonal


def r_m_numeric(g: Graph, t: float, m_max: int) -> np.ndarray:
    """Array (m_max+1, V) com R_m(t)(x)."""
    cm = cm_numeric(g, t, max(m_max, 0))
    c2, s = (1.0 - t) ** 2, 1.0 - t * t
    deltas = [delta_diag_numeric(g, cm[k]) for k in range(m_max + 1)]
    out = np.zeros((m_max + 1, g.vertex_count))
    for m in range(3, m_max + 1):
        for j in range(1, (m + 1) // 2):
            weight = sum(c2 ** (j - i) * s ** (i - 1) for i in range(1, j + 1))
            out[m] += weight * deltas[m - 2 * j]
    return out


def cm_cbc_numeric(g: Graph, t: float, m_max: int) -> np.ndarray:
    """Array (m_max+1, V, V) com C_m^cbc(t) avaliado em t."""
    cm = cm_numeric(g, t, max(m_max, 2))
    rm = r_m_numeric(g, t, m_max)
    c = 1.0 - t
    degrees = np.array(g.degrees, dtype=float)
    out = np.zeros((m_max + 1, g.vertex_count, g.vertex_count))
    for m in range(m_max + 1):
        if m <= 1:
            out[m] = cm[m]
            continue
        if m == 2:
            out[m] = t * cm[2]
            continue
        inner = sum(c ** (2 * j - 1) * cm[m - 2 * j] for j in range(1, (m + 1) // 2))
        value = cm[m] - (degrees - 2 * c)[:, None] * inner + c * np.diag(rm[m])
        if m % 2 == 0:
            value = value - c ** (m - 1) * t * np.diag(degrees)
        out[m] = value
    return out
