"""
Rota espectral da zeta em grafos (q+1)-regulares: espectro local de Δ_X e o
produto de quatro fatores com a integral espectral trocada por uma soma finita.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from logging import getLogger

import numpy as np
import sympy
from django.conf import settings

from engine.calculus import alpha, cm_numeric, r_m_numeric
from graphs.graph import Graph, operators
from zeta.exceptions import DomainError, EigensolverFailure, NotRegular

logger = getLogger(__name__)


@dataclass(frozen=True)
class SpectralData:
    """Autovalores distintos de Δ_X (crescentes), multiplicidades e pesos locais μ_{x0,x}(λ)."""

    root: int
    target: int
    eigenvalues: np.ndarray
    multiplicities: tuple[int, ...]
    weights: np.ndarray

    def integrate(self, function) -> float:
        """∫ φ(λ) dμ_{x0,x}(λ) = Σ_i φ(λ_i) μ_i."""
        return float(np.sum(function(self.eigenvalues) * self.weights))


@dataclass(frozen=True)
class SpectralZetaValue:
    value: float
    tail_bound: float
    order: int


def _charpoly_roots(g: Graph) -> np.ndarray:
    lam = sympy.Symbol("lam")
    laplacian = sympy.Matrix(operators(g).laplacian.tolist())
    roots = []
    _, factors = sympy.factor_list(laplacian.charpoly(lam).as_expr())
    for factor, power in factors:
        for root in sympy.Poly(factor, lam).nroots(n=30):
            roots.extend([float(sympy.re(root))] * power)
    return np.sort(np.array(roots))


@lru_cache(maxsize=32)
def eigendecomposition(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Autovalores crescentes e autovetores ortonormais (colunas) do Laplaciano."""
    laplacian = operators(g).laplacian.astype(float)
    try:
        eigenvalues, eigenvectors = np.linalg.eigh(laplacian)
    except np.linalg.LinAlgError as exc:
        raise EigensolverFailure(f"Falha na decomposição espectral de {g!r}: {exc}") from exc

    if g.vertex_count <= settings.BZK_CHARPOLY_CHECK_LIMIT:
        reference = _charpoly_roots(g)
        deviation = float(np.max(np.abs(reference - eigenvalues)))
        if deviation > 1e-10:
            raise EigensolverFailure(
                f"Autovalores de {g!r} divergem do polinômio característico (desvio {deviation:.3e})"
            )
        logger.debug(f"[ZETA] Espectro de {g!r} conferido pelo polinômio característico (desvio {deviation:.1e})")

    eigenvalues.flags.writeable = False
    eigenvectors.flags.writeable = False
    return eigenvalues, eigenvectors


def local_spectrum(g: Graph, x0: int, x: int | None = None, *, cluster_tol: float | None = None) -> SpectralData:
    x0 = g.check_vertex(x0)
    x = x0 if x is None else g.check_vertex(x)
    tol = settings.BZK_EIGEN_CLUSTER_TOL if cluster_tol is None else cluster_tol
    eigenvalues, eigenvectors = eigendecomposition(g)

    products = eigenvectors[x0, :] * eigenvectors[x, :]
    distinct, multiplicities, weights = [], [], []
    start = 0
    for i in range(1, len(eigenvalues) + 1):
        if i == len(eigenvalues) or eigenvalues[i] - eigenvalues[i - 1] > tol:
            distinct.append(float(np.mean(eigenvalues[start:i])))
            multiplicities.append(i - start)
            weights.append(float(np.sum(products[start:i])))
            start = i

    return SpectralData(
        root=x0,
        target=x,
        eigenvalues=np.array(distinct),
        multiplicities=tuple(multiplicities),
        weights=np.array(weights),
    )


def _check_domain(g: Graph, u: float, t: float):
    if not g.is_regular():
        raise NotRegular(f"A fórmula espectral exige grafo regular; graus de {g!r}: {sorted(set(g.degrees))}")
    if not abs(t) < 1:
        raise DomainError(f"Parâmetro t fora de |t| < 1: {t}")
    bound = 1 / alpha(g, abs(t))
    if not 0 < u < bound:
        raise DomainError(f"Parâmetro u fora de 0 < u < 1/α(|t|) = {bound:.6f}: {u}")


def _log_quadratic(spectrum: SpectralData, q: int, u: float, t: float) -> float:
    r = (1 - t) * (q + t)
    return spectrum.integrate(lambda lam: -np.log(1 - (q + 1 - lam) * u + r * u * u))


def _correction_log(g: Graph, x0: int, x: int, u: float, t: float, order: int) -> tuple[float, float]:
    """Fator (iv) em ponto flutuante: log do termo C_2/D e da série R_m até `order`, e a cota da cauda."""
    c = 1.0 - t
    c2 = cm_numeric(g, t, 2)[2]
    value = (t * g.degrees[x0] * (x0 == x) - c2[x0, x]) / 2 * c * u * u
    if x0 != x:
        return value, 0.0

    rm = r_m_numeric(g, t, order)
    m = np.arange(3, order + 1)
    value += float(np.sum(c * rm[3:, x0] * u**m / m))

    a = alpha(g, abs(t))
    beta = max(c * c, abs(1 - t * t))
    ratio = a * u
    if beta >= a * a or ratio >= 1:
        return value, math.inf
    constant = abs(c) * 2 * g.max_degree / (a * a * (1 - beta / (a * a)) ** 2)
    tail = constant * ratio ** (order + 1) / ((order + 1) * (1 - ratio))
    return value, tail


def zeta_spectral(g: Graph, x0: int, x: int, u: float, t: float, *, order: int | None = None) -> SpectralZetaValue:
    """
    Z_X(u, t, x0, x) em grafo (q+1)-regular:

        (1 - (1-t)²u²)^{-(q-1)/2 δ} · exp(Σ_i -log(1 - (q+1-λ_i)u + (1-t)(q+t)u²) μ_i)
        · exp([tD - C_2](x0, x)(1-t)u²/2 + Σ_{m<=order} (1-t) R_m(t)(x0) u^m / m)
    """
    _check_domain(g, u, t)
    x0, x = g.check_vertex(x0), g.check_vertex(x)
    order = settings.BZK_SPECTRAL_ORDER if order is None else order
    q = g.degrees[0] - 1
    c = 1.0 - t

    log_value = _log_quadratic(local_spectrum(g, x0, x), q, u, t)
    if x0 == x:
        log_value += -(q - 1) / 2 * math.log(1 - c * c * u * u)
    correction, tail = _correction_log(g, x0, x, u, t, order)
    value = math.exp(log_value + correction)
    logger.debug(f"[ZETA] Rota espectral em {g!r}, x0={x0}, x={x}, u={u}, t={t}: {value!r} (cauda ≤ {tail:.2e})")
    return SpectralZetaValue(value=value, tail_bound=value * (math.exp(tail) - 1) if math.isfinite(tail) else math.inf, order=order)


def local_spectrum_product(g: Graph, x0: int, u: float, t: float) -> float:
    """Π_λ (1 - (q+1-λ)u + (1-t)(q+t)u²)^{-m_{x0}(λ)}, forma finita da integral espectral em x0."""
    _check_domain(g, u, t)
    q = g.degrees[0] - 1
    r = (1 - t) * (q + t)
    spectrum = local_spectrum(g, x0)
    factors = 1 - (q + 1 - spectrum.eigenvalues) * u + r * u * u
    return float(np.prod(factors ** (-spectrum.weights)))
