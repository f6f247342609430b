"""
Transformada G(t) e a verificação cruzada do núcleo do calor contra a fórmula
espectral da zeta:

    G(t)f(u) = (u^{-2} - r) ∫_0^∞ e^{-(ru + 1/u - (q+1))τ} f(τ) dτ,   r = (q+t)(1-t).
"""

import math
from dataclasses import dataclass
from logging import getLogger
from typing import Callable, TypedDict

import numpy as np
from django.conf import settings
from scipy.integrate import simpson
from scipy.special import ive

from engine.calculus import alpha, cm_numeric
from graphs.graph import Graph
from heat.exceptions import NonconvergentTail
from heat.kernel import d_coefficient
from zeta.exceptions import DomainError, NotRegular
from zeta.spectral import local_spectrum

logger = getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Quadrature:
    step: float
    decay: float
    tol: float

    @classmethod
    def default(cls) -> "Quadrature":
        return cls(
            step=settings.BZK_QUADRATURE_STEP,
            decay=settings.BZK_QUADRATURE_DECAY,
            tol=settings.BZK_QUADRATURE_TOL,
        )


@dataclass(frozen=True)
class GrowthBound:
    """|f(τ)| <= constant · τ^power · e^{rate·τ} para τ >= 0."""

    constant: float
    rate: float
    power: int = 0


def _check_domain(u: float, t: float, q: int) -> float:
    if not abs(t) < 1:
        raise DomainError(f"t deve satisfazer |t| < 1 (recebido {t})")
    r = (q + t) * (1 - t)
    if r <= 0:
        raise DomainError(f"(q+t)(1-t) deve ser positivo (obtido {r})")
    if not 0 < u < 1 / math.sqrt(r):
        raise DomainError(f"u deve estar em (0, 1/√((q+t)(1-t))) = (0, {1 / math.sqrt(r):.6f}); recebido {u}")
    return r


def cutoff(growth: GrowthBound, decay_rate: float, quadrature: Quadrature) -> float:
    """
    Menor T (em passos de 25%) com cauda ∫_T^∞ C τ^k e^{-aτ} dτ <= C (2/a) T^k e^{-aT} <= tol;
    a majoração vale para T >= 2k/a.
    """
    a = decay_rate
    T = max(2 * growth.power / a, quadrature.decay / a)

    def tail(T):
        return growth.constant * (2 / a) * T**growth.power * math.exp(-a * T)

    while tail(T) > quadrature.tol:
        T *= 1.25
    return T


def g_transform(
    f: Integrand,
    u: float,
    t: float,
    q: int,
    quadrature: Quadrature | None = None,
    growth: GrowthBound | None = None,
) -> float:
    """Simpson composto em [0, T]; `f` recebe um array de τ e devolve um array."""
    quadrature = quadrature or Quadrature.default()
    growth = growth or GrowthBound(constant=1.0, rate=0.0)
    r = _check_domain(u, t, q)

    decay_rate = r * u + 1 / u - (q + 1) - growth.rate
    if decay_rate <= 0:
        raise NonconvergentTail(
            f"Crescimento e^{{{growth.rate:.4f}τ}} não é dominado pelo decaimento e^{{-{r * u + 1 / u - (q + 1):.4f}τ}}"
        )
    T = cutoff(growth, decay_rate, quadrature)
    intervals = max(2, math.ceil(T / quadrature.step))
    intervals += intervals % 2
    grid = np.linspace(0.0, T, intervals + 1)
    integrand = np.exp(-(r * u + 1 / u - (q + 1)) * grid) * f(grid)
    integral = simpson(integrand, x=grid)
    logger.debug(f"[HEAT] G(t) com u={u}, t={t}, q={q}: corte T={T:.3f}, {intervals} intervalos")
    return float((u**-2 - r) * integral)


def bessel_package(k: int, t: float, q: int) -> tuple[Integrand, GrowthBound]:
    """
    f_k(τ) = e^{-(q+1)τ} r^{-k/2} I_k(2√r τ), com G(t)f_k(u) = u^{k-1}.

    I_k vem de scipy.special.ive (escala e^{-y}) para não estourar em τ grande.
    """
    r = (q + t) * (1 - t)
    if r <= 0:
        raise DomainError(f"(q+t)(1-t) deve ser positivo (obtido {r})")
    root = math.sqrt(r)

    def package(tau: np.ndarray) -> np.ndarray:
        y = 2 * root * tau
        return np.exp(y - (q + 1) * tau) * r ** (-k / 2) * ive(k, y)

    return package, GrowthBound(constant=1 / math.factorial(k), rate=2 * root - (q + 1), power=k)


class TransformCheckReport(TypedDict):
    graph: str
    root: int
    target: int
    u: float
    t: float
    quadrature: float
    series: float
    spectral: float
    max_deviation: float
    tolerance: float
    passed: bool


def _series_route(g: Graph, x0: int, x: int, u: float, t: float, tol: float) -> float:
    """Σ_n C_n(t)(x0, x) u^{n-1} Σ_j d_j(t)(1-t)^{2j} u^{2j}; a soma em j é geométrica e sai fechada."""
    q = g.degrees[0] - 1
    c2u2 = (1 - t) ** 2 * u * u
    inner = 1 + d_coefficient(1, t, q) * c2u2 / (1 - c2u2)
    ratio = alpha(g, abs(t)) * u
    # |C_n| <= α^n: cauda <= |inner| (αu)^N / (u (1 - αu))
    n_max = 1
    while abs(inner) * ratio**n_max / (u * (1 - ratio)) > tol and n_max < 2000:
        n_max += 1
    cm = cm_numeric(g, t, n_max - 1)
    powers = u ** (np.arange(n_max) - 1.0)
    return float(inner * np.sum(cm[:, x0, x] * powers))


def section7_check(g: Graph, x0: int, x: int, u: float, t: float, *, tolerance: float = 1e-6) -> TransformCheckReport:
    """
    G(t)(K_X(τ, x0, x))(u) por três caminhos: quadratura do núcleo espectral,
    série termo a termo via G(t)f_k = u^{k-1} e a forma fechada espectral.
    """
    if not g.is_regular():
        raise NotRegular(f"A verificação exige grafo regular; graus de {g!r}: {sorted(set(g.degrees))}")
    if not abs(t) < 1:
        raise DomainError(f"t deve satisfazer |t| < 1 (recebido {t})")
    if not 0 < u < 1 / alpha(g, abs(t)):
        raise DomainError(f"u deve estar em (0, 1/α(|t|)) = (0, {1 / alpha(g, abs(t)):.6f}); recebido {u}")
    x0, x = g.check_vertex(x0), g.check_vertex(x)
    q = g.degrees[0] - 1
    r = (q + t) * (1 - t)
    spectrum = local_spectrum(g, x0, x)

    def kernel(tau: np.ndarray) -> np.ndarray:
        return np.exp(-np.outer(tau, spectrum.eigenvalues)) @ spectrum.weights

    growth = GrowthBound(constant=float(np.sum(np.abs(spectrum.weights))), rate=0.0)
    by_quadrature = g_transform(kernel, u, t, q, growth=growth)

    by_series = _series_route(g, x0, x, u, t, tol=1e-13)

    by_spectrum = spectrum.integrate(lambda lam: (u**-2 - r) / (r * u + 1 / u - (q + 1 - lam)))

    values = (by_quadrature, by_series, by_spectrum)
    deviation = max(abs(a - b) for a in values for b in values)
    report = TransformCheckReport(
        graph=g.name,
        root=x0,
        target=x,
        u=u,
        t=t,
        quadrature=by_quadrature,
        series=by_series,
        spectral=by_spectrum,
        max_deviation=deviation,
        tolerance=tolerance,
        passed=deviation <= tolerance,
    )
    level = logger.info if report["passed"] else logger.warning
    level(f"[VERIFY] G(t) do núcleo do calor em {g!r}, x0={x0}, x={x}: desvio máximo {deviation:.2e}")
    return report
