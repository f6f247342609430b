"""
Núcleo do calor K_X(τ, x0, x) em grafos (q+1)-regulares finitos:

- rota bessel: série dupla Σ_n C_n(t)(x0, x) Σ_j d_j(t)(1-t)^{2j} r^{-(n+2j)/2}
  I_{n+2j}(2√r τ) e^{-(q+1)τ}, com r = (1-t)(q+t), truncada por cota explícita;
- rota spectral: Σ_i e^{-τλ_i} μ_{x0,x}(λ_i).
"""

import math
from dataclasses import dataclass
from logging import getLogger
from typing import Literal

import numpy as np
from django.conf import settings

from engine.calculus import alpha, cm_numeric
from graphs.graph import Graph, operators
from heat.bessel import bessel_i
from heat.exceptions import NonconvergentTail, ParameterDomain
from zeta.exceptions import NotRegular
from zeta.spectral import local_spectrum

logger = getLogger(__name__)

HeatRoute = Literal["bessel", "spectral"]

MAX_TRUNCATION = 400


@dataclass(frozen=True)
class HeatKernelValue:
    tau: float
    root: int
    target: int
    value: float
    route: HeatRoute
    truncation: tuple[int, int] | None = None
    tail_bound: float = 0.0


def d_coefficient(j: int, t: float, q: int) -> float:
    """d_0 = 1 e d_j = -(q - 1 + 2t)/(1 - t) para j >= 1."""
    if t == 1:
        raise ParameterDomain("d_j(t) não é definido em t = 1")
    return 1.0 if j == 0 else -(q - 1 + 2 * t) / (1 - t)


def _regular_degree(g: Graph) -> int:
    if not g.is_regular():
        raise NotRegular(f"A série de Bessel exige grafo regular; graus de {g!r}: {sorted(set(g.degrees))}")
    return g.degrees[0] - 1


def _check_parameters(q: int, tau: float, t: float) -> float:
    if tau < 0:
        raise ParameterDomain(f"τ deve ser >= 0 (recebido {tau})")
    if not abs(t) < 1:
        raise ParameterDomain(f"t deve satisfazer |t| < 1 (recebido {t})")
    r = (1 - t) * (q + t)
    if r <= 0:
        raise ParameterDomain(f"(1-t)(q+t) deve ser positivo (obtido {r} para q={q}, t={t})")
    return r


def _poisson_tail(x: float, start: int) -> float:
    """Σ_{n >= start} x^n / n!, majorado por x^start/start! / (1 - x/(start+1))."""
    if x == 0:
        return 0.0 if start > 0 else 1.0
    if x >= start + 1:
        return math.inf
    return math.exp(start * math.log(x) - math.lgamma(start + 1)) / (1 - x / (start + 1))


def _even_tail(y: float, start: int) -> float:
    """Σ_{j >= start} y^{2j} / (2j)!."""
    if y == 0:
        return 0.0 if start > 0 else 1.0
    if y * y >= (2 * start + 1) * (2 * start + 2):
        return math.inf
    head = math.exp(2 * start * math.log(y) - math.lgamma(2 * start + 1))
    return head / (1 - y * y / ((2 * start + 1) * (2 * start + 2)))


def truncation_orders(g: Graph, tau: float, t: float, tol: float) -> tuple[int, int, float]:
    """
    (N, J, cota) com |K - Σ_{n<N, j<J}| <= cota <= tol, usando |C_n(t)(x0, x)| <= α^n,
    I_k(y) <= (y/2)^k e^y / k! e (n+2j)! >= n!(2j)!.
    """
    q = _regular_degree(g)
    r = _check_parameters(q, tau, t)
    c = abs(1 - t)
    M_t = max(1.0, abs(d_coefficient(1, t, q)))
    scale = M_t * math.exp((2 * math.sqrt(r) - (q + 1)) * tau)
    a_tau = alpha(g, abs(t)) * tau

    n_max = 1
    while scale * _poisson_tail(a_tau, n_max) * math.cosh(c * tau) > tol / 2:
        n_max += 1
        if n_max > MAX_TRUNCATION:
            raise NonconvergentTail(f"Truncagem em n não fecha para τ={tau}, t={t} (tol={tol})")
    j_max = 1
    while scale * math.exp(a_tau) * _even_tail(c * tau, j_max) > tol / 2:
        j_max += 1
        if j_max > MAX_TRUNCATION:
            raise NonconvergentTail(f"Truncagem em j não fecha para τ={tau}, t={t} (tol={tol})")

    bound = scale * (_poisson_tail(a_tau, n_max) * math.cosh(c * tau) + math.exp(a_tau) * _even_tail(c * tau, j_max))
    return n_max, j_max, bound


def _bessel_tolerance(k: int, y: float) -> float:
    """Tolerância relativa à cota (y/2)^k e^y / k! de I_k(y)."""
    if y == 0:
        return settings.BZK_BESSEL_TOL
    scale = k * math.log(y / 2) + y - math.lgamma(k + 1)
    return settings.BZK_BESSEL_TOL * max(math.exp(scale), 1e-300)


def _bessel_weights(q: int, tau: float, t: float, n_max: int, j_max: int) -> tuple[np.ndarray, np.ndarray]:
    """S_n = Σ_{j<J} d_j (1-t)^{2j} r^{-(n+2j)/2} I_{n+2j}(2√r τ) e^{-(q+1)τ} e o erro das Bessel por n."""
    r = (1 - t) * (q + t)
    y0 = 2 * math.sqrt(r) * tau
    damping = math.exp(-(q + 1) * tau)
    values = [bessel_i(k, y0, _bessel_tolerance(k, y0)) for k in range(n_max + 2 * j_max)]

    weights = np.zeros(n_max)
    errors = np.zeros(n_max)
    for n in range(n_max):
        for j in range(j_max):
            coefficient = d_coefficient(j, t, q) * (1 - t) ** (2 * j) * r ** (-(n + 2 * j) / 2) * damping
            evaluation = values[n + 2 * j]
            weights[n] += coefficient * evaluation.value
            errors[n] += abs(coefficient) * evaluation.tail_bound
    return weights, errors


def heat_kernel_row(g: Graph, x0: int, tau: float, t: float, tol: float | None = None) -> tuple[np.ndarray, tuple[int, int], float]:
    """K(τ, x0, ·) inteiro pela série de Bessel, com a truncagem usada e a cota do erro."""
    tol = settings.BZK_HEAT_TOL if tol is None else tol
    x0 = g.check_vertex(x0)
    q = _regular_degree(g)
    n_max, j_max, bound = truncation_orders(g, tau, t, tol)
    weights, errors = _bessel_weights(q, tau, t, n_max, j_max)
    cm = cm_numeric(g, t, n_max - 1)
    row = weights @ cm[:, x0, :]
    bessel_error = float(np.max(errors @ np.abs(cm[:, x0, :])))
    return row, (n_max, j_max), bound + bessel_error


def heat_kernel_bessel(g: Graph, x0: int, x: int, tau: float, t: float, tol: float | None = None) -> HeatKernelValue:
    x = g.check_vertex(x)
    row, truncation, bound = heat_kernel_row(g, x0, tau, t, tol)
    logger.debug(f"[HEAT] Série de Bessel em {g!r}, τ={tau}, t={t}: N={truncation[0]}, J={truncation[1]}, cota {bound:.2e}")
    return HeatKernelValue(
        tau=tau,
        root=x0,
        target=x,
        value=float(row[x]),
        route="bessel",
        truncation=truncation,
        tail_bound=bound,
    )


def heat_kernel_spectral(g: Graph, x0: int, x: int, tau: float) -> HeatKernelValue:
    if tau < 0:
        raise ParameterDomain(f"τ deve ser >= 0 (recebido {tau})")
    spectrum = local_spectrum(g, x0, x)
    value = spectrum.integrate(lambda lam: np.exp(-tau * lam))
    return HeatKernelValue(tau=tau, root=spectrum.root, target=spectrum.target, value=value, route="spectral")


def heat_residual(g: Graph, x0: int, tau: float, h: float, *, route: HeatRoute = "bessel", t: float = 0.0) -> float:
    """
    max_x |∂_τ K(τ, x0, x) + (Δ_X K(τ, x0, ·))(x)|.

    Na rota bessel a derivada é diferença central de passo h; na espectral é a analítica.
    """
    if not tau > h > 0:
        raise ParameterDomain(f"heat_residual exige τ > h > 0 (recebido τ={tau}, h={h})")
    laplacian = operators(g).laplacian.astype(float)

    if route == "spectral":
        values = np.array([heat_kernel_spectral(g, x0, x, tau).value for x in range(g.vertex_count)])
        derivative = np.array(
            [
                local_spectrum(g, x0, x).integrate(lambda lam: -lam * np.exp(-tau * lam))
                for x in range(g.vertex_count)
            ]
        )
    else:
        # erro de truncagem dividido por 2h precisa ficar abaixo do resíduo
        tol = min(settings.BZK_HEAT_TOL, h**3)
        values, _, _ = heat_kernel_row(g, x0, tau, t, tol)
        forward, _, _ = heat_kernel_row(g, x0, tau + h, t, tol)
        backward, _, _ = heat_kernel_row(g, x0, tau - h, t, tol)
        derivative = (forward - backward) / (2 * h)

    residual = float(np.max(np.abs(derivative + laplacian @ values)))
    logger.debug(f"[HEAT] Resíduo da equação do calor ({route}) em {g!r}, τ={tau}: {residual:.2e}")
    return residual
