from dataclasses import dataclass

from django.conf import settings


@dataclass(frozen=True)
class BesselEval:
    order: int
    argument: float
    value: float
    terms_used: int
    tail_bound: float


def bessel_i(n: int, tau: float, tol: float | None = None) -> BesselEval:
    """
    I_n(τ) = Σ_m (τ/2)^{n+2m} / (m! (m+n)!) pela série de potências.

    Para quando o próximo termo dividido por (1 - ρ) fica abaixo de `tol`,
    ρ sendo a razão entre termos consecutivos dali em diante (decrescente em m).
    """
    tol = settings.BZK_BESSEL_TOL if tol is None else tol
    if tau < 0:
        raise ValueError(f"bessel_i exige τ >= 0 (recebido {tau})")
    if tol <= 0:
        raise ValueError(f"Tolerância deve ser positiva (recebido {tol})")
    n = abs(n)
    if tau == 0:
        return BesselEval(order=n, argument=tau, value=1.0 if n == 0 else 0.0, terms_used=1, tail_bound=0.0)

    half = tau / 2
    term = 1.0
    for k in range(1, n + 1):
        term *= half / k

    total, m = 0.0, 0
    while True:
        total += term
        following = term * half * half / ((m + 1) * (m + 1 + n))
        rho = half * half / ((m + 2) * (m + 2 + n))
        if following == 0.0:
            tail = 0.0
            break
        if rho < 1:
            tail = following / (1 - rho)
            if tail < tol:
                break
        term = following
        m += 1
    return BesselEval(order=n, argument=tau, value=total, terms_used=m + 1, tail_bound=tail)
