"""
Operações da álgebra de séries truncadas (escalares e operadores).

As funções aceitam USeries ou OperatorSeries e devolvem o mesmo tipo;
todo o cálculo é exato, módulo u^{M+1}.
"""

from fractions import Fraction
from typing import TypeVar, Union

from series.exceptions import BadConstantTerm, DimensionMismatch, OrderMismatch
from series.operators import OperatorPoly, OperatorSeries
from series.tpoly import ONE, ZERO, TPoly
from series.useries import USeries

Series = TypeVar("Series", USeries, OperatorSeries)
Scalar = Union[int, Fraction, TPoly]


def _check_pair(a, b):
    if type(a) is not type(b):
        raise TypeError(f"Tipos incompatíveis: {type(a).__name__} e {type(b).__name__}")
    if a.order != b.order:
        raise OrderMismatch(f"Ordens diferentes: {a.order} e {b.order}")
    if isinstance(a, OperatorSeries) and a.dim != b.dim:
        raise DimensionMismatch(f"Dimensões diferentes: {a.dim} e {b.dim}")


def series_add(a: Series, b: Series) -> Series:
    _check_pair(a, b)
    return a + b


def series_mul(a: Series, b: Series) -> Series:
    _check_pair(a, b)
    if isinstance(a, OperatorSeries):
        return a @ b
    return a * b


def series_scale(a: Series, factor: Scalar) -> Series:
    return a * factor


def _identity_like(s):
    if isinstance(s, OperatorSeries):
        return OperatorSeries.identity(s.dim, s.order)
    return USeries.one(s.order)


def _has_unit_constant(s) -> bool:
    if isinstance(s, OperatorSeries):
        return s.constant_term == OperatorPoly.identity(s.dim)
    return s.constant_term == ONE


def _has_zero_constant(s) -> bool:
    if isinstance(s, OperatorSeries):
        return s.constant_term.is_zero()
    return s.constant_term.is_zero()


def series_log(s: Series) -> Series:
    """log(1 + h) = Σ (-1)^{k+1} h^k / k, com h = s - 1 (ou s - I)."""
    if not _has_unit_constant(s):
        raise BadConstantTerm("log exige termo constante 1 (ou a identidade)")
    if isinstance(s, USeries):
        return _scalar_log(s)
    h = s - _identity_like(s)
    result = OperatorSeries.zero(s.dim, s.order)
    power = h
    # h tem termo constante nulo, então h^k começa em u^k.
    for k in range(1, s.order + 1):
        sign = 1 if k % 2 else -1
        result = result + power * Fraction(sign, k)
        power = power @ h
    return result


def series_exp(s: Series) -> Series:
    """exp(h) = Σ h^k / k!, com termo constante de h nulo."""
    if not _has_zero_constant(s):
        raise BadConstantTerm("exp exige termo constante 0")
    if isinstance(s, USeries):
        return _scalar_exp(s)
    result = _identity_like(s)
    power = _identity_like(s)
    factorial = 1
    for k in range(1, s.order + 1):
        power = power @ s
        factorial *= k
        result = result + power * Fraction(1, factorial)
    return result


def _scalar_exp(s: USeries) -> USeries:
    # E' = S' E  =>  k E_k = Σ_{j=1}^{k} j S_j E_{k-j}
    coeffs = [ONE]
    for k in range(1, s.order + 1):
        acc = ZERO
        for j in range(1, k + 1):
            if s.coeffs[j]:
                acc = acc + s.coeffs[j] * coeffs[k - j] * j
        coeffs.append(acc * Fraction(1, k))
    return USeries(coeffs, s.order)


def _scalar_log(s: USeries) -> USeries:
    # s' = L' s  =>  k L_k = k s_k - Σ_{j=1}^{k-1} j L_j s_{k-j}
    coeffs = [ZERO]
    for k in range(1, s.order + 1):
        acc = ZERO
        for j in range(1, k):
            if coeffs[j] and s.coeffs[k - j]:
                acc = acc + coeffs[j] * s.coeffs[k - j] * j
        coeffs.append(s.coeffs[k] - acc * Fraction(1, k))
    return USeries(coeffs, s.order)


def binomial_power(s: USeries, exponent) -> USeries:
    """s^exponent = exp(exponent · log s), expoente racional."""
    exponent = Fraction(exponent)
    if s.constant_term != ONE:
        raise BadConstantTerm("binomial_power exige termo constante 1")
    if exponent == 0:
        return USeries.one(s.order)
    return series_exp(series_log(s) * exponent)


def termwise_integrate(s: USeries) -> USeries:
    """∫_0^u s(z) dz na mesma ordem; o coeficiente de u^M de s é descartado."""
    coeffs = [ZERO] + [c * Fraction(1, k + 1) for k, c in enumerate(s.coeffs[:-1])]
    return USeries(coeffs, s.order)


def termwise_derivative(s: USeries) -> USeries:
    """d/du termo a termo; o coeficiente de u^M do resultado fica zero."""
    coeffs = [c * k for k, c in enumerate(s.coeffs) if k > 0]
    return USeries(coeffs, s.order)


def evaluate(s: Union[USeries, TPoly], t: float, u: float = 0.0) -> float:
    """Avaliação de Horner em precisão dupla."""
    if isinstance(s, TPoly):
        return float(s.evaluate(float(t)))
    return float(s.evaluate(float(t), float(u)))
