class ParameterDomain(ValueError):
    """t ou τ violam as hipóteses da série de Bessel (|t| < 1, (1-t)(q+t) > 0, τ >= 0)."""


class NonconvergentTail(ArithmeticError):
    """A cota de crescimento não é dominada pelo decaimento exponencial, ou a truncagem não fecha."""
