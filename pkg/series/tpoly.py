from fractions import Fraction
from itertools import zip_longest
from typing import Union

Rational = Union[int, Fraction]


def _normalize(value) -> Rational:
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"Coeficiente não racional: {value!r}")


class TPoly:
    """
    Polinômio em t com coeficientes racionais exatos (int ou Fraction).

    coeffs[k] é o coeficiente de t^k; zeros finais são removidos,
    então o polinômio nulo tem coeffs == ().
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        values = [_normalize(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: tuple[Rational, ...] = tuple(values)

    @classmethod
    def constant(cls, value) -> "TPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, power: int, value=1) -> "TPoly":
        if power < 0:
            raise ValueError(f"Expoente negativo em t: {power}")
        return cls((0,) * power + (value,))

    @classmethod
    def coerce(cls, value) -> "TPoly":
        if isinstance(value, TPoly):
            return value
        return cls.constant(value)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, power: int) -> Rational:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    # --- aritmética ---

    def __add__(self, other):
        if not isinstance(other, TPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = TPoly.constant(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        return TPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, (TPoly, int, Fraction)):
            return NotImplemented
        return self + (-TPoly.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return TPoly.constant(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0 or not self.coeffs:
                return TPoly()
            return TPoly(c * other for c in self.coeffs)
        if not isinstance(other, TPoly):
            return NotImplemented
        left, right = self.coeffs, other.coeffs
        if not left or not right:
            return TPoly()
        if len(right) == 1:
            return self * right[0]
        if len(left) == 1:
            return other * left[0]
        out = [0] * (len(left) + len(right) - 1)
        for i, a in enumerate(left):
            if a == 0:
                continue
            for j, b in enumerate(right):
                out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = TPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other):
        # Só divisão por escalar racional.
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("Divisão de TPoly por zero")
        return TPoly(Fraction(c) / other for c in self.coeffs)

    # --- comparação ---

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly.constant(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # --- avaliação / texto ---

    def evaluate(self, t):
        """Horner; com t Fraction o resultado é exato, com float é float."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * t + c
        return result

    def __call__(self, t):
        return self.evaluate(t)

    def __float__(self):
        if len(self.coeffs) > 1:
            raise TypeError(f"TPoly não constante não pode virar float: {self}")
        return float(self.coefficient(0))

    def __repr__(self):
        return f"TPoly({list(map(str, self.coeffs))})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = -c if c < 0 else c
            if power == 0:
                body = str(magnitude)
            else:
                monomial = "t" if power == 1 else f"t^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


ZERO = TPoly()
ONE = TPoly.constant(1)
T = TPoly.monomial(1)
ONE_MINUS_T = ONE - T
