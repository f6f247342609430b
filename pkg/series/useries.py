from fractions import Fraction

from series.exceptions import BadConstantTerm, OrderMismatch
from series.tpoly import ONE, ZERO, TPoly


class USeries:
    """
    Série de potências em u truncada em ordem M, com coeficientes TPoly.

    coeffs[k] é o coeficiente de u^k, para k = 0..M (sempre M + 1 entradas).
    Toda operação entre duas séries exige a mesma ordem.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int):
        if order < 0:
            raise ValueError(f"Ordem de truncamento negativa: {order}")
        values = [TPoly.coerce(c) for c in list(coeffs)[: order + 1]]
        values.extend([ZERO] * (order + 1 - len(values)))
        self.order = order
        self.coeffs: tuple[TPoly, ...] = tuple(values)

    @classmethod
    def zero(cls, order: int) -> "USeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "USeries":
        return cls((ONE,), order)

    @classmethod
    def from_terms(cls, terms: dict[int, object], order: int) -> "USeries":
        """Monta a série a partir de {potência de u: coeficiente}; potências > M são descartadas."""
        coeffs = [ZERO] * (order + 1)
        for power, value in terms.items():
            if power < 0:
                raise ValueError(f"Potência negativa de u: {power}")
            if power <= order:
                coeffs[power] = coeffs[power] + TPoly.coerce(value)
        return cls(coeffs, order)

    def _check(self, other: "USeries"):
        if self.order != other.order:
            raise OrderMismatch(f"Ordens diferentes: {self.order} e {other.order}")

    def coefficient(self, power: int) -> TPoly:
        if 0 <= power <= self.order:
            return self.coeffs[power]
        return ZERO

    @property
    def constant_term(self) -> TPoly:
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    # --- aritmética ---

    def __add__(self, other):
        if isinstance(other, USeries):
            self._check(other)
            return USeries((a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)
        if isinstance(other, (TPoly, int, Fraction)):
            return USeries((self.coeffs[0] + other,) + self.coeffs[1:], self.order)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return USeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        if isinstance(other, (USeries, TPoly, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (TPoly, int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (TPoly, int, Fraction)):
            return USeries((c * other for c in self.coeffs), self.order)
        if not isinstance(other, USeries):
            return NotImplemented
        self._check(other)
        order = self.order
        out = [ZERO] * (order + 1)
        right = [(j, c) for j, c in enumerate(other.coeffs) if c]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in right:
                if i + j > order:
                    break
                out[i + j] = out[i + j] + a * b
        return USeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = USeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    # --- operações estruturais ---

    def shift(self, power: int) -> "USeries":
        """Multiplica por u^power, truncando na mesma ordem."""
        if power < 0:
            raise ValueError(f"Deslocamento negativo: {power}")
        return USeries((ZERO,) * power + self.coeffs, self.order)

    def truncate(self, order: int) -> "USeries":
        if order > self.order:
            raise OrderMismatch(f"Não é possível estender a série de ordem {self.order} para {order}")
        return USeries(self.coeffs, order)

    def substitute_t(self, value) -> "USeries":
        """Substitui t por um racional exato; coeficientes viram constantes."""
        return USeries((TPoly.constant(c.evaluate(Fraction(value))) for c in self.coeffs), self.order)

    def inverse(self) -> "USeries":
        """Inversa multiplicativa; o termo constante precisa ser uma constante não nula."""
        c0 = self.coeffs[0]
        if not c0.is_constant() or c0.is_zero():
            raise BadConstantTerm(f"Série não invertível: termo constante {c0}")
        inv_c0 = Fraction(1) / c0.coefficient(0)
        out = [TPoly.constant(inv_c0)]
        for k in range(1, self.order + 1):
            acc = ZERO
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    acc = acc + self.coeffs[j] * out[k - j]
            out.append(acc * (-inv_c0))
        return USeries(out, self.order)

    def evaluate(self, t, u):
        """Horner em u com cada coeficiente avaliado em t."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * u + c.evaluate(t)
        return result

    def __repr__(self):
        terms = [f"({c})*u^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"USeries[{self.order}](" + (" + ".join(terms) or "0") + ")"
