from fractions import Fraction

import numpy as np

from series.exceptions import DimensionMismatch, OrderMismatch
from series.tpoly import ONE, ZERO, TPoly
from series.useries import USeries


class OperatorPoly:
    """
    Matriz quadrada densa de TPoly (operador sobre os vértices de um grafo).

    Convenção de índices: entry(x0, x) é a linha x0, coluna x.
    `@` é o produto matricial; `*` multiplica por escalar ou TPoly.
    """

    __slots__ = ("dim", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(TPoly.coerce(value) for value in row) for row in rows)
        dim = len(rows)
        if any(len(row) != dim for row in rows):
            raise DimensionMismatch("OperatorPoly precisa ser quadrada")
        self.dim = dim
        self.rows: tuple[tuple[TPoly, ...], ...] = rows

    @classmethod
    def zero(cls, dim: int) -> "OperatorPoly":
        return cls([[ZERO] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> "OperatorPoly":
        return cls.diagonal([ONE] * dim)

    @classmethod
    def diagonal(cls, values) -> "OperatorPoly":
        values = [TPoly.coerce(v) for v in values]
        dim = len(values)
        return cls([[values[i] if i == j else ZERO for j in range(dim)] for i in range(dim)])

    @classmethod
    def from_array(cls, array) -> "OperatorPoly":
        """Converte matriz inteira (numpy ou listas) em operador constante."""
        matrix = np.asarray(array)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatch(f"Matriz não quadrada: shape {matrix.shape}")
        return cls([[TPoly.constant(int(v)) for v in row] for row in matrix.tolist()])

    def _check(self, other: "OperatorPoly"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"Dimensões diferentes: {self.dim} e {other.dim}")

    def entry(self, row: int, column: int) -> TPoly:
        return self.rows[row][column]

    def diagonal_entries(self) -> tuple[TPoly, ...]:
        return tuple(self.rows[i][i] for i in range(self.dim))

    def trace(self) -> TPoly:
        total = ZERO
        for value in self.diagonal_entries():
            total = total + value
        return total

    def is_zero(self) -> bool:
        return all(not value for row in self.rows for value in row)

    def transpose(self) -> "OperatorPoly":
        return OperatorPoly(zip(*self.rows))

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i] for i in range(self.dim) for j in range(i))

    def __add__(self, other):
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        self._check(other)
        return OperatorPoly(
            [a + b for a, b in zip(row_a, row_b)] for row_a, row_b in zip(self.rows, other.rows)
        )

    def __neg__(self):
        return OperatorPoly([-value for value in row] for row in self.rows)

    def __sub__(self, other):
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (TPoly, int, Fraction)):
            return OperatorPoly([value * other for value in row] for row in self.rows)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        self._check(other)
        dim = self.dim
        right = [[(j, v) for j, v in enumerate(row) if v] for row in other.rows]
        out = []
        for row in self.rows:
            acc = [ZERO] * dim
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in right[k]:
                    acc[j] = acc[j] + a * b
            out.append(acc)
        return OperatorPoly(out)

    def scale_rows(self, factors) -> "OperatorPoly":
        """diag(factors) @ self, sem montar a diagonal."""
        factors = [TPoly.coerce(f) for f in factors]
        return OperatorPoly([value * f for value in row] for row, f in zip(self.rows, factors))

    def scale_columns(self, factors) -> "OperatorPoly":
        """self @ diag(factors)."""
        factors = [TPoly.coerce(f) for f in factors]
        return OperatorPoly([value * f for value, f in zip(row, factors)] for row in self.rows)

    def evaluate(self, t) -> np.ndarray:
        return np.array([[value.evaluate(t) for value in row] for row in self.rows], dtype=float)

    def __eq__(self, other):
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"OperatorPoly(dim={self.dim})"


class OperatorSeries:
    """
    Série em u com coeficientes OperatorPoly, truncada em ordem M.

    Guardada por potência de u (coeffs[k] é o operador coeficiente de u^k);
    entry(x0, x) devolve a USeries daquela entrada.
    """

    __slots__ = ("dim", "order", "coeffs")

    def __init__(self, coeffs, order: int, dim: int):
        values = list(coeffs)[: order + 1]
        for value in values:
            if value.dim != dim:
                raise DimensionMismatch(f"Coeficiente de dimensão {value.dim}, esperado {dim}")
        values.extend(OperatorPoly.zero(dim) for _ in range(order + 1 - len(values)))
        self.dim = dim
        self.order = order
        self.coeffs: tuple[OperatorPoly, ...] = tuple(values)

    @classmethod
    def zero(cls, dim: int, order: int) -> "OperatorSeries":
        return cls((), order, dim)

    @classmethod
    def identity(cls, dim: int, order: int) -> "OperatorSeries":
        return cls((OperatorPoly.identity(dim),), order, dim)

    @classmethod
    def from_terms(cls, terms: dict[int, OperatorPoly], order: int, dim: int) -> "OperatorSeries":
        coeffs = [OperatorPoly.zero(dim) for _ in range(order + 1)]
        for power, value in terms.items():
            if power <= order:
                coeffs[power] = coeffs[power] + value
        return cls(coeffs, order, dim)

    def _check(self, other: "OperatorSeries"):
        if self.order != other.order:
            raise OrderMismatch(f"Ordens diferentes: {self.order} e {other.order}")
        if self.dim != other.dim:
            raise DimensionMismatch(f"Dimensões diferentes: {self.dim} e {other.dim}")

    @property
    def constant_term(self) -> OperatorPoly:
        return self.coeffs[0]

    def entry(self, row: int, column: int) -> USeries:
        return USeries((c.entry(row, column) for c in self.coeffs), self.order)

    def trace(self) -> USeries:
        return USeries((c.trace() for c in self.coeffs), self.order)

    def __add__(self, other):
        if not isinstance(other, OperatorSeries):
            return NotImplemented
        self._check(other)
        return OperatorSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), self.order, self.dim)

    def __neg__(self):
        return OperatorSeries((-c for c in self.coeffs), self.order, self.dim)

    def __sub__(self, other):
        if not isinstance(other, OperatorSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (TPoly, int, Fraction)):
            return OperatorSeries((c * other for c in self.coeffs), self.order, self.dim)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, OperatorSeries):
            return NotImplemented
        self._check(other)
        order = self.order
        left = [(i, c) for i, c in enumerate(self.coeffs) if not c.is_zero()]
        right = [(j, c) for j, c in enumerate(other.coeffs) if not c.is_zero()]
        out = [OperatorPoly.zero(self.dim) for _ in range(order + 1)]
        for i, a in left:
            for j, b in right:
                if i + j > order:
                    break
                out[i + j] = out[i + j] + a @ b
        return OperatorSeries(out, order, self.dim)

    def __eq__(self, other):
        if not isinstance(other, OperatorSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"OperatorSeries(dim={self.dim}, order={self.order})"
