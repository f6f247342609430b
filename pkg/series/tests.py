import random
from fractions import Fraction

from django.test import SimpleTestCase

from series.algebra import (
    binomial_power,
    evaluate,
    series_add,
    series_exp,
    series_log,
    series_mul,
    series_scale,
    termwise_derivative,
    termwise_integrate,
)
from series.exceptions import BadConstantTerm, DimensionMismatch, OrderMismatch
from series.operators import OperatorPoly, OperatorSeries
from series.serialization import series_from_json, series_to_json
from series.tpoly import ONE, ONE_MINUS_T, T, ZERO, TPoly
from series.useries import USeries


def random_tpoly(rng: random.Random, degree: int = 3) -> TPoly:
    return TPoly(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(degree + 1))


def random_series(rng: random.Random, order: int, constant=None) -> USeries:
    coeffs = [random_tpoly(rng, 2) for _ in range(order + 1)]
    if constant is not None:
        coeffs[0] = TPoly.coerce(constant)
    return USeries(coeffs, order)


def random_operator_series(rng: random.Random, dim: int, order: int, constant_identity: bool) -> OperatorSeries:
    coeffs = []
    for k in range(order + 1):
        if k == 0:
            coeffs.append(OperatorPoly.identity(dim) if constant_identity else OperatorPoly.zero(dim))
            continue
        coeffs.append(OperatorPoly([[random_tpoly(rng, 1) for _ in range(dim)] for _ in range(dim)]))
    return OperatorSeries(coeffs, order, dim)


class TPolyTests(SimpleTestCase):
    def test_trailing_zeros_are_dropped(self):
        self.assertEqual(TPoly((1, 2, 0, 0)).coeffs, (1, 2))
        self.assertTrue(TPoly((0, 0)).is_zero())
        self.assertEqual(TPoly((0, 0)).degree, -1)

    def test_square_of_one_minus_t(self):
        self.assertEqual(ONE_MINUS_T**2, TPoly((1, -2, 1)))

    def test_ring_laws_on_random_triples(self):
        rng = random.Random(7)
        for _ in range(200):
            a, b, c = (random_tpoly(rng) for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * b, b * a)
            self.assertEqual(a + b, b + a)

    def test_evaluate_exact_and_float(self):
        poly = TPoly((0, 0, 2))
        self.assertEqual(poly.evaluate(Fraction(1, 2)), Fraction(1, 2))
        self.assertAlmostEqual(evaluate(poly, 0.5), 0.5)

    def test_string_form(self):
        self.assertEqual(str(TPoly((1, -1, 2))), "2*t^2 - t + 1")
        self.assertEqual(str(ZERO), "0")
        self.assertEqual(str(-T), "-t")


class USeriesTests(SimpleTestCase):
    def test_product_of_conjugates(self):
        a = USeries([1, 1], 3)
        b = USeries([1, -1], 3)
        self.assertEqual(series_mul(a, b), USeries([1, 0, -1], 3))

    def test_square_with_polynomial_coefficient(self):
        s = USeries([0, ONE_MINUS_T], 4)
        self.assertEqual(series_mul(s, s), USeries([0, 0, TPoly((1, -2, 1))], 4))

    def test_order_mismatch(self):
        with self.assertRaises(OrderMismatch):
            series_add(USeries.one(3), USeries.one(4))

    def test_ring_laws_on_random_triples(self):
        rng = random.Random(11)
        for _ in range(200):
            a, b, c = (random_series(rng, 4) for _ in range(3))
            self.assertEqual(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c)))
            self.assertEqual(series_mul(a, series_add(b, c)), series_add(series_mul(a, b), series_mul(a, c)))
            self.assertEqual(series_mul(a, b), series_mul(b, a))

    def test_truncation_coherence(self):
        rng = random.Random(3)
        for _ in range(20):
            a, b = random_series(rng, 6), random_series(rng, 6)
            self.assertEqual(series_mul(a, b).truncate(3), series_mul(a.truncate(3), b.truncate(3)))

    def test_log_of_one_minus_u(self):
        result = series_log(USeries([1, -1], 3))
        self.assertEqual(result, USeries([0, -1, Fraction(-1, 2), Fraction(-1, 3)], 3))

    def test_exp_of_u(self):
        self.assertEqual(series_exp(USeries([0, 1], 2)), USeries([1, 1, Fraction(1, 2)], 2))

    def test_exp_of_zero(self):
        self.assertEqual(series_exp(USeries.zero(5)), USeries.one(5))

    def test_exp_of_twice_log(self):
        s = USeries([1, -1], 6)
        self.assertEqual(series_exp(series_scale(series_log(s), 2)), USeries([1, -2, 1], 6))

    def test_bad_constant_terms(self):
        with self.assertRaises(BadConstantTerm):
            series_log(USeries([2, 1], 3))
        with self.assertRaises(BadConstantTerm):
            series_exp(USeries([1, 1], 3))

    def test_exp_log_round_trip_random(self):
        rng = random.Random(5)
        for _ in range(20):
            s = random_series(rng, 6, constant=1)
            self.assertEqual(series_exp(series_log(s)), s)

    def test_binomial_half_power(self):
        result = binomial_power(USeries([1, 0, -1], 4), Fraction(-1, 2))
        self.assertEqual(result, USeries([1, 0, Fraction(1, 2), 0, Fraction(3, 8)], 4))

    def test_binomial_zero_exponent(self):
        rng = random.Random(1)
        self.assertEqual(binomial_power(random_series(rng, 5, constant=1), 0), USeries.one(5))

    def test_binomial_integer_matches_repeated_product(self):
        rng = random.Random(9)
        for _ in range(10):
            s = random_series(rng, 5, constant=1)
            self.assertEqual(binomial_power(s, 2), series_mul(s, s))
            self.assertEqual(binomial_power(s, 3), s**3)

    def test_binomial_exponent_law(self):
        rng = random.Random(13)
        for _ in range(10):
            s = random_series(rng, 5, constant=1)
            a = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            b = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            self.assertEqual(binomial_power(s, a + b), series_mul(binomial_power(s, a), binomial_power(s, b)))

    def test_integrate(self):
        self.assertEqual(termwise_integrate(USeries.one(3)), USeries([0, 1], 3))
        self.assertEqual(termwise_integrate(USeries([0, 0, 3], 4)), USeries([0, 0, 0, 1], 4))

    def test_derivative_of_integral(self):
        rng = random.Random(17)
        s = random_series(rng, 6)
        round_trip = termwise_derivative(termwise_integrate(s))
        self.assertEqual(round_trip.truncate(5), s.truncate(5))

    def test_inverse(self):
        s = USeries([1, 0, -ONE_MINUS_T], 6)
        self.assertEqual(series_mul(s, s.inverse()), USeries.one(6))

    def test_evaluate(self):
        self.assertAlmostEqual(evaluate(USeries([1, 0, -1], 4), 0.0, 0.25), 0.9375)

    def test_evaluate_commutes_with_product(self):
        rng = random.Random(19)
        for _ in range(50):
            a, b = random_series(rng, 5), random_series(rng, 5)
            t, u = rng.uniform(-1, 1), rng.uniform(-0.3, 0.3)
            # a*b truncado difere do produto de valores só em termos u^k, k > 5
            full_a = USeries(a.coeffs, 10)
            full_b = USeries(b.coeffs, 10)
            expected = evaluate(full_a, t, u) * evaluate(full_b, t, u)
            got = evaluate(series_mul(full_a, full_b), t, u)
            self.assertLessEqual(abs(got - expected), 1e-12 * max(1.0, abs(expected)))

    def test_json_format(self):
        s = USeries([1, Fraction(-1, 2), TPoly((0, 3))], 2)
        data = series_to_json(s)
        self.assertEqual(data, [["1/1"], ["-1/2"], ["0/1", "3/1"]])
        self.assertEqual(series_from_json(data), s)


class OperatorSeriesTests(SimpleTestCase):
    def test_identity_is_neutral(self):
        rng = random.Random(23)
        s = random_operator_series(rng, 3, 4, constant_identity=False)
        self.assertEqual(series_mul(OperatorSeries.identity(3, 4), s), s)
        self.assertEqual(series_mul(s, OperatorSeries.identity(3, 4)), s)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            series_mul(OperatorSeries.identity(2, 3), OperatorSeries.identity(3, 3))

    def test_log_of_identity(self):
        self.assertEqual(series_log(OperatorSeries.identity(3, 5)), OperatorSeries.zero(3, 5))

    def test_exp_log_round_trip_random(self):
        rng = random.Random(29)
        s = random_operator_series(rng, 3, 6, constant_identity=True)
        self.assertEqual(series_exp(series_log(s)), s)

    def test_entry_view(self):
        a = OperatorPoly([[0, 1], [1, 0]])
        s = OperatorSeries.from_terms({1: a}, 2, 2)
        product = series_mul(s, s)
        self.assertEqual(product.entry(0, 0), USeries([0, 0, 1], 2))
        self.assertEqual(product.entry(0, 1), USeries.zero(2))

    def test_operator_poly_scaling_helpers(self):
        a = OperatorPoly([[0, 1], [1, 0]])
        factors = [T, ONE]
        self.assertEqual(a.scale_columns(factors), a @ OperatorPoly.diagonal(factors))
        self.assertEqual(a.scale_rows(factors), OperatorPoly.diagonal(factors) @ a)
