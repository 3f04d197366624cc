# Copyright 2020 The Dumont Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Lint as: python3
"""Tests for dumont.series.power_series."""

import fractions

from absl.testing import absltest
from dumont.series import power_series
from dumont.series import test_utils

Fraction = fractions.Fraction
QTPolynomial = power_series.QTPolynomial
TruncatedSeries = power_series.TruncatedSeries


class QTPolynomialTest(absltest.TestCase):

  def test_arithmetic(self):
    q, t = QTPolynomial.q(), QTPolynomial.t()
    self.assertEqual(QTPolynomial({(1, 0): 1, (0, 2): 1}), q + t * t)
    self.assertEqual(0, q - q)
    self.assertEqual(QTPolynomial.monomial(2, 1, 3), 3 * q * q * t)
    self.assertEqual(QTPolynomial({(0, 0): 1, (1, 0): 2, (2, 0): 1}),
                     (1 + q) * (1 + q))
    self.assertEqual(1, (q * t) / (q * t))
    self.assertEqual(Fraction(1, 2), 1 / (2 * q) * q)

  def test_format(self):
    q, t = QTPolynomial.q(), QTPolynomial.t()
    self.assertEqual("1 + q", str(1 + q))
    self.assertEqual("2*q^2*t", str(2 * q * q * t))
    self.assertEqual("t^2 - q", str(t * t - q))
    self.assertEqual("0", str(q - q))

  def test_substitute_and_map(self):
    q, t = QTPolynomial.q(), QTPolynomial.t()
    poly = 1 + 2 * q + q * t
    self.assertEqual(7, poly.substitute(q=2, t=1))
    self.assertEqual(4, poly.substitute())
    flipped = poly.map_exponents(lambda i, j: (1 - i, j))
    self.assertEqual(q + 2 + t, flipped)
    with self.assertRaisesRegex(ValueError, "not injective"):
      poly.map_exponents(lambda i, j: (0, 0))

  def test_errors(self):
    q = QTPolynomial.q()
    with self.assertRaisesRegex(ValueError, "Only monomials are invertible"):
      (1 + q).inverse()
    with self.assertRaises(ZeroDivisionError):
      q / 0
    with self.assertRaisesRegex(ValueError, "q,t-polynomial coefficient"):
      QTPolynomial.lift(0.5)


class TruncatedSeriesTest(test_utils.BaseSeriesTest):

  def test_geometric(self):
    self.assertSeriesEqual([1] * 6, (1 - TruncatedSeries.x(5)).invert())
    self.assertSeriesEqual([1, 2, 4, 8], TruncatedSeries.geometric(3, 2))

  def test_sqrt(self):
    x = TruncatedSeries.x(4)
    self.assertSeriesEqual([1, -2, -2, -4, -10], (1 - 4 * x).sqrt())
    with self.assertRaisesRegex(ValueError, "constant term 1"):
      (2 + x).sqrt()

  def test_product_and_power(self):
    x = TruncatedSeries.x(4)
    self.assertSeriesEqual([1, 3, 3, 1, 0], (1 + x) ** 3)
    self.assertSeriesEqual([1, -1, 1, -1, 1], (1 + x) ** -1)
    self.assertSeriesEqual([1, Fraction(1, 2)], (2 + x) / 2)

  def test_order_truncates_to_smaller(self):
    a = TruncatedSeries.geometric(6)
    b = TruncatedSeries.geometric(3)
    self.assertEqual(3, (a + b).order)
    self.assertEqual(3, (a * b).order)
    self.assertEqual(a, b)

  def test_compose(self):
    x = TruncatedSeries.x(1)
    catalan = TruncatedSeries([1, 1, 2, 5], 3)
    inner = x * (1 - x * x).invert() ** 2
    self.assertSeriesEqual([1, 1], catalan.compose(inner))
    x = TruncatedSeries.x(3)
    self.assertSeriesEqual([1, 1, 2, 5],
                           TruncatedSeries([1, 1, 2, 5]).compose(x))
    with self.assertRaisesRegex(ValueError, "zero constant term"):
      catalan.compose(1 + x)

  def test_shifts(self):
    series = TruncatedSeries([1, 2, 3])
    self.assertSeriesEqual([0, 0, 1, 2, 3], series.shift(2))
    self.assertSeriesEqual([2, 3], (series - 1).divide_x())
    self.assertSeriesEqual([1, 4, 12], series.scale_x(2))
    with self.assertRaisesRegex(ValueError, "Cannot divide by x"):
      series.divide_x()

  def test_coefficient_errors(self):
    series = TruncatedSeries([1, 2, 3])
    self.assertEqual(3, series[2])
    with self.assertRaisesRegex(ValueError, "beyond the truncation order 2"):
      series.coefficient(3)
    with self.assertRaisesRegex(ValueError, "not invertible"):
      TruncatedSeries([0, 1]).invert()
    with self.assertRaisesRegex(ValueError, "not an integer"):
      TruncatedSeries([1, Fraction(1, 3)]).as_integers()

  def test_qt_coefficients(self):
    q = QTPolynomial.q()
    x = TruncatedSeries.x(3)
    series = (1 - q * x).invert()
    self.assertEqual(q * q * q, series[3])
    self.assertEqual("1, q, q^2, q^3", str(series))

  def test_evaluate_and_format(self):
    series = TruncatedSeries([1, 1, 2, 5])
    self.assertAlmostEqual(1 + 0.1 + 0.02 + 0.005, series.evaluate(0.1))
    self.assertEqual("1, 1, 2, 5", str(series))
    self.assertEqual([1, 1, 2, 5], series.as_integers())

  def test_solve_fixpoint(self):
    x = TruncatedSeries.x(5)
    catalan = power_series.solve_fixpoint(lambda c: 1 + x * c * c, 5)
    self.assertSeriesEqual([1, 1, 2, 5, 14, 42], catalan)


if __name__ == "__main__":
  absltest.main()
