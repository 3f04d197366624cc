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
"""Tests for dumont.series.generating_functions."""

import collections
import fractions

from absl.testing import absltest
from dumont.combinat import dumont_perms
from dumont.combinat import objects
from dumont.combinat import permutations
from dumont.series import generating_functions as gf
from dumont.series import power_series
from dumont.series import test_utils

Fraction = fractions.Fraction
QTPolynomial = power_series.QTPolynomial
TruncatedSeries = power_series.TruncatedSeries


def _brute_qt(perms, q_stat, t_stat):
  terms = collections.Counter()
  for perm in perms:
    stats = permutations.statistics(perm)
    terms[(getattr(stats, q_stat), getattr(stats, t_stat))] += 1
  return QTPolynomial(terms)


class ClassicalSeriesTest(test_utils.BaseSeriesTest):

  def test_catalan_and_schroder(self):
    self.assertSeriesEqual([1, 1, 2, 5, 14, 42], gf.catalan_series(5))
    self.assertSeriesEqual([1, 1, 3, 11, 45], gf.schroder_s(4))
    self.assertEqual(
        [gf.catalan_number(n) for n in range(8)],
        gf.catalan_series(7).as_integers())

  def test_schroder_satisfies_its_quadratic(self):
    x = TruncatedSeries.x(8)
    s = gf.schroder_s(8)
    self.assertSeriesEqual([0] * 9, 2 * x * s * s - (1 + x) * s + 1)

  def test_little_schroder_recurrence(self):
    s = gf.schroder_s(7)
    self.assertEqual(s.as_integers(),
                     [gf.little_schroder(n) for n in range(1, 9)])
    with self.assertRaisesRegex(ValueError, "start at s_1"):
      gf.little_schroder(0)

  def test_large_schroder(self):
    self.assertEqual([1, 2, 6, 22, 90],
                     [gf.large_schroder(n) for n in range(5)])
    for n in range(1, 8):
      self.assertEqual(2 * gf.little_schroder(n + 1), gf.large_schroder(n))

  def test_ternary(self):
    self.assertSeriesEqual([1, 1, 3, 12, 55], gf.ternary_f(4))

  def test_board_sequences(self):
    expected = [1, 1, 1, 2, 3, 7, 12]
    self.assertEqual(expected, [gf.a_seq(n) for n in range(7)])
    self.assertEqual(expected, [gf.b_seq(n) for n in range(7)])
    self.assertSeriesEqual(expected, gf.a_series(6))
    for n in range(14):
      self.assertEqual(gf.a_seq(n), gf.b_seq(n))
      self.assertEqual(gf.a_seq(n), objects.count_ne_paths(n))

  def test_auxiliary_sequences(self):
    self.assertEqual([1, 1, 3, 13, 67],
                     [gf.generalized_catalan_C2(n) for n in range(5)])
    self.assertEqual([1, 1, 3, 11, 39],
                     [gf.pair_b(n) for n in range(5)])
    self.assertEqual([1, 1, 2, 4, 8],
                     [gf.powers_of_two_shift(n) for n in range(5)])

  def test_print_series(self):
    catalan = gf.catalan_series(5)
    self.assertEqual("1, 1, 2, 5, 14, 42", gf.print_series(catalan))
    self.assertEqual("1, 1, 2", gf.print_series(catalan, order=2))


class JointSeriesTest(test_utils.BaseSeriesTest):

  def test_first_coefficients(self):
    q, t = QTPolynomial.q(), QTPolynomial.t()
    a = gf.A_qtx(3)
    self.assertEqual(1, a[0])
    self.assertEqual(t, a[1])
    self.assertEqual(q + t * t, a[2])

  def test_closed_form_matches_fixpoint(self):
    self.assertEqual(gf.A_qtx(6), gf.A_qtx_closed_form(6))

  def test_specializes_to_catalan(self):
    a = gf.A_qtx(6)
    self.assertEqual([gf.catalan_number(n) for n in range(7)],
                     [QTPolynomial.lift(a[n]).substitute() for n in range(7)])

  def test_fix_and_two_cycles_match_brute_force(self):
    a = gf.A_qtx(5)
    for n in range(6):
      members = dumont_perms.members(dumont_perms.SECOND, n, ["3142"])
      self.assertEqual(_brute_qt(members, "fix", "two_cycles"), a[n],
                       msg="n=%d" % n)

  def test_companion_matches_e_permutations(self):
    b = gf.B_qtx(6)
    for n in range(7):
      self.assertEqual(_brute_qt(objects.enumerate_E(n), "def_", "fix_minus1"),
                       b[n], msg="n=%d" % n)

  def test_lis_bounded(self):
    self.assertSeriesEqual([1, 0, 0], gf.L_k_series(0, 2))
    self.assertSeriesEqual([1, 1, 0, 0], gf.L_k_series(1, 3))
    self.assertSeriesEqual([1, 1, 2, 2, 2], gf.L_k_series(2, 4))
    self.assertSeriesEqual([0, 0, 0], gf.L_k_series(-1, 2))
    self.assertEqual(gf.catalan_series(6), gf.L_k_series(8, 6))
    with self.assertRaisesRegex(ValueError, "k >= -1"):
      gf.L_k_series(-2, 3)


class ChebyshevTest(absltest.TestCase):

  def test_polynomials(self):
    self.assertEqual((), gf.chebyshev_U(-1))
    self.assertEqual((-1,), gf.chebyshev_U(-2))
    self.assertEqual((1,), gf.chebyshev_U(0))
    self.assertEqual((0, 2), gf.chebyshev_U(1))
    self.assertEqual((-1, 0, 4), gf.chebyshev_U(2))
    self.assertEqual((0, -4, 0, 8), gf.chebyshev_U(3))

  def test_quotient_matches_iteration(self):
    for m in range(8):
      self.assertAlmostEqual(gf.lemma_iteration(m, 1.1, 0.1, 1.0),
                             gf.chebyshev_quotient(m, 1.1, 0.1, 1.0))
      self.assertAlmostEqual(gf.lemma_iteration(m, 2.0, 0.5, 0.3),
                             gf.chebyshev_quotient(m, 2.0, 0.5, 0.3))

  def test_decreasing_b_patterns(self):
    for k in range(5):
      series = gf.B_tau(gf.decreasing_pattern(k + 2), 60)
      self.assertAlmostEqual(series.evaluate(0.05),
                             gf.cba_closed_form(k, 0.05), places=9)

  def test_domain(self):
    with self.assertRaisesRegex(ValueError, r"\(0, 1/8\)"):
      gf.cba_closed_form(1, 0.2)
    with self.assertRaisesRegex(ValueError, "k must be >= 0"):
      gf.cba_closed_form(-1, 0.05)


class PatternSeriesTest(test_utils.BaseSeriesTest):

  def test_a_examples(self):
    self.assertSeriesEqual([1, 1, 3, 4, 4, 4], gf.A_tau("123", 5))
    self.assertEqual(gf.catalan_series(7), gf.A_tau("132", 7))
    self.assertEqual(gf.catalan_series(7), gf.A_tau("2143", 7))
    self.assertSeriesEqual([1, 1, 3, 11, 40], gf.A_tau("13245", 4))
    self.assertEqual(gf.schroder_s(6), gf.A_tau("1342", 6))
    self.assertSeriesEqual([1, 1, 3, 9], gf.A_tau("4132", 3))

  def test_a_agrees_with_printed_forms(self):
    for tau in ("1243", "1324", "1342", "1423", "1432", "2134", "2143"):
      self.assertEqual(gf.printed_form("A", tau, 8), gf.A_tau(tau, 8),
                       msg=tau)

  def test_a_printed_1234_is_off(self):
    self.assertEqual(0, gf.printed_form("A", "1234", 4)[1])
    self.assertEqual(1, gf.A_tau("1234", 4)[1])

  def test_b_examples(self):
    self.assertEqual(gf.schroder_s(6), gf.B_tau("2413", 6))
    self.assertSeriesEqual([1, 1, 1, 1, 1], gf.B_tau("321", 4))
    self.assertSeriesEqual([1, 1, 2, 5, 14], gf.B_tau("312", 4))

  def test_c_examples(self):
    self.assertEqual(gf.printed_form("C", "123", 8), gf.C_tau("123", 8))
    self.assertEqual(gf.printed_form("C", "321", 8), gf.C_tau("321", 8))
    self.assertEqual(gf.printed_form("C", "4321", 8), gf.C_tau("4321", 8))
    self.assertSeriesEqual([1, 1, 3, 9], gf.printed_form("C", "1234", 3))
    recurrence = TruncatedSeries([1, -1, 1, 6, -1]) / TruncatedSeries(
        [1, -2, 0, 1, 0])
    self.assertEqual(recurrence, gf.C_tau("1234", 4))
    self.assertEqual(11, gf.C_tau("1234", 4)[3])

  def test_errors(self):
    with self.assertRaisesRegex(ValueError,
                                "no applicable recurrence for tau=312"):
      gf.A_tau("312", 4)
    with self.assertRaisesRegex(ValueError, "no applicable recurrence"):
      gf.C_tau("132", 4)
    with self.assertRaisesRegex(ValueError,
                                "no applicable recurrence for tau=2413"):
      gf.C_tau("2413", 4)
    with self.assertRaisesRegex(ValueError,
                                "no applicable recurrence for tau=13425"):
      gf.C_tau("13425", 4)
    with self.assertRaisesRegex(ValueError, "Unknown pattern family"):
      gf.pattern_series("D", "12", 4)
    with self.assertRaisesRegex(ValueError, "No printed closed form"):
      gf.printed_form("B", "321", 4)


class BernoulliTest(absltest.TestCase):

  def test_values(self):
    self.assertEqual(Fraction(-1, 2), gf.bernoulli(1))
    self.assertEqual(Fraction(1, 6), gf.bernoulli(2))
    self.assertEqual(0, gf.bernoulli(3))
    self.assertEqual(Fraction(-1, 30), gf.bernoulli(4))

  def test_genocchi(self):
    self.assertEqual([1, 1, 3, 17, 155, 2073, 38227],
                     [gf.genocchi_from_bernoulli(m) for m in range(2, 15, 2)])
    for m in range(2, 20, 2):
      self.assertEqual(dumont_perms.genocchi(m), gf.genocchi_from_bernoulli(m))
    with self.assertRaisesRegex(ValueError, "even number"):
      gf.genocchi_from_bernoulli(3)


class FixedPointProductTest(absltest.TestCase):

  def test_shifted_extraction(self):
    q = QTPolynomial.q()
    self.assertEqual(1, gf.fix2143_shifted(1))
    self.assertEqual(1 + q, gf.fix2143_shifted(2))

  def test_shifted_matches_fixed_points(self):
    for n in range(6):
      members = dumont_perms.members(dumont_perms.SECOND, n, ["2143"])
      fixed = collections.Counter(
          permutations.statistics(p).fix for p in members)
      expected = QTPolynomial({(k, 0): c for k, c in fixed.items()})
      self.assertEqual(expected, gf.fix2143_shifted(n), msg="n=%d" % n)

  def test_printed_extraction_is_shifted_by_one(self):
    q = QTPolynomial.q()
    self.assertEqual(1 + q, gf.fix2143_formula(1))
    for n in range(1, 5):
      self.assertNotEqual(gf.fix2143_shifted(n), gf.fix2143_formula(n))


if __name__ == "__main__":
  absltest.main()
