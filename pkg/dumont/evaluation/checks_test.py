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
"""Tests for dumont.evaluation.checks."""

from absl.testing import absltest
from dumont.combinat import permutations
from dumont.evaluation import checks
from dumont.evaluation import reports
from dumont.evaluation import test_utils
from dumont.series import power_series

CheckRegistry = checks.CheckRegistry
CheckSpec = checks.CheckSpec


def _square(n):
  return n * n


class RegistryTest(test_utils.BaseCheckTest):

  def setUp(self):
    super(RegistryTest, self).setUp()
    CheckRegistry.add(
        "test-square", CheckSpec, description="squares", reference="none",
        formula=_square, oracle=lambda n: n ** 2, default_max_n=4)
    CheckRegistry.add(
        "test-documented", CheckSpec, description="off from n=1",
        reference="none", formula=lambda n: n, oracle=lambda n: 0,
        default_max_n=4, status=checks.SUSPECT,
        documented_mismatch=checks.documented_from(1))
    CheckRegistry.add(
        "test-undocumented", CheckSpec, description="off from n=1",
        reference="none", formula=lambda n: n, oracle=lambda n: 0,
        default_max_n=4, status=checks.SUSPECT,
        documented_mismatch=checks.documented_from(2))

  def tearDown(self):
    for name in ("test-square", "test-documented", "test-undocumented"):
      CheckRegistry.remove(name)
    super(RegistryTest, self).tearDown()

  def test_registry(self):
    self.assertIn("test-square", CheckRegistry.names())
    self.assertEqual(4, CheckRegistry.get("test-square").default_max_n)
    with self.assertRaisesRegex(
        ValueError, "Attempting to register duplicate check: test-square"):
      CheckRegistry.add(
          "test-square", CheckSpec, description="", reference="",
          formula=_square, oracle=_square, default_max_n=1)
    with self.assertRaisesRegex(ValueError, "Check name not registered: nope"):
      CheckRegistry.get("nope")
    CheckRegistry.remove("nope")

  def test_pass(self):
    report = checks.run_check("test-square")
    self.assertVerdict(checks.PASS, report)
    self.assertEqual([0, 1, 2, 3, 4], [row.n for row in report.rows])
    self.assertEqual((2, 4, 4, True), tuple(report.rows[2]))
    self.assertLen(checks.run_check("test-square", 2).rows, 3)

  def test_documented_and_failed(self):
    report = checks.run_check("test-documented")
    self.assertVerdict(checks.DOCUMENTED, report)
    self.assertMismatchesAt([1, 2, 3, 4], report)
    self.assertVerdict(checks.FAIL, checks.run_check("test-undocumented"))

  def test_documented_rows_that_agree_fail(self):
    CheckRegistry.add(
        "test-stale", CheckSpec, description="", reference="",
        formula=_square, oracle=_square, default_max_n=3,
        status=checks.SUSPECT, documented_mismatch=checks.documented_from(2))
    try:
      self.assertVerdict(checks.FAIL, checks.run_check("test-stale"))
      self.assertVerdict(checks.PASS, checks.run_check("test-stale", 1))
    finally:
      CheckRegistry.remove("test-stale")

  def test_run_check_errors(self):
    with self.assertRaisesRegex(ValueError, "max_n must be >= 1"):
      checks.run_check("test-square", 0)
    with self.assertRaisesRegex(ValueError, "not registered"):
      checks.run_check("no-such-check")

  def test_below_min_n(self):
    CheckRegistry.add(
        "test-late", CheckSpec, description="", reference="",
        formula=_square, oracle=lambda n: 0, default_max_n=4, min_n=3)
    try:
      report = checks.run_check("test-late", 2)
    finally:
      CheckRegistry.remove("test-late")
    self.assertVerdict(checks.EMPTY, report)
    self.assertEmpty(report.rows)
    self.assertEqual([], reports.failed([report]))

  def test_feasible_cap(self):
    CheckRegistry.add(
        "test-capped", CheckSpec, description="", reference="",
        formula=_square, oracle=_square, default_max_n=2, max_feasible_n=3)
    try:
      self.assertLen(checks.run_check("test-capped", 10).rows, 4)
    finally:
      CheckRegistry.remove("test-capped")


class CheckSpecTest(absltest.TestCase):

  def test_validation(self):
    with self.assertRaisesRegex(ValueError, "Check status must be one of"):
      CheckSpec("", "", _square, _square, 3, status="maybe")
    with self.assertRaisesRegex(ValueError, "must document their mismatches"):
      CheckSpec("", "", _square, _square, 3, status=checks.SUSPECT)
    with self.assertRaisesRegex(ValueError, "min_n 4 exceeds default_max_n 3"):
      CheckSpec("", "", _square, _square, 3, min_n=4)

  def test_documented_from(self):
    documented = checks.documented_from(2, also=(0,))
    self.assertEqual([True, False, True, True],
                     [documented(n) for n in range(4)])

  def test_documented_at(self):
    documented = checks.documented_at((0, 2, 3))
    self.assertEqual([True, False, True, True, False],
                     [documented(n) for n in range(5)])

  def test_close_to(self):
    compare = checks.close_to(rel_tol=1e-9, abs_tol=1e-9)
    self.assertTrue(compare(1.0, 1.0 + 1e-12))
    self.assertTrue(compare((1.0, 2.0), (1.0, 2.0 + 1e-12)))
    self.assertFalse(compare((1.0, 2.0), (1.0, 2.1)))
    self.assertFalse(compare((1.0,), (1.0, 2.0)))


class RenderTest(absltest.TestCase):

  def test_render(self):
    p = permutations.parse_permutation
    self.assertEqual("2143", checks.render_value(p("2143")))
    self.assertEqual("{2143 3142}",
                     checks.render_value(frozenset([p("3142"), p("2143")])))
    self.assertEqual("{0: 1, 1: 1}", checks.render_value({1: 1, 0: 1}))
    self.assertEqual("(1, 38227)", checks.render_value((1, 38227)))
    self.assertEqual("true", checks.render_value(True))
    self.assertEqual("0.5", checks.render_value(0.5))
    q = power_series.QTPolynomial.q()
    self.assertEqual("1 + q", checks.render_value(1 + q))


if __name__ == "__main__":
  absltest.main()
