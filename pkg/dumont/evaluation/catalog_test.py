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
"""Tests for dumont.evaluation.catalog."""

from absl.testing import absltest
from dumont.evaluation import catalog  # pylint: disable=unused-import
from dumont.evaluation import checks
from dumont.evaluation import reports
from dumont.evaluation import test_utils
import gin

CheckRegistry = checks.CheckRegistry

REQUIRED = [
    "genocchi-count", "d1-132-catalan", "d1-231-catalan", "d1-312-catalan",
    "d1-213-catalan-shift", "d1-321-one", "d2-321-catalan", "d2-231-powers",
    "d2-312-one", "d2-132-zero", "d2-213-zero", "d2-3142-catalan",
    "d2-3142-narayana-fix", "d2-3142-joint-qt", "d2-4132-set-equality",
    "d2-2143-product", "d2-2143-derangements", "d2-2143-fix-formula",
    "pairs-1342-1423-schroder", "pairs-2341-2413-schroder",
    "pairs-1342-2413-schroder", "pairs-2341-1423-b", "pairs-1342-4213-powers",
    "pairs-2413-3142-C2", "sec4-A-table", "sec4-A-table:A1234",
    "sec4-A-2143-catalan-and-set-equality", "sec4-B-312-catalan",
    "sec4-B-chebyshev", "sec4-C-123", "sec4-C-1234", "sec4-C-321",
    "sec4-C-4321", "bijection-roundtrips", "statistic-transport",
    "L_k-coefficients", "theorem31-identities",
]

SUSPECTS = [
    "d2-2143-fix-formula", "pairs-1342-2413-schroder", "sec4-A-table:A1234",
    "sec4-A-13245", "sec4-B-312-catalan", "sec4-B-4123-catalan",
    "sec4-C-1234",
]


class CatalogTest(test_utils.BaseCheckTest):

  def test_contents(self):
    names = CheckRegistry.names()
    self.assertGreaterEqual(len(names), 30)
    self.assertLen(set(names), len(names))
    for name in REQUIRED:
      self.assertIn(name, names)
    self.assertIn("Narayana",
                  CheckRegistry.get("d2-3142-narayana-fix").reference)

  def test_list_checks(self):
    catalog = checks.list_checks()
    self.assertEqual(CheckRegistry.names(), list(catalog))
    self.assertIsInstance(catalog["d2-2143-product"], checks.CheckSpec)

  def test_statuses(self):
    for name in CheckRegistry.names():
      expected = checks.SUSPECT if name in SUSPECTS else checks.MUST_PASS
      self.assertEqual(expected, CheckRegistry.get(name).status, msg=name)

  def test_product_rows(self):
    report = checks.run_check("d2-2143-product", 4)
    self.assertVerdict(checks.PASS, report)
    self.assertEqual(
        [(0, 1, 1), (1, 1, 1), (2, 2, 2), (3, 6, 6), (4, 21, 21)],
        [(row.n, row.formula, row.oracle) for row in report.rows])

  def test_single_patterns(self):
    report = checks.run_check("d1-321-one", 4)
    self.assertVerdict(checks.PASS, report)
    self.assertEqual([1] * 5, [row.oracle for row in report.rows])
    report = checks.run_check("d2-132-zero", 4)
    self.assertEqual([3, 4], [row.n for row in report.rows])
    self.assertEqual([0, 0], [row.oracle for row in report.rows])

  def test_suspects_are_documented(self):
    self.assertVerdict(checks.DOCUMENTED,
                       checks.run_check("sec4-B-312-catalan", 4))
    report = checks.run_check("sec4-C-1234", 4)
    self.assertVerdict(checks.DOCUMENTED, report)
    self.assertMismatchesAt([3, 4], report)
    report = checks.run_check("d2-2143-fix-formula", 3)
    self.assertVerdict(checks.DOCUMENTED, report)
    self.assertMismatchesAt([1, 2, 3], report)

  def test_whole_catalog_at_small_n(self):
    for name in CheckRegistry.names():
      report = checks.run_check(name, 3)
      self.assertNotEqual(checks.FAIL, report.verdict, msg=name)

  def test_suspect_rows_at_default_n(self):
    report = checks.run_check("sec4-A-13245")
    self.assertVerdict(checks.DOCUMENTED, report)
    self.assertMismatchesAt([0, 2, 3, 4], report)
    self.assertEqual((145,), report.rows[5].oracle)
    self.assertTrue(report.rows[5].equal)
    report = checks.run_check("pairs-1342-2413-schroder", 5)
    self.assertVerdict(checks.DOCUMENTED, report)
    self.assertEqual([1, 1, 3, 11, 44, 185],
                     [row.oracle for row in report.rows])

  def test_board_derangements(self):
    self.assertVerdict(checks.PASS,
                       checks.run_check("d2-2143-board-derangements", 5))

  def test_whole_catalog_at_default_n(self):
    gin.clear_config()
    results = reports.run_all()
    self.assertLen(results, len(CheckRegistry.names()))
    self.assertEqual([], reports.failed(results))
    for report in results:
      self.assertIn(report.verdict, (checks.PASS, checks.DOCUMENTED),
                    msg=report.name)


if __name__ == "__main__":
  absltest.main()
