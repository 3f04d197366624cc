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
"""Checks: a formula side, a brute-force oracle side and a verdict."""

import collections
import fractions
import math
import time

from absl import logging
from dumont.combinat import permutations
from dumont.series import power_series

MUST_PASS = "must_pass"
SUSPECT = "suspect"
STATUSES = (MUST_PASS, SUSPECT)

PASS = "pass"
FAIL = "fail"
DOCUMENTED = "discrepancy_documented"
# No n in range: max_n lies below the check's min_n.
EMPTY = "empty"

Row = collections.namedtuple("Row", ["n", "formula", "oracle", "equal"])
CheckReport = collections.namedtuple(
    "CheckReport", ["name", "status", "verdict", "rows", "runtime_ms"])


def exact_equal(a, b):
  return a == b


def close_to(rel_tol=1e-9, abs_tol=1e-9):
  """A comparison for floats or equal-length tuples of floats."""

  def compare(a, b):
    if isinstance(a, tuple):
      return len(a) == len(b) and all(compare(x, y) for x, y in zip(a, b))
    return math.isclose(a, b, rel_tol=rel_tol, abs_tol=abs_tol)

  return compare


def documented_from(first_n, also=()):
  """Mismatches expected at every n >= first_n and at the listed n."""
  also = frozenset(also)
  return lambda n: n >= first_n or n in also


def documented_at(ns):
  """Mismatches expected at exactly the listed n."""
  ns = frozenset(ns)
  return lambda n: n in ns


class CheckSpec(object):
  """Pairs a formula with a brute-force oracle over a range of n.

  Both sides are callables of n. A suspect check carries the predicate of
  the n at which its printed formula is known to disagree with brute force.
  """

  def __init__(self,
               description,
               reference,
               formula,
               oracle,
               default_max_n,
               min_n=0,
               max_feasible_n=None,
               status=MUST_PASS,
               documented_mismatch=None,
               compare=exact_equal):
    """CheckSpec constructor.

    Args:
      description: string, one line of what is compared.
      reference: string, the statement being checked.
      formula: callable n -> value, computed from formulas or recurrences.
      oracle: callable n -> value, computed by exhaustive generation.
      default_max_n: int, the largest n run_check uses by default.
      min_n: int, the first n compared.
      max_feasible_n: int or None, a hard cap applied to requested max_n.
      status: MUST_PASS or SUSPECT.
      documented_mismatch: callable n -> bool, the documented mismatches of
        a suspect check.
      compare: callable (formula value, oracle value) -> bool.
    """
    if status not in STATUSES:
      raise ValueError("Check status must be one of %s, got %r" %
                       (STATUSES, status))
    if status == SUSPECT and documented_mismatch is None:
      raise ValueError("Suspect checks must document their mismatches")
    if min_n > default_max_n:
      raise ValueError("min_n %d exceeds default_max_n %d" %
                       (min_n, default_max_n))
    self.description = description
    self.reference = reference
    self.formula = formula
    self.oracle = oracle
    self.default_max_n = default_max_n
    self.min_n = min_n
    self.max_feasible_n = max_feasible_n
    self.status = status
    self.documented_mismatch = documented_mismatch
    self.compare = compare

  def documented_rows(self, ns):
    if self.documented_mismatch is None:
      return set()
    return {n for n in ns if self.documented_mismatch(n)}


class CheckRegistry(object):
  """Registry of named checks, in registration order."""

  _REGISTRY = collections.OrderedDict()

  @classmethod
  def add(cls, name, check_cls=CheckSpec, **check_kwargs):
    """Adds a check to the registry."""
    if name in cls._REGISTRY:
      raise ValueError("Attempting to register duplicate check: %s" % name)
    check = check_cls(**check_kwargs)
    if not isinstance(check, CheckSpec):
      raise ValueError(
          "Attempting to register a class of an invalid type. "
          "Expecting instance of %s, got %s" % (CheckSpec, check_cls))
    cls._REGISTRY[name] = check

  @classmethod
  def remove(cls, name):
    """Remove check from the registry, if it exists."""
    if name in cls._REGISTRY:
      del cls._REGISTRY[name]

  @classmethod
  def get(cls, name):
    """Returns check from the registry."""
    if name not in cls._REGISTRY:
      raise ValueError("Check name not registered: %s" % name)
    return cls._REGISTRY[name]

  @classmethod
  def names(cls):
    """Returns all check names in registration order."""
    return list(cls._REGISTRY.keys())


def list_checks():
  """The catalog as an OrderedDict of check name to CheckSpec."""
  return collections.OrderedDict(
      (name, CheckRegistry.get(name)) for name in CheckRegistry.names())


def verdict_for(check, rows):
  if not rows:
    return EMPTY
  mismatched = {row.n for row in rows if not row.equal}
  documented = check.documented_rows(row.n for row in rows)
  if not mismatched and not documented:
    return PASS
  if check.status == SUSPECT and mismatched == documented:
    return DOCUMENTED
  return FAIL


def run_check(name, max_n=None):
  """Evaluates both sides of a registered check for n = min_n..max_n.

  Args:
    name: string, a registered check name.
    max_n: int or None; defaults to the check's default_max_n and is capped
      by its max_feasible_n.

  Returns:
    a CheckReport.
  """
  check = CheckRegistry.get(name)
  if max_n is None:
    max_n = check.default_max_n
  if max_n < 1:
    raise ValueError("max_n must be >= 1, got %d" % max_n)
  if check.max_feasible_n is not None and max_n > check.max_feasible_n:
    logging.warning("Capping %s at n=%d (requested %d).", name,
                    check.max_feasible_n, max_n)
    max_n = check.max_feasible_n
  start = time.time()
  rows = []
  if max_n < check.min_n:
    logging.warning("%s starts at n=%d; nothing to compare up to n=%d.", name,
                    check.min_n, max_n)
  for n in range(check.min_n, max_n + 1):
    formula, oracle = check.formula(n), check.oracle(n)
    rows.append(Row(n, formula, oracle, bool(check.compare(formula, oracle))))
  runtime_ms = (time.time() - start) * 1000.0
  verdict = verdict_for(check, rows)
  logging.info("%s: %s (n=%d..%d, %.1f ms)", name, verdict, check.min_n,
               max_n, runtime_ms)
  for row in rows:
    if not row.equal:
      logging.info("  %s n=%d: formula %s, oracle %s", name, row.n,
                   render_value(row.formula), render_value(row.oracle))
  return CheckReport(name, check.status, verdict, rows, runtime_ms)


def render_value(value):
  """Text form of a check value; exact integers render as decimal strings."""
  if isinstance(value, bool):
    return "true" if value else "false"
  if isinstance(value, (int, fractions.Fraction, power_series.QTPolynomial)):
    return str(value)
  if isinstance(value, float):
    return "%.12g" % value
  if isinstance(value, permutations.Permutation):
    return permutations.format_permutation(value)
  if isinstance(value, (set, frozenset)):
    return "{%s}" % " ".join(sorted(render_value(v) for v in value))
  if isinstance(value, dict):
    return "{%s}" % ", ".join(
        "%s: %s" % (render_value(k), render_value(value[k]))
        for k in sorted(value))
  if isinstance(value, (tuple, list)):
    return "(%s)" % ", ".join(render_value(v) for v in value)
  return str(value)
