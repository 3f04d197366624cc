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
"""Utilities for running the check catalog and reporting its results."""

import collections
import json

from absl import logging
from dumont.evaluation import catalog  # pylint: disable=unused-import
from dumont.evaluation import checks
import gin
import pandas as pd

SUMMARY_COLUMNS = ["check", "status", "verdict", "rows", "mismatches",
                   "runtime_ms"]


@gin.configurable
def run_all(check_names=None, max_n=None):
  """Runs the named checks (all registered checks by default) in order.

  Args:
    check_names: list of registered check names, or None for all of them.
    max_n: int or None, forwarded to checks.run_check.

  Returns:
    a list of checks.CheckReport, one per check, in the order given.
  """
  names = list(check_names) if check_names else checks.CheckRegistry.names()
  logging.info("Running %d checks.", len(names))
  return [checks.run_check(name, max_n) for name in names]


def failed(reports):
  """Names of the reports whose verdict is a failure."""
  return [r.name for r in reports if r.verdict == checks.FAIL]


def report_to_json(report):
  """A JSON-ready record with a stable key order."""
  rows = []
  for row in report.rows:
    rows.append(collections.OrderedDict([
        ("n", row.n),
        ("formula", checks.render_value(row.formula)),
        ("oracle", checks.render_value(row.oracle)),
        ("equal", row.equal),
    ]))
  return collections.OrderedDict([
      ("id", report.name),
      ("status", report.status),
      ("verdict", report.verdict),
      ("rows", rows),
      ("runtime_ms", round(report.runtime_ms, 3)),
  ])


def reports_to_json(reports):
  return json.dumps([report_to_json(r) for r in reports], indent=2)


def write_json(reports, output_file):
  with open(output_file, "w") as f:
    f.write(reports_to_json(reports) + "\n")
  logging.info("Wrote %d reports to %s.", len(reports), output_file)


def summary_frame(reports):
  """Converts reports into a pandas DataFrame with one row per check."""
  data = []
  for report in reports:
    mismatches = [row.n for row in report.rows if not row.equal]
    data.append([report.name, report.status, report.verdict,
                 len(report.rows), ",".join(str(n) for n in mismatches),
                 report.runtime_ms])
  df = pd.DataFrame(data, columns=SUMMARY_COLUMNS)
  return df.set_index("check")


def log_summary(df):
  """Log the summary to be copy/pasted into a spreadsheet."""
  logging.info("check," + ",".join(df.columns))
  for name, row in df.iterrows():
    logging.info("%s,%s,%s,%d,%s,%.1f", name, row["status"], row["verdict"],
                 row["rows"], row["mismatches"], row["runtime_ms"])
  counts = df["verdict"].value_counts()
  logging.info("verdicts," + ",".join(
      "%s=%d" % (v, counts[v]) for v in sorted(counts.index)))


def format_summary(df):
  """Human-readable summary, one line per check."""
  lines = []
  for name, row in df.iterrows():
    line = "%-40s %-24s n-rows=%d" % (name, row["verdict"], row["rows"])
    if row["mismatches"]:
      line += " mismatches at n=%s" % row["mismatches"]
    lines.append(line)
  return "\n".join(lines)
