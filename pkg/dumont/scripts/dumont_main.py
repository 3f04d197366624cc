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
r"""Command-line front end for Dumont permutations and their series.

Usage examples:

  dumont gen --kind=d2 --n=2
  dumont stats --kind=d2 --n=4 --avoid=3142 --by=fix,two_cycles
  dumont biject --map=f1 --input=64357821
  dumont series --name=Ctau:321 --order=4
  dumont verify --check=all --max_n=6 --json=/tmp/report.json
  dumont plot --type=board --input=4132 --out=/tmp/board.svg

The first positional argument selects the subcommand. Data goes to stdout and
diagnostics to stderr. The exit code is 0 on success, 1 on malformed input or
a domain violation and 2 when a must_pass check fails.
"""

import collections
import os
import sys

from absl import app
from absl import flags
from absl import logging
import dumont
from dumont.combinat import bijections
from dumont.combinat import dumont_perms
from dumont.combinat import dyck
from dumont.combinat import objects
from dumont.combinat import permutations
from dumont.evaluation import reports
from dumont.scripts import plotting
from dumont.series import generating_functions as gf
from dumont.series import power_series
import gin

COMMANDS = ("gen", "count", "stats", "biject", "series", "verify", "plot")

flags.DEFINE_string("kind", "d2", "Dumont kind: d1 or d2.")
flags.DEFINE_integer("n", None, "Half the permutation length.")
flags.DEFINE_string(
    "avoid", "", "Comma-separated patterns to avoid, e.g. 132,4213.")
flags.DEFINE_boolean("count_only", False, "Print only the count for gen.")
flags.DEFINE_list(
    "by", ["fix"], "Statistics for the stats table, e.g. fix,two_cycles,lis.")
flags.DEFINE_string("map", None, "Bijection to apply with biject.")
flags.DEFINE_string("input", None, "Input object text for biject and plot.")
flags.DEFINE_string(
    "name", None, "Series name, e.g. catalan, Lk, Aqtx or Atau:1342.")
flags.DEFINE_integer("k", None, "Index k of the L_k series.")
flags.DEFINE_integer("order", 10, "Highest coefficient printed by series.")
flags.DEFINE_string("check", "all", "Check id to verify, or 'all'.")
flags.DEFINE_integer(
    "max_n", None, "Largest n for verify; defaults to each check's own.")
flags.DEFINE_string("json", None, "Optional path for the JSON report.")
flags.DEFINE_enum("type", "dyck", ["dyck", "board"], "What plot draws.")
flags.DEFINE_string("out", None, "Output SVG path for plot.")
flags.DEFINE_multi_string("gin_file", [], "Gin files to parse after defaults.")
flags.DEFINE_multi_string("gin_param", [], "Gin bindings to parse last.")

FLAGS = flags.FLAGS

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CHECK_FAILED = 2

GIN_DIR = os.path.join(os.path.dirname(os.path.abspath(dumont.__file__)),
                       "gin")

# A bijection entry: input parser, function, output formatter.
Mapping = collections.namedtuple("Mapping", ["parse", "fn", "render"])


def _parse_board_pair(text):
  pieces = text.split("/")
  if len(pieces) != 2:
    raise ValueError("Board pair must read UPPER/LOWER, got %r" % text)
  return tuple(permutations.parse_permutation(p) for p in pieces)


def _render_board_pair(pair):
  return "%s/%s" % (permutations.format_permutation(pair.upper),
                    permutations.format_permutation(pair.lower))


_PERM = permutations.parse_permutation
_SHOW_PERM = permutations.format_permutation
_PATH = dyck.parse
_SHOW_PATH = dyck.render

MAPS = collections.OrderedDict([
    ("f1", Mapping(_PERM, bijections.f1, _SHOW_PERM)),
    ("f1inv", Mapping(_PERM, bijections.f1_inverse, _SHOW_PERM)),
    ("f2", Mapping(_PERM, bijections.f2, _SHOW_PERM)),
    ("f2inv", Mapping(_PERM, bijections.f2_inverse, _SHOW_PERM)),
    ("phi", Mapping(_PERM, bijections.phi_krat, _SHOW_PATH)),
    ("phiinv", Mapping(_PATH, bijections.phi_krat_inverse, _SHOW_PERM)),
    ("phiR", Mapping(_PERM, bijections.phi_R, _SHOW_PATH)),
    ("phiRinv", Mapping(_PATH, bijections.phi_R_inverse, _SHOW_PERM)),
    ("psi", Mapping(_PERM, bijections.psi_eli, _SHOW_PATH)),
    ("psiinv", Mapping(_PATH, bijections.psi_eli_inverse, _SHOW_PERM)),
    ("g1", Mapping(_PATH, dyck.g1, _SHOW_PATH)),
    ("g1inv", Mapping(_PATH, dyck.g1_inverse, _SHOW_PATH)),
    ("g2", Mapping(_PATH, dyck.g2, _SHOW_PATH)),
    ("g2inv", Mapping(_PATH, dyck.g2_inverse, _SHOW_PATH)),
    ("d2-321", Mapping(_PERM, bijections.d2_321_to_dyck, _SHOW_PATH)),
    ("d2-321-inv", Mapping(_PATH, bijections.dyck_to_d2_321, _SHOW_PERM)),
    ("phi-even", Mapping(_PERM, bijections.phi_even, _SHOW_PERM)),
    ("phi-even-inv",
     Mapping(_PERM, bijections.phi_even_inverse, _SHOW_PERM)),
    ("psi-nc", Mapping(_PERM, bijections.psi_nc, objects.format_partition)),
    ("psi-nc-inv",
     Mapping(objects.parse_partition, bijections.nc_to_d2_3142, _SHOW_PERM)),
    ("split-boards",
     Mapping(_PERM, bijections.split_boards, _render_board_pair)),
    ("merge-boards",
     Mapping(_parse_board_pair, lambda pair: bijections.merge_boards(*pair),
             _SHOW_PERM)),
    ("lower-to-path", Mapping(_PERM, bijections.lower_board_to_path, str)),
    ("path-to-lower",
     Mapping(str.strip, bijections.path_to_lower_board, _SHOW_PERM)),
])

# Each map and the map undoing it.
INVERSES = collections.OrderedDict([
    ("f1", "f1inv"), ("f2", "f2inv"), ("phi", "phiinv"), ("phiR", "phiRinv"),
    ("psi", "psiinv"), ("g1", "g1inv"), ("g2", "g2inv"),
    ("d2-321", "d2-321-inv"), ("phi-even", "phi-even-inv"),
    ("psi-nc", "psi-nc-inv"), ("split-boards", "merge-boards"),
    ("lower-to-path", "path-to-lower"),
])

# Integer sequences printed by series, indexed from n = 0.
SEQUENCES = collections.OrderedDict([
    ("a", gf.a_seq),
    ("b", gf.b_seq),
    ("r", gf.large_schroder),
    ("C2", gf.generalized_catalan_C2),
    ("pairb", gf.pair_b),
])

SERIES = collections.OrderedDict([
    ("catalan", gf.catalan_series),
    ("schroder", gf.schroder_s),
    ("f", gf.ternary_f),
    ("Aqtx", gf.A_qtx),
    ("Bqtx", gf.B_qtx),
])

PATTERN_SERIES = collections.OrderedDict([
    ("Atau", gf.A_tau),
    ("Btau", gf.B_tau),
    ("Ctau", gf.C_tau),
])


def _require_n():
  if FLAGS.n is None or FLAGS.n < 0:
    raise ValueError("--n must be set to an integer >= 0, got %s" % FLAGS.n)
  return FLAGS.n


def _members():
  kind = dumont_perms.resolve_kind(FLAGS.kind)
  avoid = permutations.parse_patterns(FLAGS.avoid)
  return kind, _require_n(), avoid


def gen():
  """Lists D_{2n}(avoid), or counts it with --count_only."""
  kind, n, avoid = _members()
  if FLAGS.count_only:
    return [str(dumont_perms.count(kind, n, avoid))]
  lines = [permutations.format_permutation(p)
           for p in dumont_perms.generate(kind, n, avoid)]
  logging.info("Generated %d permutations.", len(lines))
  return lines


def count():
  kind, n, avoid = _members()
  return [str(dumont_perms.count(kind, n, avoid))]


def stats():
  kind, n, avoid = _members()
  if not FLAGS.by:
    raise ValueError("--by must name at least one statistic")
  df = dumont_perms.distribution_frame(kind, n, avoid, FLAGS.by)
  return df.to_string(index=False).splitlines()


def biject():
  if FLAGS.map not in MAPS:
    raise ValueError("Unknown map %r; expected one of %s" %
                     (FLAGS.map, ", ".join(MAPS)))
  if FLAGS.input is None:
    raise ValueError("biject needs --input")
  mapping = MAPS[FLAGS.map]
  return [mapping.render(mapping.fn(mapping.parse(FLAGS.input)))]


def series():
  """Prints the coefficients of the named series up to --order."""
  name, order = FLAGS.name, FLAGS.order
  if name is None:
    raise ValueError("series needs --name")
  if order is None or order < 0:
    raise ValueError("--order must be >= 0, got %s" % order)
  if name in SEQUENCES:
    fn = SEQUENCES[name]
    return [power_series.format_coefficients(fn(n) for n in range(order + 1))]
  if name == "Lk":
    if FLAGS.k is None:
      raise ValueError("series --name=Lk needs --k")
    return [gf.print_series(gf.L_k_series(FLAGS.k, order))]
  if name in SERIES:
    return [gf.print_series(SERIES[name](order))]
  family, _, tau = name.partition(":")
  if family in PATTERN_SERIES and tau:
    return [gf.print_series(PATTERN_SERIES[family](tau, order))]
  raise ValueError(
      "Unknown series %r; expected one of %s, Lk or FAMILY:PATTERN with "
      "FAMILY in %s" % (name, ", ".join(list(SEQUENCES) + list(SERIES)),
                        ", ".join(PATTERN_SERIES)))


def verify():
  """Runs checks; returns the summary lines and the exit code."""
  kwargs = {}
  if FLAGS.check != "all":
    kwargs["check_names"] = FLAGS.check.split(",")
  if FLAGS.max_n is not None:
    kwargs["max_n"] = FLAGS.max_n
  results = reports.run_all(**kwargs)
  df = reports.summary_frame(results)
  reports.log_summary(df)
  if FLAGS.json:
    reports.write_json(results, FLAGS.json)
  failures = reports.failed(results)
  if failures:
    logging.error("Failed checks: %s", ", ".join(failures))
  code = EXIT_CHECK_FAILED if failures else EXIT_OK
  return reports.format_summary(df).splitlines(), code


def plot():
  if FLAGS.input is None or not FLAGS.out:
    raise ValueError("plot needs --input and --out")
  if FLAGS.type == "dyck":
    text = plotting.dyck_svg(dyck.parse(FLAGS.input))
  else:
    text = plotting.board_svg(permutations.parse_permutation(FLAGS.input))
  plotting.write_svg(text, FLAGS.out)
  return []


def parse_gin():
  gin.add_config_file_search_path(GIN_DIR)
  gin.parse_config_files_and_bindings(
      ["defaults.gin"] + list(FLAGS.gin_file), FLAGS.gin_param)


def run(command):
  """Runs one subcommand and returns (stdout lines, exit code)."""
  handlers = {"gen": gen, "count": count, "stats": stats, "biject": biject,
              "series": series, "plot": plot}
  if command == "verify":
    return verify()
  return handlers[command](), EXIT_OK


def main(argv):
  if len(argv) != 2 or argv[1] not in COMMANDS:
    logging.error("Expected exactly one subcommand from %s, got %s",
                  ", ".join(COMMANDS), argv[1:])
    return EXIT_INVALID
  try:
    parse_gin()
    lines, code = run(argv[1])
  except ValueError as e:
    logging.error("%s", e)
    return EXIT_INVALID
  if lines:
    sys.stdout.write("\n".join(lines) + "\n")
  return code


def console_entry_point():
  app.run(main)


if __name__ == "__main__":
  console_entry_point()
