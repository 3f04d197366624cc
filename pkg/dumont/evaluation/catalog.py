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
"""Add formula checks to the registry."""

import collections
import functools

from dumont.combinat import bijections
from dumont.combinat import dumont_perms
from dumont.combinat import dyck
from dumont.combinat import objects
from dumont.combinat import permutations
from dumont.evaluation import checks
from dumont.series import generating_functions as gf
from dumont.series import power_series

CheckRegistry = checks.CheckRegistry
CheckSpec = checks.CheckSpec
FIRST = dumont_perms.FIRST
SECOND = dumont_perms.SECOND

FAMILY_A = [permutations.format_permutation(p) for p in gf.FAMILIES["A"]]
FAMILY_B = [permutations.format_permutation(p) for p in gf.FAMILIES["B"]]
FAMILY_C = [permutations.format_permutation(p) for p in gf.FAMILIES["C"]]

CHEBYSHEV_POINTS = (0.01, 0.03, 0.05, 0.08, 0.11)


def _count(kind, patterns, n):
  return dumont_perms.count(kind, n, patterns)


def _member_set(kind, patterns, n):
  return frozenset(dumont_perms.members(kind, n, patterns))


def _coefficient(series_fn, n):
  return series_fn(n)[n]


def _constant(value, unused_n):
  return value


def _catalan_shift(n):
  return gf.catalan_number(n - 1)


def _qt_distribution(perms, q_stat, t_stat):
  terms = collections.Counter()
  for perm in perms:
    record = permutations.statistics(perm)
    terms[(getattr(record, q_stat), getattr(record, t_stat))] += 1
  return power_series.QTPolynomial(terms)


def _lifted_coefficient(series_fn, n):
  return power_series.QTPolynomial.lift(series_fn(n)[n])


# ================================ Genocchi ===================================
def _genocchi_pair(n):
  value = gf.genocchi_from_bernoulli(2 * n + 2)
  return (value, value)


def _dumont_counts(n):
  return (dumont_perms.count(FIRST, n), dumont_perms.count(SECOND, n))


CheckRegistry.add(
    "genocchi-count",
    CheckSpec,
    description="|D1_2n| = |D2_2n| = G_{2n+2}",
    reference="Dumont permutations of both kinds are counted by Genocchi "
    "numbers G_{2n+2} = |2(1 - 2^{2n+2}) B_{2n+2}|",
    formula=_genocchi_pair,
    oracle=_dumont_counts,
    default_max_n=6)

CheckRegistry.add(
    "genocchi-bernoulli",
    CheckSpec,
    description="Seidel triangle against the Bernoulli formula",
    reference="G_{2n+2} = |2(1 - 2^{2n+2}) B_{2n+2}|",
    formula=lambda n: gf.genocchi_from_bernoulli(2 * n + 2),
    oracle=lambda n: dumont_perms.genocchi(2 * n + 2),
    default_max_n=12)

CheckRegistry.add(
    "median-genocchi-derangements",
    CheckSpec,
    description="derangements in D2_2n against median Genocchi numbers",
    reference="The derangements in D2_2n are counted by H_n",
    formula=dumont_perms.median_genocchi,
    oracle=dumont_perms.count_derangements,
    default_max_n=5,
    min_n=1)

# ========================= Single 3-letter patterns ==========================
for _pattern in ("132", "231", "312"):
  CheckRegistry.add(
      "d1-%s-catalan" % _pattern,
      CheckSpec,
      description="|D1_2n(%s)| = C_n" % _pattern,
      reference="Table of known results, first kind, pattern %s" % _pattern,
      formula=gf.catalan_number,
      oracle=functools.partial(_count, FIRST, [_pattern]),
      default_max_n=6)

CheckRegistry.add(
    "d1-213-catalan-shift",
    CheckSpec,
    description="|D1_2n(213)| = C_{n-1}",
    reference="Table of known results, first kind, pattern 213",
    formula=_catalan_shift,
    oracle=functools.partial(_count, FIRST, ["213"]),
    default_max_n=6,
    min_n=1)

CheckRegistry.add(
    "d1-321-one",
    CheckSpec,
    description="|D1_2n(321)| = 1",
    reference="Table of known results, first kind, pattern 321",
    formula=functools.partial(_constant, 1),
    oracle=functools.partial(_count, FIRST, ["321"]),
    default_max_n=6)

CheckRegistry.add(
    "d2-321-catalan",
    CheckSpec,
    description="|D2_2n(321)| = C_n",
    reference="Table of known results, second kind, pattern 321",
    formula=gf.catalan_number,
    oracle=functools.partial(_count, SECOND, ["321"]),
    default_max_n=6)

CheckRegistry.add(
    "d2-231-powers",
    CheckSpec,
    description="|D2_2n(231)| = 2^{n-1}",
    reference="Table of known results, second kind, pattern 231",
    formula=gf.powers_of_two_shift,
    oracle=functools.partial(_count, SECOND, ["231"]),
    default_max_n=6)

CheckRegistry.add(
    "d2-312-one",
    CheckSpec,
    description="|D2_2n(312)| = 1",
    reference="Table of known results, second kind, pattern 312",
    formula=functools.partial(_constant, 1),
    oracle=functools.partial(_count, SECOND, ["312"]),
    default_max_n=6)

for _pattern in ("132", "213"):
  CheckRegistry.add(
      "d2-%s-zero" % _pattern,
      CheckSpec,
      description="|D2_2n(%s)| = 0 for n >= 3" % _pattern,
      reference="Table of known results, second kind, pattern %s" % _pattern,
      formula=functools.partial(_constant, 0),
      oracle=functools.partial(_count, SECOND, [_pattern]),
      default_max_n=6,
      min_n=3)

# ============================ D2_2n(3142), E_n ================================
CheckRegistry.add(
    "d2-3142-catalan",
    CheckSpec,
    description="|D2_2n(3142)| = C_n",
    reference="Table of known results, second kind, pattern 3142",
    formula=gf.catalan_number,
    oracle=functools.partial(_count, SECOND, ["3142"]),
    default_max_n=6)


def _narayana_distribution(n):
  return {k: objects.narayana(n, k) for k in range(n)}


def _fix_distribution(n):
  table = collections.Counter(
      permutations.statistics(p).fix
      for p in dumont_perms.members(SECOND, n, ["3142"]))
  return dict(table)


def _nc_parts_distribution(n):
  table = collections.Counter(
      n - objects.parts(bijections.psi_nc(p))
      for p in dumont_perms.members(SECOND, n, ["3142"]))
  return dict(table)


CheckRegistry.add(
    "d2-3142-narayana-fix",
    CheckSpec,
    description="fix over D2_2n(3142) is Narayana distributed",
    reference="The number of members of D2_2n(3142) with k fixed points is "
    "the Narayana number N(n, k)",
    formula=_narayana_distribution,
    oracle=_fix_distribution,
    default_max_n=6,
    min_n=1)

CheckRegistry.add(
    "d2-3142-nc-parts",
    CheckSpec,
    description="n - parts(psi_nc(pi)) is Narayana distributed",
    reference="psi_nc maps D2_2n(3142) onto NC(n) with parts = n - fix",
    formula=_narayana_distribution,
    oracle=_nc_parts_distribution,
    default_max_n=6,
    min_n=1)


def _joint_oracle(n):
  return _qt_distribution(
      dumont_perms.members(SECOND, n, ["3142"]), "fix", "two_cycles")


CheckRegistry.add(
    "d2-3142-joint-qt",
    CheckSpec,
    description="(fix, two_cycles) over D2_2n(3142) against A(q,t,x)",
    reference="A(q,t,x) = 1 + x (1 / (1 - x q A) + t - 1) A",
    formula=functools.partial(_lifted_coefficient, gf.A_qtx),
    oracle=_joint_oracle,
    default_max_n=6)

CheckRegistry.add(
    "d2-3142-joint-qt-closed-form",
    CheckSpec,
    description="(fix, two_cycles) over D2_2n(3142) against the sqrt form",
    reference="A(q,t,x) by the quadratic formula",
    formula=functools.partial(_lifted_coefficient, gf.A_qtx_closed_form),
    oracle=_joint_oracle,
    default_max_n=6)


def _block_identities_hold(pi, n):
  sigma = bijections.phi_even(pi)
  big, small = permutations.statistics(pi), permutations.statistics(sigma)
  return (big.fix + big.fix_minus1 == n and big.fix == small.def_ and
          big.fix_minus1 == small.exc + small.fix and
          small.fix == big.two_cycles)


CheckRegistry.add(
    "theorem31-identities",
    CheckSpec,
    description="statistic identities between pi and its even part",
    reference="fix + fix_{-1} = n, fix(pi) = def(sigma), "
    "fix_{-1}(pi) = exc(sigma) + fix(sigma), fix(sigma) = two_cycles(pi)",
    formula=gf.catalan_number,
    oracle=lambda n: sum(1 for p in dumont_perms.members(SECOND, n, ["3142"])
                         if _block_identities_hold(p, n)),
    default_max_n=5,
    min_n=1)

CheckRegistry.add(
    "e-permutations-image",
    CheckSpec,
    description="E_n by its grammar against phi_even(D2_2n(3142))",
    reference="phi_even is a bijection from D2_2n(3142) onto E_n",
    formula=lambda n: frozenset(objects.enumerate_E(n)),
    oracle=lambda n: frozenset(
        bijections.phi_even(p)
        for p in dumont_perms.members(SECOND, n, ["3142"])),
    default_max_n=5,
    min_n=1)

CheckRegistry.add(
    "e-joint-def-fix",
    CheckSpec,
    description="(def, fix_{-1}) over E_n against 1 / (1 - x A(1/q, t, qx))",
    reference="companion series of A(q,t,x) over E_n",
    formula=functools.partial(_lifted_coefficient, gf.B_qtx),
    oracle=lambda n: _qt_distribution(
        objects.enumerate_E(n), "def_", "fix_minus1"),
    default_max_n=6)


def _odd_on_diagonals(pi):
  return all(v % 2 == 0 or i in (v, v + 1) for i, v in enumerate(pi, 1))


CheckRegistry.add(
    "d2-3142-odd-diagonal",
    CheckSpec,
    description="odd values of D2_2n(3142) sit on the diagonal or below it",
    reference="odd entries are fixed points or one below the diagonal",
    formula=gf.catalan_number,
    oracle=lambda n: sum(1 for p in dumont_perms.members(SECOND, n, ["3142"])
                         if _odd_on_diagonals(p)),
    default_max_n=6)

CheckRegistry.add(
    "d2-4132-set-equality",
    CheckSpec,
    description="D2_2n(4132) = D2_2n(321)",
    reference="Members of D2_2n avoiding 4132 are those avoiding 321",
    formula=functools.partial(_member_set, SECOND, ["321"]),
    oracle=functools.partial(_member_set, SECOND, ["4132"]),
    default_max_n=5,
    min_n=1)

# ============================== D2_2n(2143) ===================================
CheckRegistry.add(
    "d2-2143-product",
    CheckSpec,
    description="|D2_2n(2143)| = a_n a_{n+1}",
    reference="Members of D2_2n(2143) split into an upper and a lower board",
    formula=lambda n: gf.a_seq(n) * gf.a_seq(n + 1),
    oracle=functools.partial(_count, SECOND, ["2143"]),
    default_max_n=6)

CheckRegistry.add(
    "d2-2143-derangements",
    CheckSpec,
    description="derangements in D2_2n(2143) number a_n^2",
    reference="Fixed-point-free upper boards rotate onto lower boards",
    formula=lambda n: gf.a_seq(n) ** 2,
    oracle=lambda n: dumont_perms.count_derangements(n, ["2143"]),
    default_max_n=5)


def _fix_polynomial_2143(n):
  table = collections.Counter(
      permutations.statistics(p).fix
      for p in dumont_perms.members(SECOND, n, ["2143"]))
  return power_series.QTPolynomial({(k, 0): c for k, c in table.items()})


CheckRegistry.add(
    "d2-2143-fix-formula",
    CheckSpec,
    description="fix over D2_2n(2143) against a_n [x^{n+1}] of the product",
    reference="printed extraction of the fixed-point generating function",
    formula=gf.fix2143_formula,
    oracle=_fix_polynomial_2143,
    default_max_n=5,
    min_n=1,
    status=checks.SUSPECT,
    documented_mismatch=checks.documented_from(1))

CheckRegistry.add(
    "d2-2143-fix-shifted",
    CheckSpec,
    description="fix over D2_2n(2143) against a_n [x^n] of the product",
    reference="fixed points lie on the upper board",
    formula=gf.fix2143_shifted,
    oracle=_fix_polynomial_2143,
    default_max_n=5)


def _board_count(which, n):
  return sum(1 for _ in objects.enumerate_boards(n, which))


def _rotated_derangement_boards(n):
  images = set()
  for upper in objects.enumerate_boards(n, objects.UPPER):
    try:
      image = objects.derangement_board_to_lower(upper)
    except ValueError:
      continue
    if objects.is_lower_board(image):
      images.add(image)
  return len(images)


CheckRegistry.add(
    "d2-2143-board-derangements",
    CheckSpec,
    description="fixed-point-free upper boards rotate onto the a_n lower "
    "boards",
    reference="rotation by 180 degrees of the fixed-point-free upper boards",
    formula=gf.a_seq,
    oracle=_rotated_derangement_boards,
    default_max_n=7)

CheckRegistry.add(
    "upper-boards-b",
    CheckSpec,
    description="upper boards in S_n number a_{n+1}",
    reference="upper boards are counted by b_{n+1} = a_{n+1}",
    formula=lambda n: gf.a_seq(n + 1),
    oracle=functools.partial(_board_count, objects.UPPER),
    default_max_n=8)

CheckRegistry.add(
    "lower-boards-a",
    CheckSpec,
    description="lower boards in S_n number a_n",
    reference="lower boards are counted by a_n",
    formula=gf.a_seq,
    oracle=functools.partial(_board_count, objects.LOWER),
    default_max_n=9)

CheckRegistry.add(
    "ne-paths-dp",
    CheckSpec,
    description="lattice paths under y = x/2 number a_n",
    reference="lower boards correspond to lattice paths",
    formula=gf.a_seq,
    oracle=objects.count_ne_paths,
    default_max_n=14)

# ================================ Pairs ======================================
_PAIR_ROWS = (
    ("pairs-1342-1423-schroder", ["1342", "1423"],
     lambda n: gf.little_schroder(n + 1), "s_{n+1}", None),
    ("pairs-2341-2413-schroder", ["2341", "2413"],
     lambda n: gf.little_schroder(n + 1), "s_{n+1}", None),
    # Brute force gives 44 and 185 at n = 4, 5 against 45 and 197.
    ("pairs-1342-2413-schroder", ["1342", "2413"],
     lambda n: gf.little_schroder(n + 1), "s_{n+1}",
     checks.documented_from(4)),
    ("pairs-2341-1423-b", ["2341", "1423"], gf.pair_b,
     "b_n = 3 b_{n-1} + 2 b_{n-2}", None),
    ("pairs-1342-4213-powers", ["1342", "4213"], gf.powers_of_two_shift,
     "2^{n-1}", None),
    ("pairs-2413-3142-C2", ["2413", "3142"], gf.generalized_catalan_C2,
     "C(2; n)", None),
)

for _name, _patterns, _formula, _closed, _documented in _PAIR_ROWS:
  CheckRegistry.add(
      _name,
      CheckSpec,
      description="|D1_2n(%s)| = %s" % (",".join(_patterns), _closed),
      reference="Table of known results, first kind, pair (%s)" %
      ",".join(_patterns),
      formula=_formula,
      oracle=functools.partial(_count, FIRST, _patterns),
      default_max_n=6,
      status=checks.SUSPECT if _documented else checks.MUST_PASS,
      documented_mismatch=_documented)

# ===================== Block decompositions, family A ========================
A_TABLE = ("1243", "1324", "1342", "1423", "1432", "2134")
A_RECURRENCE = ("123", "132", "213", "1234", "1243", "1324", "2134", "2143",
                "13245")


def _printed_row(family, taus, n):
  return tuple(gf.printed_form(family, tau, n)[n] for tau in taus)


def _dispatched_row(family, taus, n):
  return tuple(gf.pattern_series(family, tau, n)[n] for tau in taus)


def _brute_row(family_patterns, taus, n):
  return tuple(dumont_perms.count(FIRST, n, family_patterns + [tau])
               for tau in taus)


CheckRegistry.add(
    "sec4-A-table",
    CheckSpec,
    description="printed closed forms of A_tau against brute force",
    reference="closed forms of A_tau for tau of length 4",
    formula=functools.partial(_printed_row, "A", A_TABLE),
    oracle=functools.partial(_brute_row, FAMILY_A, A_TABLE),
    default_max_n=5)

CheckRegistry.add(
    "sec4-A-table:A1234",
    CheckSpec,
    description="printed A_1234 against brute force",
    reference="A_1234 = 1 + x^5 (x+2)^2 / ((1-x)^2 (1-x-x^2))",
    formula=functools.partial(_printed_row, "A", ("1234",)),
    oracle=functools.partial(_brute_row, FAMILY_A, ["1234"]),
    default_max_n=5,
    status=checks.SUSPECT,
    documented_mismatch=checks.documented_from(1))

CheckRegistry.add(
    "sec4-A-13245",
    CheckSpec,
    description="printed A_13245 = 1 + (1-x)^2 C^3 against brute force",
    reference="worked example of the A recurrences",
    formula=functools.partial(_printed_row, "A", ("13245",)),
    oracle=functools.partial(_brute_row, FAMILY_A, ["13245"]),
    default_max_n=5,
    status=checks.SUSPECT,
    documented_mismatch=checks.documented_at((0, 2, 3, 4)))

CheckRegistry.add(
    "sec4-A-recurrence",
    CheckSpec,
    description="A_tau by recurrence dispatch against brute force",
    reference="block-decomposition recurrences for A_tau",
    formula=functools.partial(_dispatched_row, "A", A_RECURRENCE),
    oracle=functools.partial(_brute_row, FAMILY_A, A_RECURRENCE),
    default_max_n=5)

CheckRegistry.add(
    "sec4-A-2143-catalan-and-set-equality",
    CheckSpec,
    description="A_2143 = C and D1_2n(1342,1423,2143) = D1_2n(132)",
    reference="A_2143 = C(x) by block decomposition",
    formula=lambda n: (gf.printed_form("A", "2143", n)[n],
                       _member_set(FIRST, ["132"], n)),
    oracle=lambda n: (_count(FIRST, FAMILY_A + ["2143"], n),
                      _member_set(FIRST, FAMILY_A + ["2143"], n)),
    default_max_n=5)

# ===================== Block decompositions, family B ========================
B_RECURRENCE = ("321", "4321", "54321")

CheckRegistry.add(
    "sec4-B-312-catalan",
    CheckSpec,
    description="printed B_312 = C against brute force",
    reference="B_312 = C(x)",
    formula=functools.partial(_printed_row, "B", ("312",)),
    oracle=functools.partial(_brute_row, FAMILY_B, ["312"]),
    default_max_n=5,
    status=checks.SUSPECT,
    documented_mismatch=checks.documented_from(3))

CheckRegistry.add(
    "sec4-B-4123-catalan",
    CheckSpec,
    description="printed B_4123 = C against brute force",
    reference="B_4123 = C(x)",
    formula=functools.partial(_printed_row, "B", ("4123",)),
    oracle=functools.partial(_brute_row, FAMILY_B, ["4123"]),
    default_max_n=5,
    status=checks.SUSPECT,
    documented_mismatch=checks.documented_from(2))

CheckRegistry.add(
    "sec4-B-recurrence",
    CheckSpec,
    description="B_tau for decreasing tau by recurrence against brute force",
    reference="B_tau = 1 / (1 + x - 2x B_tau') for tau = l tau'",
    formula=functools.partial(_dispatched_row, "B", B_RECURRENCE),
    oracle=functools.partial(_brute_row, FAMILY_B, B_RECURRENCE),
    default_max_n=5)


def _chebyshev_side(k):
  return tuple(gf.cba_closed_form(k, x) for x in CHEBYSHEV_POINTS)


def _recurrence_side(k):
  series = gf.B_tau(gf.decreasing_pattern(k + 2), 120)
  return tuple(series.evaluate(x) for x in CHEBYSHEV_POINTS)


CheckRegistry.add(
    "sec4-B-chebyshev",
    CheckSpec,
    description="Chebyshev closed form of B_{(k+2)...21} against the "
    "recurrence (rows are k)",
    reference="B_{(k+2)...21} through U_k at (1+x) / (2 sqrt(2x))",
    formula=_chebyshev_side,
    oracle=_recurrence_side,
    default_max_n=5,
    compare=checks.close_to(rel_tol=1e-9, abs_tol=1e-9))

CheckRegistry.add(
    "lemma-chebyshev",
    CheckSpec,
    description="a_m = 1 / (u - v a_{m-1}) against its Chebyshev form "
    "(rows are m)",
    reference="continued-fraction lemma with u = 1.3, v = 0.2, a_0 = 0.7",
    formula=lambda m: gf.chebyshev_quotient(m, 1.3, 0.2, 0.7),
    oracle=lambda m: gf.lemma_iteration(m, 1.3, 0.2, 0.7),
    default_max_n=10,
    compare=checks.close_to(rel_tol=1e-12, abs_tol=1e-12))

# ===================== Block decompositions, family C ========================
for _tau, _status, _documented in (("123", checks.MUST_PASS, None),
                                   ("1234", checks.SUSPECT,
                                    checks.documented_from(3)),
                                   ("321", checks.MUST_PASS, None),
                                   ("4321", checks.MUST_PASS, None)):
  CheckRegistry.add(
      "sec4-C-%s" % _tau,
      CheckSpec,
      description="printed C_%s against brute force" % _tau,
      reference="closed form of C_%s" % _tau,
      formula=functools.partial(_printed_row, "C", (_tau,)),
      oracle=functools.partial(_brute_row, FAMILY_C, [_tau]),
      default_max_n=5,
      status=_status,
      documented_mismatch=_documented)

CheckRegistry.add(
    "sec4-C-recurrence",
    CheckSpec,
    description="C_tau by recurrence against brute force",
    reference="recurrences for C_{12...k} and C_{k...21}",
    formula=functools.partial(_dispatched_row, "C",
                              ("123", "1234", "321", "4321")),
    oracle=functools.partial(_brute_row, FAMILY_C,
                             ("123", "1234", "321", "4321")),
    default_max_n=5)

# ============================ Series identities ==============================
CheckRegistry.add(
    "little-schroder-recurrence",
    CheckSpec,
    description="convolution recurrence against the closed form of s(x)",
    reference="s_{n+1} = -s_n + 2 sum_{k=1}^{n} s_k s_{n+1-k}",
    formula=lambda n: gf.little_schroder(n + 1),
    oracle=functools.partial(_coefficient, gf.schroder_s),
    default_max_n=20)


def _lis_bounded_formula(n):
  return tuple(gf.L_k_series(k, n)[n] for k in range(n + 2))


def _lis_bounded_oracle(n):
  values = [permutations.lis(p)
            for p in dumont_perms.members(FIRST, n, ["132"])]
  return tuple(sum(1 for v in values if v <= k) for k in range(n + 2))


CheckRegistry.add(
    "L_k-coefficients",
    CheckSpec,
    description="[z^n] L_k against lis <= k on D1_2n(132), k = 0..n+1",
    reference="L_k = 1 + z L_{k-1} / (1 - z L_{k-2})",
    formula=_lis_bounded_formula,
    oracle=_lis_bounded_oracle,
    default_max_n=6)

# ======================= Bijections and statistics ===========================


def _roundtrips(items, forward, backward, member=None):
  """Counts items x with backward(forward(x)) == x and forward(x) in range."""
  ok = 0
  for item in items:
    try:
      image = forward(item)
      if member is not None and not member(image):
        continue
      if backward(image) == item:
        ok += 1
    except ValueError:
      continue
  return ok


def _avoids(pattern):
  return functools.partial(permutations.avoids, pattern=pattern)


def _roundtrip_sizes(n):
  catalan = gf.catalan_number(n)
  return (catalan,) * 8 + (gf.a_seq(n) * gf.a_seq(n + 1), gf.a_seq(n),
                           catalan, catalan)


def _noncrossing_with_parts(n):

  def member(pair):
    partition, pi = pair
    return (objects.is_noncrossing(partition) and
            objects.parts(partition) == n - permutations.statistics(pi).fix)

  return member


def _roundtrip_counts(n):
  paths = list(dyck.enumerate_dyck(n))
  d1_132 = dumont_perms.members(FIRST, n, ["132"])
  d1_231 = dumont_perms.members(FIRST, n, ["231"])
  d2_321 = dumont_perms.members(SECOND, n, ["321"])
  d2_3142 = dumont_perms.members(SECOND, n, ["3142"])
  d2_2143 = dumont_perms.members(SECOND, n, ["2143"])
  lower = list(objects.enumerate_boards(n, objects.LOWER))
  return (
      _roundtrips(d1_132, bijections.f1, bijections.f1_inverse,
                  _avoids((1, 3, 2))),
      _roundtrips(d1_231, bijections.f2, bijections.f2_inverse,
                  _avoids((2, 3, 1))),
      _roundtrips(paths, bijections.phi_krat_inverse, bijections.phi_krat),
      _roundtrips(paths, bijections.phi_R_inverse, bijections.phi_R),
      _roundtrips(paths, bijections.psi_eli_inverse, bijections.psi_eli),
      _roundtrips(paths, dyck.g1, dyck.g1_inverse),
      _roundtrips(paths, dyck.g2, dyck.g2_inverse),
      _roundtrips(d2_321, bijections.d2_321_to_dyck,
                  bijections.dyck_to_d2_321),
      _roundtrips(d2_2143, bijections.split_boards, bijections.merge_boards),
      _roundtrips(lower, bijections.lower_board_to_path,
                  functools.partial(bijections.path_to_lower_board, n=n)),
      _roundtrips(d2_3142, bijections.phi_even, bijections.phi_even_inverse,
                  objects.is_E),
      _roundtrips(d2_3142, lambda p: (bijections.psi_nc(p), p),
                  lambda pair: bijections.nc_to_d2_3142(pair[0]),
                  _noncrossing_with_parts(n)),
  )


CheckRegistry.add(
    "bijection-roundtrips",
    CheckSpec,
    description="f1, f2, phi, phi^R, psi, g1, g2, d2-321, boards, paths, "
    "phi_even, psi_nc roundtrip on their domains",
    reference="each map is a bijection onto its stated codomain",
    formula=_roundtrip_sizes,
    oracle=_roundtrip_counts,
    default_max_n=5,
    min_n=1)


def _transport_sizes(n):
  return (gf.catalan_number(n),) * 3


def _transport_counts(n):
  return (
      sum(1 for p in dumont_perms.members(FIRST, n, ["132"])
          if permutations.lds(p) == n + 1),
      sum(1 for p in dumont_perms.members(FIRST, n, ["231"])
          if permutations.rlm(p) == n),
      sum(1 for p in dumont_perms.members(SECOND, n, ["321"])
          if permutations.lis(p) == n),
  )


def _dyck_law_sizes(n):
  return (gf.catalan_number(n),) * 4


def _dyck_law_counts(n):
  paths = list(dyck.enumerate_dyck(n))
  return (
      sum(1 for d in paths if dyck.height(dyck.g1(d)) == dyck.lambda_stat(d)),
      sum(1 for d in paths if dyck.peaks(dyck.g1(d)) == n + 1),
      sum(1 for d in paths if dyck.peaks(dyck.g2(d)) == n),
      sum(1 for d in paths if dyck.height(dyck.g2(d)) == dyck.height(d) + 1),
  )


CheckRegistry.add(
    "statistic-transport",
    CheckSpec,
    description="lds, rlm and lis statistics carried by the bijections",
    reference="lds = n+1 on D1(132), rlm = n on D1(231), lis = n on D2(321)",
    formula=_transport_sizes,
    oracle=_transport_counts,
    default_max_n=6,
    min_n=1)

CheckRegistry.add(
    "dyck-transport",
    CheckSpec,
    description="height and peak laws of g1 and g2 over all Dyck paths",
    reference="height(g1) = lambda, peaks(g1) = n+1, peaks(g2) = n, "
    "height(g2) = height + 1",
    formula=_dyck_law_sizes,
    oracle=_dyck_law_counts,
    default_max_n=8,
    min_n=1)


def _height_distribution(n):
  return dict(collections.Counter(
      dyck.height(d) + 1 for d in dyck.enumerate_dyck(n)))


def _lds_distribution(n):
  return dict(collections.Counter(
      permutations.lds(p) for p in dumont_perms.members(FIRST, n, ["231"])))


CheckRegistry.add(
    "d1-231-lds-height",
    CheckSpec,
    description="lds over D1_2n(231) is height + 1 over Dyck paths",
    reference="f2 followed by phi^R carries lds to height + 1",
    formula=_height_distribution,
    oracle=_lds_distribution,
    default_max_n=6,
    min_n=1)
