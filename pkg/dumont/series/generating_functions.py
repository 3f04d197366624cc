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
"""Generating functions for restricted Dumont permutations.

Every function taking an order returns a power_series.TruncatedSeries exact
to that order. Pattern-indexed families:

  A_tau: D^1_{2n}(1342, 1423, tau)
  B_tau: D^1_{2n}(2341, 2413, tau)
  C_tau: D^1_{2n}(1342, 2413, tau)

are evaluated by dispatching on the shape of tau to the block-decomposition
recurrence that covers it. The closed forms printed alongside those
recurrences are kept as separate lookups so the two can be compared.
"""

import collections
import fractions
import functools
import math

from absl import logging
from dumont.combinat import permutations
from dumont.series import power_series
import gin
import numpy as np

Fraction = fractions.Fraction
QTPolynomial = power_series.QTPolynomial
TruncatedSeries = power_series.TruncatedSeries

FAMILIES = collections.OrderedDict([
    ("A", ((1, 3, 4, 2), (1, 4, 2, 3))),
    ("B", ((2, 3, 4, 1), (2, 4, 1, 3))),
    ("C", ((1, 3, 4, 2), (2, 4, 1, 3))),
])


def _x(order):
  return TruncatedSeries.x(order)


def _one(order):
  return TruncatedSeries.constant(1, order)


def _quadratic_root(b, order):
  """(b - sqrt(b^2 - 4x)) / (2x) for a series b with constant term 1.

  This is the power-series root of x*y^2 - b*y + 1 = 0.
  """
  b = b.truncate(order + 1)
  x = _x(order + 1)
  return ((b - (b * b - 4 * x).sqrt()) / 2).divide_x()


def catalan_series(order):
  """C(x) = (1 - sqrt(1 - 4x)) / (2x)."""
  return _quadratic_root(_one(order + 1), order)


def schroder_s(order):
  """s(x) = (1 + x - sqrt(1 - 6x + x^2)) / (4x), the little Schroder numbers."""
  x = _x(order + 1)
  return ((1 + x - (1 - 6 * x + x * x).sqrt()) / 4).divide_x()


def catalan_number(n):
  return math.comb(2 * n, n) // (n + 1)


@functools.lru_cache(maxsize=None)
def little_schroder(n):
  """s_n for n >= 1 by s_{n+1} = -s_n + 2 sum_{k=1}^{n} s_k s_{n+1-k}."""
  if n < 1:
    raise ValueError("Little Schroder numbers start at s_1, got n=%d" % n)
  if n <= 2:
    return 1
  m = n - 1
  return -little_schroder(m) + 2 * sum(
      little_schroder(k) * little_schroder(m + 1 - k) for k in range(1, m + 1))


@functools.lru_cache(maxsize=None)
def large_schroder(n):
  """r_n = r_{n-1} + sum_{k=0}^{n-1} r_k r_{n-1-k} with r_0 = 1."""
  if n < 0:
    raise ValueError("Large Schroder index must be >= 0, got %d" % n)
  if n == 0:
    return 1
  return large_schroder(n - 1) + sum(
      large_schroder(k) * large_schroder(n - 1 - k) for k in range(n))


def ternary_f(order):
  """f(x) = 1 + x f(x)^3, by fixpoint iteration."""
  x = _x(order)
  return power_series.solve_fixpoint(lambda f: 1 + x * f ** 3, order)


def a_seq(n):
  """a_{2m} = C(3m, m) / (2m+1) and a_{2m+1} = C(3m+1, m) / (m+1)."""
  if n < 0:
    raise ValueError("a_n needs n >= 0, got %d" % n)
  m, odd = divmod(n, 2)
  if odd:
    return math.comb(3 * m + 1, m) // (m + 1)
  return math.comb(3 * m, m) // (2 * m + 1)


@functools.lru_cache(maxsize=None)
def b_seq(n):
  """Lower-board counts from the even/odd convolution recurrences, b_0 = 1."""
  if n < 0:
    raise ValueError("b_n needs n >= 0, got %d" % n)
  if n == 0:
    return 1
  m, odd = divmod(n, 2)
  if odd:
    return sum(b_seq(2 * i) * b_seq(2 * m - 2 * i) for i in range(m + 1))
  return sum(b_seq(2 * i) * b_seq(2 * m - 2 * i - 1) for i in range(m))


def a_series(order):
  """sum a_n x^n = 1 / (1 - x f(x^2))."""
  x = _x(order)
  return (1 - x * _even_part(ternary_f(order // 2), order)).invert()


def _even_part(series, order):
  """series(x^2) truncated at order."""
  spread = [0] * (order + 1)
  for n, c in enumerate(series.coefficients):
    if 2 * n <= order:
      spread[2 * n] = c
  return TruncatedSeries(spread, order)


def _a_qtx_step(order):
  x = _x(order)
  q, t = QTPolynomial.q(), QTPolynomial.t()

  def step(a):
    return 1 + x * ((1 - x * q * a).invert() + (t - 1)) * a

  return step


def A_qtx(order):
  """Joint (fixed points, 2-cycles) series over D^2_{2n}(3142).

  Computed as the fixpoint of A = 1 + x (1/(1 - x q A) + t - 1) A. The
  coefficient of x^n is a polynomial in q (fixed points) and t (2-cycles).
  """
  return power_series.solve_fixpoint(_a_qtx_step(order), order)


def A_qtx_closed_form(order):
  """The quadratic-formula expression for A(q, t, x), as a series.

  (1 + x(q - t) - sqrt(1 - 2x(q + t) + x^2((q + t)^2 - 4q)))
      / (2 x q (1 + x(1 - t)))
  """
  inner = order + 1
  x = _x(inner)
  q, t = QTPolynomial.q(), QTPolynomial.t()
  radicand = 1 - 2 * (q + t) * x + ((q + t) * (q + t) - 4 * q) * x * x
  numerator = (1 + (q - t) * x - radicand.sqrt()).divide_x()
  denominator = 1 + (1 - t) * _x(order)
  return numerator / (2 * q) / denominator


def B_qtx(order):
  """sum over E_n of q^def t^fix_{-1} x^n, as 1 / (1 - x A(1/q, t, q x))."""
  a = A_qtx(order)
  flipped = a.map_coefficients(
      lambda n, c: QTPolynomial.lift(c).map_exponents(
          lambda i, j, n=n: (n - i, j)))
  return (1 - _x(order) * flipped).invert()


def L_k_series(k, order):
  """Generating function of D^1_{2n}(132) with lis <= k."""
  if k < -1:
    raise ValueError("L_k needs k >= -1, got %d" % k)
  z = _x(order)
  previous, current = TruncatedSeries.constant(0, order), _one(order)
  if k == -1:
    return previous
  for _ in range(k):
    previous, current = current, 1 + z * current * (1 - z * previous).invert()
  return current


@functools.lru_cache(maxsize=None)
def chebyshev_U(r):
  """Integer coefficients (constant term first) of U_r(t), any integer r."""
  if r == 0:
    return (1,)
  if r == -1:
    return ()
  if r > 0:
    below, above = chebyshev_U(r - 2), chebyshev_U(r - 1)
    return _poly_sub(_poly_shift_double(above), below)
  # U_r = 2t U_{r+1} - U_{r+2}, run downwards.
  return _poly_sub(_poly_shift_double(chebyshev_U(r + 1)), chebyshev_U(r + 2))


def _poly_shift_double(p):
  return (0,) + tuple(2 * c for c in p) if p else ()


def _poly_sub(p, s):
  size = max(len(p), len(s))
  p = tuple(p) + (0,) * (size - len(p))
  s = tuple(s) + (0,) * (size - len(s))
  result = list(a - b for a, b in zip(p, s))
  while result and result[-1] == 0:
    result.pop()
  return tuple(result)


def chebyshev_value(r, t):
  coefficients = chebyshev_U(r)
  if not coefficients:
    return 0.0
  return float(np.polynomial.polynomial.polyval(t, coefficients))


def lemma_iteration(m, u, v, r):
  """a_m for a_k = 1 / (u - v a_{k-1}) and a_0 = r."""
  a = r
  for _ in range(m):
    a = 1 / (u - v * a)
  return a


def chebyshev_quotient(m, u, v, r):
  """The Chebyshev closed form of lemma_iteration(m, u, v, r), v > 0."""
  root = math.sqrt(v)
  arg = u / (2 * root)
  numerator = chebyshev_value(m - 1, arg) - r * root * chebyshev_value(
      m - 2, arg)
  denominator = root * (chebyshev_value(m, arg) -
                        r * root * chebyshev_value(m - 1, arg))
  return numerator / denominator


def cba_closed_form(k, x_value):
  """B_{(k+2)...21}(x) through Chebyshev polynomials at (1+x)/(2 sqrt(2x))."""
  if k < 0:
    raise ValueError("k must be >= 0, got %d" % k)
  if not 0 < x_value < 0.125:
    raise ValueError("x must lie in (0, 1/8), got %r" % x_value)
  return chebyshev_quotient(k, 1 + x_value, 2 * x_value, 1)


def decreasing_pattern(length):
  return tuple(range(length, 0, -1))


def increasing_pattern(length):
  return tuple(range(1, length + 1))


def _std(seq):
  return tuple(permutations.standardize(seq))


def _contains_any(tau, patterns):
  return any(permutations.contains(tau, p) for p in patterns)


def _base_case(tau, order):
  x = _x(order)
  if tau == (1,) or tau == (2, 1):
    return _one(order)
  if tau == (1, 2):
    return 1 + x
  if not tau:
    return TruncatedSeries.constant(0, order)
  return None


def _shifted_complement(inner):
  """1 + x (1 - inner), at the order of inner."""
  return 1 + _x(inner.order) * (1 - inner)


def _not_dd(tau):
  return not permutations.is_decreasing_decomposable(tau)


def _a_tau(tau, order):
  base = _base_case(tau, order)
  if base is not None:
    return base
  if _contains_any(tau, FAMILIES["A"]):
    return schroder_s(order)
  x = _x(order)
  ell = len(tau)
  if tau[-2:] == (ell, ell - 1):
    inner = _a_tau(_std(tau[:-2]), order + 1)
    return _quadratic_root(_shifted_complement(inner), order)
  if tau[-2:] == (ell - 1, ell):
    head = _a_tau(_std(tau[:-2]), order)
    with_top = _a_tau(_std(tau[:-1]), order)
    return 1 + x * with_top * with_top * (1 - x * head).invert()
  if tau[-1] == ell:
    prefix = _std(tau[:-1])
    if prefix == (2, 1) or (_not_dd(prefix) and prefix[-1] != ell - 1):
      inner = _a_tau(prefix, order)
      return 1 + x * inner * inner * (1 - x * inner).invert()
  if tau[0] == ell and tau[-1] != ell - 1:
    suffix = _std(tau[1:])
    if _not_dd(suffix):
      return (1 + x - 2 * x * _a_tau(suffix, order)).invert()
  if _not_dd(tau) and ell not in (tau[0], tau[-2], tau[-1]):
    return schroder_s(order)
  raise ValueError("A_tau: no applicable recurrence for tau=%s" %
                   permutations.format_permutation(tau))


def _b_tau(tau, order):
  base = _base_case(tau, order)
  if base is not None:
    return base
  if _contains_any(tau, FAMILIES["B"]):
    return schroder_s(order)
  x = _x(order)
  ell = len(tau)
  if tau[0] == ell and tau[-1] != ell - 1:
    return (1 + x - 2 * x * _b_tau(_std(tau[1:]), order)).invert()
  if tau[0] == ell and tau[-1] == ell - 1:
    inner = _b_tau(_std(tau[1:-1]), order + 1)
    return _quadratic_root(_shifted_complement(inner), order)
  raise ValueError("B_tau: no applicable recurrence for tau=%s" %
                   permutations.format_permutation(tau))


def _c_tau(tau, order):
  base = _base_case(tau, order)
  if base is not None:
    return base
  # D1_2n(1342,2413) differs from s_{n+1} from n = 4 on.
  ell = len(tau)
  if tau == increasing_pattern(ell):
    return _c_increasing(ell, order)
  if tau == decreasing_pattern(ell):
    return _c_decreasing(ell, order)
  raise ValueError("C_tau: no applicable recurrence for tau=%s" %
                   permutations.format_permutation(tau))


@functools.lru_cache(maxsize=None)
def _c_increasing(k, order):
  if k == 0:
    return TruncatedSeries.constant(0, order)
  if k <= 2:
    return _base_case(increasing_pattern(k), order)
  x = _x(order)
  total = TruncatedSeries.constant(0, order)
  for j in range(1, k):
    total = total + (_c_increasing(j, order) - _c_increasing(j - 1, order)) * (
        _c_increasing(k - j, order))
  return 1 + x * total * (1 - x * _c_increasing(k - 2, order)).invert()


@functools.lru_cache(maxsize=None)
def _c_decreasing(k, order):
  if k <= 2:
    return _one(order)
  x = _x(order)
  total = TruncatedSeries.constant(0, order)
  for j in range(2, k):
    total = total + (_c_decreasing(j, order) - _c_decreasing(j - 1, order)) * (
        _c_decreasing(k + 1 - j, order))
  return (1 + x * total) * (1 - x * _c_decreasing(k - 1, order)).invert()


_FAMILY_SOLVERS = {"A": _a_tau, "B": _b_tau, "C": _c_tau}


def pattern_series(family, tau, order):
  """Dispatches tau to the recurrence of the given family ("A", "B", "C")."""
  if family not in _FAMILY_SOLVERS:
    raise ValueError("Unknown pattern family %r; expected one of %s" %
                     (family, tuple(_FAMILY_SOLVERS)))
  tau = tuple(permutations.as_permutation(tau))
  logging.debug("Evaluating %s_%s to order %d.", family,
                permutations.format_permutation(tau), order)
  return _FAMILY_SOLVERS[family](tau, order)


def A_tau(tau, order):
  return pattern_series("A", tau, order)


def B_tau(tau, order):
  return pattern_series("B", tau, order)


def C_tau(tau, order):
  return pattern_series("C", tau, order)


def _rational(numerator, denominator, order):
  """Ratio of two polynomials given by coefficient lists."""
  return (TruncatedSeries(numerator, order) /
          TruncatedSeries(denominator, order))


def _printed_a_1234(order):
  x = _x(order)
  lead = x ** 5 * (x + 2) * (x + 2)
  return 1 + lead * _rational([1], [1, -2, 1], order) * _rational(
      [1], [1, -1, -1], order)


def _printed_a_1243(order):
  x = _x(order)
  damp = (1 - x * x).invert()
  return damp * catalan_series(order).compose(x * damp * damp)


def _printed_a_1324(order):
  return 1 + _x(order) * catalan_series(order) ** 3


def _printed_a_2134(order):
  return 1 + _x(order) * _rational([1], [1, -3, 3, -1], order)


def _printed_a_13245(order):
  x = _x(order)
  return 1 + (1 - x) * (1 - x) * catalan_series(order) ** 3


PRINTED_FORMS = collections.OrderedDict([
    (("A", "1234"), _printed_a_1234),
    (("A", "1243"), _printed_a_1243),
    (("A", "1324"), _printed_a_1324),
    (("A", "1342"), schroder_s),
    (("A", "1423"), schroder_s),
    (("A", "1432"), schroder_s),
    (("A", "2134"), _printed_a_2134),
    (("A", "13245"), _printed_a_13245),
    (("A", "2143"), catalan_series),
    (("B", "312"), catalan_series),
    (("B", "4123"), catalan_series),
    (("C", "123"), lambda order: _rational([1, 0, 2], [1, -1], order)),
    (("C", "1234"), lambda order: _rational(
        [1, -1, 1, 4, 1], [1, -2, 0, 1], order)),
    (("C", "321"), lambda order: _rational([1], [1, -1], order)),
    (("C", "4321"), lambda order: _rational([1, -1, 1], [1, -2], order)),
])


def printed_form(family, tau, order):
  """The closed form printed for (family, tau), independent of dispatch."""
  key = (family, permutations.format_permutation(
      permutations.as_permutation(tau)))
  if key not in PRINTED_FORMS:
    raise ValueError("No printed closed form for %s_%s" % key)
  return PRINTED_FORMS[key](order)


def generalized_catalan_C2(n):
  """C(2; n) = sum_{m=0}^{n-1} (n-m)/n binom(n-1+m, m) 2^m, with C(2; 0) = 1."""
  if n < 0:
    raise ValueError("C(2; n) needs n >= 0, got %d" % n)
  if n == 0:
    return 1
  total = sum(Fraction(n - m, n) * math.comb(n - 1 + m, m) * 2 ** m
              for m in range(n))
  return int(total)


@functools.lru_cache(maxsize=None)
def pair_b(n):
  """b_n = 3 b_{n-1} + 2 b_{n-2} for n >= 3, with b_0 = b_1 = 1, b_2 = 3."""
  if n < 0:
    raise ValueError("b_n needs n >= 0, got %d" % n)
  if n <= 2:
    return (1, 1, 3)[n]
  return 3 * pair_b(n - 1) + 2 * pair_b(n - 2)


def powers_of_two_shift(n):
  """2^{n-1} for n >= 1 and 1 for n = 0."""
  return 1 if n == 0 else 2 ** (n - 1)


def _fix2143_product(order):
  """1 / (1 - x f(x^2)) * 1 / (1 - q x^2 f(x^2)^2) with q-polynomial terms."""
  x = _x(order)
  f_even = _even_part(ternary_f(order // 2 + 1), order)
  q = QTPolynomial.q()
  first = (1 - x * f_even).invert()
  second = (1 - q * x * x * f_even * f_even).invert()
  return first * second


def fix2143_formula(n):
  """a_n [x^{n+1}] of the fixed-point product, a polynomial in q."""
  product = _fix2143_product(n + 1)
  return QTPolynomial.lift(a_seq(n) * product.coefficient(n + 1))


def fix2143_shifted(n):
  """a_n [x^n] of the same product."""
  product = _fix2143_product(n)
  return QTPolynomial.lift(a_seq(n) * product.coefficient(n))


def bernoulli(n):
  """B_n with B_1 = -1/2, over exact rationals."""
  return _bernoulli_table(n)[n]


@functools.lru_cache(maxsize=None)
def _bernoulli_table(n):
  if n < 0:
    raise ValueError("Bernoulli index must be >= 0, got %d" % n)
  values = [Fraction(1)]
  for m in range(1, n + 1):
    values.append(-sum(math.comb(m + 1, k) * values[k] for k in range(m)) /
                  (m + 1))
  return tuple(values)


def genocchi_from_bernoulli(m):
  """G_m = |2 (1 - 2^m) B_m| for even m >= 2."""
  if m < 2 or m % 2:
    raise ValueError("Genocchi index must be an even number >= 2, got %d" % m)
  value = abs(2 * (1 - 2 ** m) * bernoulli(m))
  if value.denominator != 1:
    raise ValueError("Non-integral Genocchi value %s at m=%d" % (value, m))
  return int(value)


@gin.configurable
def print_series(series, order=None):
  """Renders the first order + 1 coefficients as "c0, c1, ..."."""
  if order is not None:
    series = series.truncate(order)
  return power_series.format_coefficients(series.coefficients)
