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
"""Exact truncated power series over rationals or q,t-polynomials.

Coefficients are either numbers (int or fractions.Fraction) or QTPolynomial
values. A TruncatedSeries of order N knows its coefficients of x^0..x^N
exactly; arithmetic truncates to the smaller operand order.
"""

import fractions
import numbers

import numpy as np

Fraction = fractions.Fraction


def _exact(c):
  if isinstance(c, Fraction):
    return c.numerator if c.denominator == 1 else c
  return c


class QTPolynomial(object):
  """A sparse Laurent polynomial in q and t with rational coefficients.

  Terms are kept in a dict {(i, j): c} for c * q^i * t^j with c != 0.
  Negative exponents are allowed so that dividing by a power of q is exact.
  """

  __slots__ = ("_terms",)

  def __init__(self, terms=None):
    cleaned = {}
    for key, c in dict(terms or {}).items():
      if c:
        cleaned[(int(key[0]), int(key[1]))] = _exact(Fraction(c))
    self._terms = cleaned

  @classmethod
  def constant(cls, c):
    return cls({(0, 0): c})

  @classmethod
  def monomial(cls, q_power=0, t_power=0, c=1):
    return cls({(q_power, t_power): c})

  @classmethod
  def q(cls):
    return cls.monomial(1, 0)

  @classmethod
  def t(cls):
    return cls.monomial(0, 1)

  @classmethod
  def lift(cls, value):
    if isinstance(value, QTPolynomial):
      return value
    if isinstance(value, numbers.Rational):
      return cls.constant(value)
    raise ValueError("Cannot use %r as a q,t-polynomial coefficient" % (value,))

  @property
  def terms(self):
    """(q exponent, t exponent, coefficient) triples, lexicographically."""
    return [(i, j, c) for (i, j), c in sorted(self._terms.items())]

  def coefficient(self, q_power=0, t_power=0):
    return self._terms.get((q_power, t_power), 0)

  def is_monomial(self):
    return len(self._terms) == 1

  def map_exponents(self, fn):
    """Applies fn(i, j) -> (i', j') to each monomial; images must differ."""
    mapped = {}
    for (i, j), c in self._terms.items():
      key = fn(i, j)
      if key in mapped:
        raise ValueError("Exponent map is not injective at %s" % (key,))
      mapped[key] = c
    return QTPolynomial(mapped)

  def substitute(self, q=1, t=1):
    """Evaluates at numeric q and t; exact for rational arguments."""
    total = 0
    for (i, j), c in self._terms.items():
      total += c * _power(q, i) * _power(t, j)
    return _exact(total) if isinstance(total, Fraction) else total

  def inverse(self):
    if not self.is_monomial():
      raise ValueError("Only monomials are invertible, got %s" % self)
    (i, j), c = next(iter(self._terms.items()))
    return QTPolynomial({(-i, -j): 1 / Fraction(c)})

  def __bool__(self):
    return bool(self._terms)

  def __eq__(self, other):
    if isinstance(other, numbers.Rational):
      other = QTPolynomial.constant(other)
    if not isinstance(other, QTPolynomial):
      return NotImplemented
    return self._terms == other._terms

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  def __hash__(self):
    return hash(frozenset(self._terms.items()))

  def __neg__(self):
    return QTPolynomial({k: -c for k, c in self._terms.items()})

  def __add__(self, other):
    try:
      other = QTPolynomial.lift(other)
    except ValueError:
      return NotImplemented
    terms = dict(self._terms)
    for k, c in other._terms.items():
      terms[k] = terms.get(k, 0) + c
    return QTPolynomial(terms)

  __radd__ = __add__

  def __sub__(self, other):
    try:
      other = QTPolynomial.lift(other)
    except ValueError:
      return NotImplemented
    return self + (-other)

  def __rsub__(self, other):
    return QTPolynomial.lift(other) + (-self)

  def __mul__(self, other):
    try:
      other = QTPolynomial.lift(other)
    except ValueError:
      return NotImplemented
    terms = {}
    for (i, j), c in self._terms.items():
      for (k, l), d in other._terms.items():
        key = (i + k, j + l)
        terms[key] = terms.get(key, 0) + c * d
    return QTPolynomial(terms)

  __rmul__ = __mul__

  def __truediv__(self, other):
    if isinstance(other, numbers.Rational):
      if not other:
        raise ZeroDivisionError("q,t-polynomial division by zero")
      return QTPolynomial(
          {k: c / Fraction(other) for k, c in self._terms.items()})
    return self * QTPolynomial.lift(other).inverse()

  def __rtruediv__(self, other):
    return QTPolynomial.lift(other) * self.inverse()

  def __str__(self):
    if not self._terms:
      return "0"
    pieces = []
    for i, j, c in self.terms:
      factors = [_format_power("q", i), _format_power("t", j)]
      factors = [f for f in factors if f]
      if not factors:
        pieces.append(str(c))
      elif c == 1:
        pieces.append("*".join(factors))
      elif c == -1:
        pieces.append("-" + "*".join(factors))
      else:
        pieces.append("*".join([str(c)] + factors))
    return " + ".join(pieces).replace("+ -", "- ")

  def __repr__(self):
    return "QTPolynomial(%s)" % self


def _power(base, exponent):
  if exponent >= 0:
    return base ** exponent
  if isinstance(base, numbers.Rational):
    return Fraction(1, 1) / Fraction(base) ** -exponent
  return 1.0 / base ** -exponent


def _format_power(name, exponent):
  if exponent == 0:
    return ""
  if exponent == 1:
    return name
  return "%s^%d" % (name, exponent)


def _invert_constant(c):
  if isinstance(c, QTPolynomial):
    return c.inverse()
  if not c:
    raise ValueError("Series with zero constant term is not invertible")
  return _exact(Fraction(1, 1) / Fraction(c))


class TruncatedSeries(object):
  """Coefficients c_0..c_order of a power series in x."""

  __slots__ = ("coefficients", "order")

  def __init__(self, coefficients, order=None):
    coefficients = [_exact(c) for c in coefficients]
    if order is None:
      order = len(coefficients) - 1
    if order < 0:
      raise ValueError("Series order must be >= 0, got %d" % order)
    coefficients = coefficients[:order + 1]
    coefficients += [0] * (order + 1 - len(coefficients))
    self.coefficients = coefficients
    self.order = order

  @classmethod
  def constant(cls, c, order):
    return cls([c], order)

  @classmethod
  def x(cls, order):
    return cls([0, 1], order)

  @classmethod
  def geometric(cls, order, ratio=1):
    """1 / (1 - ratio * x)."""
    return cls([ratio ** n for n in range(order + 1)], order)

  def __getitem__(self, n):
    return self.coefficient(n)

  def coefficient(self, n):
    if not 0 <= n <= self.order:
      raise ValueError(
          "Coefficient %d is beyond the truncation order %d" % (n, self.order))
    return self.coefficients[n]

  def __len__(self):
    return self.order + 1

  def __iter__(self):
    return iter(self.coefficients)

  def truncate(self, order):
    return TruncatedSeries(self.coefficients, min(order, self.order))

  def _coerce(self, other):
    if isinstance(other, TruncatedSeries):
      return other
    return TruncatedSeries.constant(other, self.order)

  def __eq__(self, other):
    if not isinstance(other, TruncatedSeries):
      return NotImplemented
    order = min(self.order, other.order)
    return all(self.coefficients[n] == other.coefficients[n]
               for n in range(order + 1))

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  __hash__ = None

  def __neg__(self):
    return TruncatedSeries([-c for c in self.coefficients], self.order)

  def __add__(self, other):
    other = self._coerce(other)
    order = min(self.order, other.order)
    return TruncatedSeries(
        [self.coefficients[n] + other.coefficients[n]
         for n in range(order + 1)], order)

  __radd__ = __add__

  def __sub__(self, other):
    return self + (-self._coerce(other))

  def __rsub__(self, other):
    return self._coerce(other) + (-self)

  def __mul__(self, other):
    if not isinstance(other, TruncatedSeries):
      return TruncatedSeries(
          [c * other for c in self.coefficients], self.order)
    order = min(self.order, other.order)
    a, b = self.coefficients, other.coefficients
    product = []
    for n in range(order + 1):
      total = 0
      for k in range(n + 1):
        if a[k] and b[n - k]:
          total = total + a[k] * b[n - k]
      product.append(total)
    return TruncatedSeries(product, order)

  __rmul__ = __mul__

  def __pow__(self, exponent):
    if exponent < 0:
      return self.invert() ** -exponent
    result = TruncatedSeries.constant(1, self.order)
    base = self
    while exponent:
      if exponent & 1:
        result = result * base
      base = base * base
      exponent >>= 1
    return result

  def invert(self):
    """1 / self; the constant term must be a unit."""
    a = self.coefficients
    head = _invert_constant(a[0])
    inverse = [head]
    for n in range(1, self.order + 1):
      total = 0
      for k in range(1, n + 1):
        if a[k] and inverse[n - k]:
          total = total + a[k] * inverse[n - k]
      inverse.append(-total * head)
    return TruncatedSeries(inverse, self.order)

  def __truediv__(self, other):
    if isinstance(other, TruncatedSeries):
      return self * other.invert()
    return self * _invert_constant(other)

  def __rtruediv__(self, other):
    return self._coerce(other) * self.invert()

  def sqrt(self):
    """The square root with constant term 1; requires constant term 1."""
    a = self.coefficients
    if a[0] != 1:
      raise ValueError(
          "sqrt needs constant term 1, got %s" % (a[0],))
    root = [1]
    for n in range(1, self.order + 1):
      total = a[n]
      for k in range(1, n):
        if root[k] and root[n - k]:
          total = total - root[k] * root[n - k]
      root.append(total / 2 if isinstance(total, QTPolynomial)
                  else _exact(Fraction(total) / 2))
    return TruncatedSeries(root, self.order)

  def compose(self, inner):
    """self(inner(x)); inner must have zero constant term."""
    if inner.coefficients[0]:
      raise ValueError("Composition needs an inner series with zero "
                       "constant term, got %s" % (inner.coefficients[0],))
    order = min(self.order, inner.order)
    result = TruncatedSeries.constant(self.coefficients[order], order)
    for c in reversed(self.coefficients[:order]):
      result = result * inner + c
    return result

  def shift(self, k):
    """x^k * self, keeping track of the larger known order."""
    return TruncatedSeries([0] * k + self.coefficients, self.order + k)

  def divide_x(self):
    """self / x; the constant term must vanish."""
    if self.coefficients[0]:
      raise ValueError("Cannot divide by x: constant term is %s" %
                       (self.coefficients[0],))
    if self.order == 0:
      raise ValueError("Cannot divide an order-0 series by x")
    return TruncatedSeries(self.coefficients[1:], self.order - 1)

  def scale_x(self, factor):
    """self(factor * x), for a numeric or q,t-polynomial factor."""
    power = 1
    scaled = []
    for c in self.coefficients:
      scaled.append(c * power)
      power = power * factor
    return TruncatedSeries(scaled, self.order)

  def map_coefficients(self, fn):
    """Applies fn(n, c_n) to each coefficient."""
    return TruncatedSeries(
        [fn(n, c) for n, c in enumerate(self.coefficients)], self.order)

  def evaluate(self, x_value):
    """Float evaluation of the truncated polynomial at x_value."""
    coefficients = np.array([float(c) for c in self.coefficients])
    return float(np.polynomial.polynomial.polyval(x_value, coefficients))

  def as_integers(self):
    """Coefficients as ints; raises if any coefficient is not an integer."""
    result = []
    for n, c in enumerate(self.coefficients):
      if isinstance(c, QTPolynomial) or Fraction(c).denominator != 1:
        raise ValueError("Coefficient %d is not an integer: %s" % (n, c))
      result.append(int(c))
    return result

  def __str__(self):
    return format_coefficients(self.coefficients)

  def __repr__(self):
    return "TruncatedSeries([%s], order=%d)" % (self, self.order)


def format_coefficients(coefficients):
  return ", ".join(str(c) for c in coefficients)


def solve_fixpoint(fn, order, start=None):
  """Iterates series = fn(series) order + 1 times from start (default 1).

  Each iteration fixes at least one more coefficient when fn multiplies its
  argument by x, so the result is exact to the given order.
  """
  series = start if start is not None else TruncatedSeries.constant(1, order)
  for _ in range(order + 1):
    series = fn(series).truncate(order)
  return series
