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
"""Recognition and pruned generation of Dumont permutations.

A Dumont permutation of the first kind has length 2n and every even value is
followed by a smaller value, while every odd value is followed by a larger
value or ends the word. A Dumont permutation of the second kind has
pi(2i) < 2i and pi(2i-1) >= 2i-1 for every i. Both kinds are counted by the
Genocchi number G_{2n+2}.
"""

import collections
import functools
import itertools

from absl import logging
from dumont.combinat import permutations
import pandas as pd

FIRST = "first"
SECOND = "second"
KINDS = (FIRST, SECOND)

_KIND_ALIASES = {"d1": FIRST, "d2": SECOND, "1": FIRST, "2": SECOND}


def resolve_kind(kind):
  kind = _KIND_ALIASES.get(kind, kind)
  if kind not in KINDS:
    raise ValueError("Unknown Dumont kind %r; expected one of %s" %
                     (kind, KINDS + tuple(_KIND_ALIASES)))
  return kind


def is_dumont(perm, kind):
  """Whether perm is a Dumont permutation of the given kind."""
  kind = resolve_kind(kind)
  perm = tuple(perm)
  if len(perm) % 2:
    return False
  if kind == FIRST:
    for i, v in enumerate(perm):
      last = i + 1 == len(perm)
      if v % 2 == 0 and (last or perm[i + 1] > v):
        return False
      if v % 2 == 1 and not last and perm[i + 1] < v:
        return False
    return True
  return all(_second_kind_allows(j, v) for j, v in enumerate(perm, 1))


def _second_kind_allows(position, value):
  if position % 2 == 0:
    return value < position
  return value >= position


def _first_kind_allows(previous, value):
  if previous % 2 == 0:
    return value < previous
  return value > previous


def _candidates(kind, word, used, size):
  """Values that may be placed next, ascending."""
  position = len(word) + 1
  for v in range(1, size + 1):
    if used[v]:
      continue
    if kind == FIRST:
      if word and not _first_kind_allows(word[-1], v):
        continue
      # An even value cannot end the word.
      if position == size and v % 2 == 0:
        continue
    elif not _second_kind_allows(position, v):
      continue
    yield v


def _backtrack(kind, n, patterns):
  """Yields the word list at every complete leaf, in lexicographic order."""
  size = 2 * n
  word = []
  used = [False] * (size + 1)

  def extend():
    if len(word) == size:
      yield word
      return
    for v in _candidates(kind, word, used, size):
      word.append(v)
      if not any(permutations.completes_occurrence(word, p)
                 for p in patterns):
        used[v] = True
        yield from extend()
        used[v] = False
      word.pop()

  return extend()


def _normalize_patterns(avoid):
  patterns = sorted(set(tuple(permutations.as_permutation(p))
                        for p in (avoid or ())))
  return tuple(patterns)


def generate(kind, n, avoid=()):
  """Yields D_{2n}(avoid) of the given kind in lexicographic order.

  Args:
    kind: "first" or "second" (or "d1"/"d2").
    n: int, half the length.
    avoid: iterable of patterns.

  Yields:
    Permutation objects, each once.
  """
  kind = resolve_kind(kind)
  if n < 0:
    raise ValueError("n must be nonnegative, got %d" % n)
  patterns = _normalize_patterns(avoid)
  if () in patterns:
    return
  for word in _backtrack(kind, n, patterns):
    yield permutations.Permutation(word)


@functools.lru_cache(maxsize=None)
def _cached_members(kind, n, patterns):
  result = tuple(generate(kind, n, patterns))
  logging.debug("Generated %d members of D%s_%d(%s).", len(result),
                kind, 2 * n, ",".join(
                    permutations.format_permutation(p) for p in patterns))
  return result


def members(kind, n, avoid=()):
  """Like generate but materialized and memoized; returns a tuple."""
  return _cached_members(resolve_kind(kind), n, _normalize_patterns(avoid))


def count(kind, n, avoid=()):
  """Cardinality of D_{2n}(avoid) without materializing its members."""
  kind = resolve_kind(kind)
  if n < 0:
    raise ValueError("n must be nonnegative, got %d" % n)
  patterns = _normalize_patterns(avoid)
  if () in patterns:
    return 0
  return sum(1 for _ in _backtrack(kind, n, patterns))


def seidel_triangle(rows):
  """Integer triangle carrying the Genocchi and median Genocchi numbers.

  Row 1 is [1]. An even row holds the right-to-left partial sums of the row
  above; an odd row holds its left-to-right partial sums with the last sum
  repeated. Odd row 2k-1 ends in G_{2k}; even row 2k starts with H_k.

  Args:
    rows: int, number of rows to build.

  Returns:
    a list of lists of ints.
  """
  triangle = [[1]]
  for r in range(2, rows + 1):
    above = triangle[-1]
    if r % 2 == 0:
      row = list(itertools.accumulate(reversed(above)))[::-1]
    else:
      row = list(itertools.accumulate(above))
      row.append(row[-1])
    triangle.append(row)
  return triangle[:rows]


def genocchi(m):
  """The unsigned Genocchi number G_m."""
  if m < 2 or m % 2:
    raise ValueError("Genocchi index must be an even number >= 2, got %d" % m)
  return seidel_triangle(m - 1)[-1][-1]


def median_genocchi(n):
  """The median Genocchi number H_n, equal to the derangements in D2_{2n}."""
  if n < 1:
    raise ValueError("Median Genocchi index must be >= 1, got %d" % n)
  return seidel_triangle(2 * n)[-1][0]


def count_derangements(n, avoid=()):
  """Number of fixed-point-free members of D2_{2n}(avoid)."""
  return sum(1 for p in members(SECOND, n, avoid)
             if all(v != i for i, v in enumerate(p, 1)))


def distribution(kind, n, avoid, stats):
  """Joint frequency table of the named statistics over D_{2n}(avoid).

  Args:
    kind: the Dumont kind.
    n: int, half the length.
    avoid: iterable of patterns.
    stats: list of StatRecord field names ("def" is accepted for "def_").

  Returns:
    a collections.Counter mapping tuples of statistic values to counts.
  """
  names = [permutations.resolve_stat_name(s) for s in stats]
  table = collections.Counter()
  for perm in members(kind, n, avoid):
    record = permutations.statistics(perm)
    table[tuple(getattr(record, s) for s in names)] += 1
  return table


def distribution_frame(kind, n, avoid, stats):
  """Returns distribution() as a pandas.DataFrame sorted by statistic values."""
  names = [permutations.resolve_stat_name(s) for s in stats]
  table = distribution(kind, n, avoid, stats)
  rows = [list(key) + [table[key]] for key in sorted(table)]
  return pd.DataFrame(rows, columns=[s.rstrip("_") for s in names] + ["count"])
