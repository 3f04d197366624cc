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
"""Permutations, classical pattern containment and permutation statistics.

All positions and values are 1-based, matching one-line notation. A
permutation of length 0 is allowed; it avoids every nonempty pattern and all
of its statistics are 0.
"""

import bisect
import collections
import functools
import re

# Order of the fields is the order statistics are reported in.
STAT_NAMES = (
    "fix", "fix_minus1", "exc", "def_", "lis", "lds", "rlm", "two_cycles")

# "def" is a keyword, so the field is stored as "def_".
_STAT_ALIASES = {"def": "def_"}

StatRecord = collections.namedtuple("StatRecord", STAT_NAMES)

EMPTY_TEXT = "()"


class Permutation(tuple):
  """A permutation of {1, ..., n} in one-line notation."""

  def __new__(cls, word=()):
    word = tuple(int(v) for v in word)
    if sorted(word) != list(range(1, len(word) + 1)):
      raise ValueError(
          "Not a rearrangement of 1..%d: %s" % (len(word), list(word)))
    return super(Permutation, cls).__new__(cls, word)

  @property
  def n(self):
    return len(self)

  def __call__(self, i):
    """Returns the value at 1-based position i."""
    return self[i - 1]

  def __str__(self):
    return format_permutation(self)

  def __repr__(self):
    return "Permutation(%s)" % format_permutation(self)


def parse_permutation(text):
  """Parses one-line notation.

  Comma- or space-separated values are always accepted; a bare digit string
  ("2143") is read one digit per value.

  Args:
    text: str, the permutation text. "" and "()" denote the empty permutation.

  Returns:
    a Permutation.
  """
  text = text.strip()
  if text in ("", EMPTY_TEXT):
    return Permutation(())
  if re.search(r"[,\s]", text):
    tokens = [t for t in re.split(r"[,\s]+", text.strip("()")) if t]
  elif text.isdigit():
    tokens = list(text)
  else:
    raise ValueError("Malformed permutation text: %r" % text)
  if not all(t.isdigit() for t in tokens):
    raise ValueError("Malformed permutation text: %r" % text)
  return Permutation(int(t) for t in tokens)


def format_permutation(perm):
  if not perm:
    return EMPTY_TEXT
  if max(perm) <= 9:
    return "".join(str(v) for v in perm)
  return ",".join(str(v) for v in perm)


def as_permutation(obj):
  """Coerces a Permutation, a sequence of values or a text to a Permutation."""
  if isinstance(obj, Permutation):
    return obj
  if isinstance(obj, str):
    return parse_permutation(obj)
  return Permutation(obj)


def parse_patterns(text):
  """Parses a comma-separated list of digit-string patterns ("132,4213")."""
  if not text:
    return ()
  return tuple(parse_permutation(t) for t in text.split(",") if t.strip())


def standardize(seq):
  """The permutation order-isomorphic to a sequence of distinct values."""
  ranks = {v: r for r, v in enumerate(sorted(seq), 1)}
  if len(ranks) != len(seq):
    raise ValueError("Cannot standardize a sequence with repeats: %s" % (seq,))
  return Permutation(ranks[v] for v in seq)


@functools.lru_cache(maxsize=None)
def _order_neighbors(pattern):
  """Per index, the earlier indices of the nearest smaller and larger values."""
  below, above = [], []
  for j, v in enumerate(pattern):
    lo = hi = None
    for i in range(j):
      w = pattern[i]
      if w < v and (lo is None or w > pattern[lo]):
        lo = i
      if w > v and (hi is None or w < pattern[hi]):
        hi = i
    below.append(lo)
    above.append(hi)
  return tuple(below), tuple(above)


def _search(word, pattern, stop, fixed=None):
  """Depth-first search for an occurrence of pattern in word[:stop].

  Args:
    word: tuple of distinct values.
    pattern: tuple, the pattern.
    stop: int, positions >= stop are not used.
    fixed: optional (value, smaller) pair; entry j of an occurrence must lie
      below value iff smaller[j].

  Returns:
    True iff an occurrence exists.
  """
  k = len(pattern)
  below, above = _order_neighbors(pattern)
  chosen = [0] * k

  def extend(j, start):
    if j == k:
      return True
    lo = chosen[below[j]] if below[j] is not None else 0
    hi = chosen[above[j]] if above[j] is not None else float("inf")
    if fixed is not None:
      if fixed[1][j]:
        hi = min(hi, fixed[0])
      else:
        lo = max(lo, fixed[0])
    for p in range(start, stop - (k - j) + 1):
      v = word[p]
      if lo < v < hi:
        chosen[j] = v
        if extend(j + 1, p + 1):
          return True
    return False

  return extend(0, 0)


def contains(perm, pattern):
  """Whether some subsequence of perm is order-isomorphic to pattern."""
  perm, pattern = tuple(perm), tuple(pattern)
  if not pattern:
    return True
  if len(pattern) > len(perm):
    return False
  return _search(perm, pattern, len(perm))


def avoids(perm, pattern):
  return not contains(perm, pattern)


def avoids_all(perm, patterns):
  return all(avoids(perm, p) for p in patterns)


def completes_occurrence(word, pattern):
  """Whether word has an occurrence of pattern that uses its last entry.

  Used while growing a word left to right: since containment is monotone
  under extension, only occurrences ending at the new entry need checking.
  """
  k = len(pattern)
  if k == 0:
    return True
  if k > len(word):
    return False
  if k == 1:
    return True
  head = pattern[:-1]
  # For each head entry, whether it must lie below the last entry.
  smaller = tuple(v < pattern[-1] for v in head)
  return _search(word, head, len(word) - 1, fixed=(word[-1], smaller))


def reverse(perm):
  return Permutation(tuple(perm)[::-1])


def complement(perm):
  n = len(perm)
  return Permutation(n + 1 - v for v in perm)


def reverse_complement(perm):
  return reverse(complement(perm))


def inverse(perm):
  result = [0] * len(perm)
  for i, v in enumerate(perm, 1):
    result[v - 1] = i
  return Permutation(result)


SYMMETRIES = collections.OrderedDict([
    ("reverse", reverse),
    ("complement", complement),
    ("reverse_complement", reverse_complement),
    ("inverse", inverse),
])


def symmetry(perm, op):
  if op not in SYMMETRIES:
    raise ValueError(
        "Unknown symmetry %r; expected one of %s" % (op, list(SYMMETRIES)))
  return SYMMETRIES[op](as_permutation(perm))


def lis(perm):
  """Length of the longest increasing subsequence (patience sorting)."""
  tails = []
  for v in perm:
    i = bisect.bisect_left(tails, v)
    if i == len(tails):
      tails.append(v)
    else:
      tails[i] = v
  return len(tails)


def lds(perm):
  return lis([-v for v in perm])


def rlm(perm):
  """Number of right-to-left minima."""
  count = 0
  current = float("inf")
  for v in reversed(tuple(perm)):
    if v < current:
      count += 1
      current = v
  return count


def resolve_stat_name(name):
  name = _STAT_ALIASES.get(name, name)
  if name not in STAT_NAMES:
    raise ValueError(
        "Unknown statistic %r; expected one of %s" % (name, STAT_NAMES))
  return name


def statistics(perm):
  """Computes every StatRecord field of a permutation."""
  perm = tuple(perm)
  fix = fix_minus1 = exc = dfc = two_cycles = 0
  for i, v in enumerate(perm, 1):
    if v == i:
      fix += 1
    elif v > i:
      exc += 1
    else:
      dfc += 1
      if v == i - 1:
        fix_minus1 += 1
      if perm[v - 1] == i:
        two_cycles += 1
  return StatRecord(
      fix=fix, fix_minus1=fix_minus1, exc=exc, def_=dfc, lis=lis(perm),
      lds=lds(perm), rlm=rlm(perm), two_cycles=two_cycles)


def cycle_decomposition(perm):
  """Disjoint cycles, sorted by minimum element, each started at its maximum.

  Args:
    perm: a permutation.

  Returns:
    a tuple of tuples; following perm from each entry gives the next one.
  """
  perm = tuple(perm)
  seen = set()
  cycles = []
  for start in range(1, len(perm) + 1):
    if start in seen:
      continue
    cycle = [start]
    seen.add(start)
    v = perm[start - 1]
    while v != start:
      cycle.append(v)
      seen.add(v)
      v = perm[v - 1]
    top = cycle.index(max(cycle))
    cycles.append(tuple(cycle[top:] + cycle[:top]))
  return tuple(sorted(cycles, key=min))


def format_cycles(cycles):
  sep = "" if all(v <= 9 for c in cycles for v in c) else ","
  return "".join("(%s)" % sep.join(str(v) for v in c) for c in cycles)


def even_subsequence(perm):
  return tuple(v for v in perm if v % 2 == 0)


def odd_subsequence(perm):
  return tuple(v for v in perm if v % 2 == 1)


def is_decreasing_decomposable(perm):
  """Whether perm splits as a prefix lying entirely above a nonempty suffix."""
  perm = tuple(perm)
  return any(min(perm[:s]) > max(perm[s:]) for s in range(1, len(perm)))


def is_increasing_decomposable(perm):
  perm = tuple(perm)
  return any(max(perm[:s]) < min(perm[s:]) for s in range(1, len(perm)))


def enumerate_permutations(n, avoid=(), allowed=None):
  """Yields the members of S_n avoiding every pattern, lexicographically.

  Args:
    n: int, the length.
    avoid: iterable of patterns.
    allowed: optional predicate (position, value) -> bool restricting which
      value may sit at each 1-based position.

  Yields:
    Permutation objects.
  """
  patterns = tuple(tuple(as_permutation(p)) for p in avoid)
  if any(not p for p in patterns):
    return
  word = []
  used = [False] * (n + 1)

  def extend():
    if len(word) == n:
      yield Permutation(word)
      return
    for v in range(1, n + 1):
      if used[v] or (allowed and not allowed(len(word) + 1, v)):
        continue
      word.append(v)
      if not any(completes_occurrence(word, p) for p in patterns):
        used[v] = True
        yield from extend()
        used[v] = False
      word.pop()

  yield from extend()
