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
"""Noncrossing partitions, E_n permutations, boards and northeast paths."""

import functools
import itertools
import math

from dumont.combinat import permutations

Permutation = permutations.Permutation


class SetPartition(tuple):
  """A set partition of [n] in canonical form.

  Blocks are sorted by their minimum; each block is stored in decreasing
  order, which is also its cyclic order in cycles_to_permutation.
  """

  def __new__(cls, blocks=()):
    blocks = [tuple(sorted(set(b), reverse=True)) for b in blocks]
    if any(not b for b in blocks):
      raise ValueError("Partition blocks must be nonempty: %s" % blocks)
    elements = sorted(v for b in blocks for v in b)
    if elements != list(range(1, len(elements) + 1)):
      raise ValueError("Blocks do not partition 1..%d: %s" %
                       (len(elements), blocks))
    return super(SetPartition, cls).__new__(cls, sorted(blocks, key=min))

  @property
  def n(self):
    return sum(len(b) for b in self)

  def __str__(self):
    return format_partition(self)


def parse_partition(text):
  """Parses "641/32/5/87"; blocks may be comma-separated ("12,8/3")."""
  text = text.strip()
  if not text:
    return SetPartition(())
  blocks = []
  for chunk in text.split("/"):
    tokens = chunk.split(",") if "," in chunk else list(chunk.strip())
    if not tokens or not all(t.strip().isdigit() for t in tokens):
      raise ValueError("Malformed partition text: %r" % text)
    blocks.append([int(t) for t in tokens])
  return SetPartition(blocks)


def format_partition(partition):
  sep = "" if partition.n <= 9 else ","
  return "/".join(sep.join(str(v) for v in b) for b in partition)


def parts(partition):
  return len(partition)


def is_noncrossing(partition):
  """Whether no a < b < c < d has a, c in one block and b, d in another."""
  blocks = [set(b) for b in partition]
  for first, second in itertools.combinations(blocks, 2):
    labels = [v in first for v in sorted(first | second)]
    runs = 1 + sum(1 for a, b in zip(labels, labels[1:]) if a != b)
    if runs >= 4:
      return False
  return True


def _noncrossing_blocks(elements):
  """Yields lists of blocks partitioning the sorted tuple elements."""
  if not elements:
    yield []
    return
  first, rest = elements[0], elements[1:]
  for size in range(len(rest) + 1):
    for chosen in itertools.combinations(range(len(rest)), size):
      cuts = [-1] + list(chosen) + [len(rest)]
      gaps = [rest[a + 1:b] for a, b in zip(cuts, cuts[1:])]
      block = [first] + [rest[i] for i in chosen]
      for filling in itertools.product(*[
          list(_noncrossing_blocks(g)) for g in gaps]):
        yield [block] + [b for f in filling for b in f]


def enumerate_nc(n):
  """Yields every noncrossing partition of [n]."""
  for blocks in _noncrossing_blocks(tuple(range(1, n + 1))):
    yield SetPartition(blocks)


def narayana(n, k):
  """N(n, k) = C(n, k) C(n, k+1) / n: noncrossing partitions into n-k parts."""
  if not 1 <= k + 1 <= n:
    raise ValueError("Narayana number needs 1 <= k+1 <= n, got n=%d, k=%d" %
                     (n, k))
  return math.comb(n, k) * math.comb(n, k + 1) // n


def cycles_to_permutation(partition):
  """The permutation whose cycles are the blocks, each in decreasing order."""
  image = {}
  for block in partition:
    for a, b in zip(block, block[1:] + block[:1]):
      image[a] = b
  return Permutation(image[i] for i in range(1, partition.n + 1))


def is_E(sigma):
  """Recognizes E_n by the grammar sigma = (k, rc(sigma'), k + sigma'')."""
  sigma = tuple(sigma)
  if not sigma:
    return True
  k = sigma[0]
  head, tail = sigma[1:k], sigma[k:]
  if sorted(head) != list(range(1, k)) or sorted(tail) != list(
      range(k + 1, len(sigma) + 1)):
    return False
  return (is_E(permutations.reverse_complement(head)) and
          is_E(v - k for v in tail))


@functools.lru_cache(maxsize=None)
def _e_members(n):
  if n == 0:
    return (Permutation(()),)
  found = []
  for k in range(1, n + 1):
    for inner in _e_members(k - 1):
      head = tuple(permutations.reverse_complement(inner))
      for outer in _e_members(n - k):
        found.append(Permutation((k,) + head + tuple(k + v for v in outer)))
  return tuple(sorted(found))


def enumerate_E(n):
  """Members of E_n generated by the block grammar, lexicographically."""
  return iter(_e_members(n))


def upper_board_allows(n, position, value):
  return value >= max(2 * position - 1 - n, 1)


def lower_board_allows(n, position, value):
  return value <= min(2 * position - 1, n)


def _is_rearrangement(seq):
  return sorted(seq) == list(range(1, len(seq) + 1))


def is_upper_board(sigma):
  sigma = tuple(sigma)
  n = len(sigma)
  return (_is_rearrangement(sigma) and
          all(upper_board_allows(n, i, v) for i, v in enumerate(sigma, 1)) and
          permutations.avoids(sigma, (1, 3, 2)))


def is_lower_board(sigma):
  sigma = tuple(sigma)
  n = len(sigma)
  return (_is_rearrangement(sigma) and
          all(lower_board_allows(n, i, v) for i, v in enumerate(sigma, 1)) and
          permutations.avoids(sigma, (2, 1, 3)))


UPPER = "upper"
LOWER = "lower"


def enumerate_boards(n, which):
  """Yields the upper (132-avoiding) or lower (213-avoiding) boards of S_n."""
  if which == UPPER:
    return permutations.enumerate_permutations(
        n, [(1, 3, 2)], functools.partial(upper_board_allows, n))
  if which == LOWER:
    return permutations.enumerate_permutations(
        n, [(2, 1, 3)], functools.partial(lower_board_allows, n))
  raise ValueError(
      "Board kind must be %r or %r, got %r" % (UPPER, LOWER, which))


def fixed_point_cells(n):
  """Upper-board cells (i, 2i-1-n) that become fixed points when merged."""
  return [(i, 2 * i - 1 - n) for i in range(1, n + 1) if 2 * i - 1 - n >= 1]


def derangement_board_to_lower(upper):
  """Rotates an upper board with no dot on a fixed-point cell by 180 degrees."""
  upper = permutations.as_permutation(upper)
  if not is_upper_board(upper):
    raise ValueError("Not an upper board: %s" %
                     permutations.format_permutation(upper))
  if any(upper(i) == v for i, v in fixed_point_cells(upper.n)):
    raise ValueError("Upper board has a dot on a fixed-point cell: %s" %
                     permutations.format_permutation(upper))
  return permutations.reverse_complement(upper)


def lower_to_derangement_board(lower):
  lower = permutations.as_permutation(lower)
  if not is_lower_board(lower):
    raise ValueError("Not a lower board: %s" %
                     permutations.format_permutation(lower))
  return permutations.reverse_complement(lower)


def count_ne_paths(n):
  """Northeast paths from (0,0) to (n, n//2) never rising above y = x/2."""
  top = n // 2
  ways = [[0] * (top + 1) for _ in range(n + 1)]
  ways[0][0] = 1
  for x in range(n + 1):
    for y in range(top + 1):
      if 2 * y > x or (x, y) == (0, 0):
        continue
      ways[x][y] = (ways[x - 1][y] if x else 0) + (
          ways[x][y - 1] if y else 0)
  return ways[n][top]


def enumerate_ne_paths(n):
  """Yields the paths counted by count_ne_paths as words over {N, E}."""
  top = n // 2
  steps = []

  def extend(x, y):
    if (x, y) == (n, top):
      yield "".join(steps)
      return
    if x < n:
      steps.append("E")
      yield from extend(x + 1, y)
      steps.pop()
    if y < top and 2 * (y + 1) <= x:
      steps.append("N")
      yield from extend(x, y + 1)
      steps.pop()

  return extend(0, 0)
