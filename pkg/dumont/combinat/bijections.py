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
"""Bijections between pattern-avoiding Dumont permutations and other objects.

Every forward map validates its domain and raises ValueError naming the
violated condition. Board pictures use the convention that entry pi(i) is a
dot in column i from the left and row pi(i) from the bottom.
"""

import collections

from dumont.combinat import dumont_perms
from dumont.combinat import dyck
from dumont.combinat import objects
from dumont.combinat import permutations
import numpy as np

Permutation = permutations.Permutation

BoardPair = collections.namedtuple("BoardPair", ["upper", "lower", "n"])


def _as_perm(obj):
  return permutations.as_permutation(obj)


_show = permutations.format_permutation


def _require_avoids(perm, pattern, what):
  if permutations.contains(perm, pattern):
    raise ValueError("%s must avoid %s: %s" %
                     (what, permutations.format_permutation(pattern), perm))


def _require_dumont(perm, kind, pattern):
  kind = dumont_perms.resolve_kind(kind)
  if not dumont_perms.is_dumont(perm, kind):
    raise ValueError("Not a Dumont permutation of the %s kind: %s" %
                     (kind, perm))
  _require_avoids(perm, pattern, "Dumont permutation")


def f1(pi):
  """D^1_{2n}(132) -> S_n(132): keep the odd entries v, mapped to (v+1)/2."""
  pi = _as_perm(pi)
  _require_dumont(pi, dumont_perms.FIRST, (1, 3, 2))
  return Permutation((v + 1) // 2 for v in pi if v % 2)


def f1_inverse(sigma):
  """S_n(132) -> D^1_{2n}(132) by inserting each 2v after a chosen entry."""
  sigma = _as_perm(sigma)
  _require_avoids(sigma, (1, 3, 2), "Permutation")
  odd = [2 * v - 1 for v in sigma]
  word = list(odd)
  for i, v in enumerate(odd):
    at = word.index(v)
    if i + 1 < len(odd) and v > odd[i + 1]:
      word.insert(at + 1, v + 1)
      continue
    bigger = [j for j in range(at) if word[j] > v]
    word.insert(bigger[-1] + 1 if bigger else 0, v + 1)
  return Permutation(word)


def f2(pi):
  """D^1_{2n}(231) -> S_n(231): keep the even entries v, mapped to v/2."""
  pi = _as_perm(pi)
  _require_dumont(pi, dumont_perms.FIRST, (2, 3, 1))
  return Permutation(v // 2 for v in pi if v % 2 == 0)


def f2_inverse(sigma):
  """S_n(231) -> D^1_{2n}(231).

  Doubles every entry, then for i = 1..n inserts 2i-1 just before the first
  entry to the right of 2i that exceeds 2i, or at the end.
  """
  sigma = _as_perm(sigma)
  _require_avoids(sigma, (2, 3, 1), "Permutation")
  word = [2 * v for v in sigma]
  for i in range(1, sigma.n + 1):
    at = word.index(2 * i)
    later = [j for j in range(at + 1, len(word)) if word[j] > 2 * i]
    word.insert(later[0] if later else len(word), 2 * i - 1)
  return Permutation(word)


def _prefix_min_columns(sigma):
  """For each row r, the leftmost column holding a dot in rows 1..r."""
  columns = permutations.inverse(sigma)
  result, current = [], len(sigma) + 1
  for c in columns:
    current = min(current, c)
    result.append(current)
  return result


def phi_krat(sigma):
  """S_n(132) -> Dyck paths, the path hugging the antidiagonal.

  The path runs from (n, 0) to (0, n) with every dot to its right; a west
  step reads U and a north step reads D.
  """
  sigma = _as_perm(sigma)
  _require_avoids(sigma, (1, 3, 2), "Permutation")
  steps = []
  x = sigma.n
  for column in _prefix_min_columns(sigma):
    steps.append("U" * (x - (column - 1)) + "D")
    x = column - 1
  return dyck.DyckPath("".join(steps))


def _north_positions(path, north, west):
  """The x offsets travelled before each north step."""
  offsets, moved = [], 0
  for s in path:
    if s == west:
      moved += 1
    elif s == north:
      offsets.append(moved)
  return offsets


def phi_krat_inverse(path):
  path = dyck.DyckPath(path)
  n = path.semilength
  used = [False] * (n + 2)
  columns = []
  low = n + 1
  for moved in _north_positions(path, "D", "U"):
    column = n - moved + 1
    if column < low:
      low = column
    else:
      column = next((c for c in range(low + 1, n + 1) if not used[c]), None)
      if column is None:
        raise ValueError("Path has no 132-avoiding preimage: %s" % path)
    used[column] = True
    columns.append(column)
  return permutations.inverse(columns)


def phi_R(sigma):
  """S_n(231) -> Dyck paths, phi_krat of the reversal."""
  sigma = _as_perm(sigma)
  _require_avoids(sigma, (2, 3, 1), "Permutation")
  return phi_krat(permutations.reverse(sigma))


def phi_R_inverse(path):
  return permutations.reverse(phi_krat_inverse(path))


def psi_eli(sigma):
  """S_n(321) -> Dyck paths, the north/east path hugging the diagonal.

  The path runs from (0, 0) to (n, n) with every dot to its right; a north
  step reads U and an east step reads D.
  """
  sigma = _as_perm(sigma)
  _require_avoids(sigma, (3, 2, 1), "Permutation")
  columns = permutations.inverse(sigma)
  # Suffix minima of the column sequence fix where each row is entered.
  entry = [0] * sigma.n
  current = sigma.n + 1
  for r in reversed(range(sigma.n)):
    current = min(current, columns[r])
    entry[r] = current - 1
  steps, x = [], 0
  for e in entry:
    steps.append("D" * (e - x) + "U")
    x = e
  steps.append("D" * (sigma.n - x))
  return dyck.DyckPath("".join(steps))


def psi_eli_inverse(path):
  path = dyck.DyckPath(path)
  n = path.semilength
  entry = _north_positions(path, "U", "D")
  columns = [None] * n
  for r in range(n):
    if r + 1 == n or entry[r] < entry[r + 1]:
      columns[r] = entry[r] + 1
  rest = iter(sorted(set(range(1, n + 1)) - set(c for c in columns if c)))
  columns = [c if c else next(rest) for c in columns]
  sigma = permutations.inverse(columns)
  if psi_eli(sigma) != path:
    raise ValueError("Path has no 321-avoiding preimage: %s" % path)
  return sigma


def d2_321_to_dyck(pi):
  """D^2_{2n}(321) -> Dyck paths of semilength n."""
  pi = _as_perm(pi)
  _require_dumont(pi, dumont_perms.SECOND, (3, 2, 1))
  return dyck.g2_inverse(psi_eli(pi))


def dyck_to_d2_321(path):
  pi = psi_eli_inverse(dyck.g2(path))
  _require_dumont(pi, dumont_perms.SECOND, (3, 2, 1))
  return pi


def phi_even(pi):
  """D^2_{2n}(3142) -> E_n: the even values of pi, halved, in order."""
  pi = _as_perm(pi)
  _require_dumont(pi, dumont_perms.SECOND, (3, 1, 4, 2))
  return Permutation(v // 2 for v in pi if v % 2 == 0)


def phi_even_inverse(sigma):
  """E_n -> D^2_{2n}(3142).

  Inserts 2i-1 just before 2 sigma(i) when sigma(i) < i, and just after it
  otherwise.
  """
  sigma = _as_perm(sigma)
  if not objects.is_E(sigma):
    raise ValueError("Not a member of E_%d: %s" % (sigma.n, sigma))
  word = [2 * v for v in sigma]
  for i in range(1, sigma.n + 1):
    at = word.index(2 * sigma(i))
    word.insert(at if sigma(i) < i else at + 1, 2 * i - 1)
  return Permutation(word)


def psi_nc(pi):
  """D^2_{2n}(3142) -> NC(n): the cycles of phi_even(pi) as blocks."""
  sigma = phi_even(pi)
  return objects.SetPartition(permutations.cycle_decomposition(sigma))


def nc_to_d2_3142(partition):
  if isinstance(partition, str):
    partition = objects.parse_partition(partition)
  if not objects.is_noncrossing(partition):
    raise ValueError("Partition is crossing: %s" %
                     objects.format_partition(partition))
  return phi_even_inverse(objects.cycles_to_permutation(partition))


def _require_board_pair(upper, lower):
  if len(upper) != len(lower):
    raise ValueError("Boards differ in size: %s, %s" %
                     (_show(upper), _show(lower)))
  if not objects.is_upper_board(upper):
    raise ValueError("Not an upper board (132-avoiding, on the upper "
                     "shape): %s" % _show(upper))
  if not objects.is_lower_board(lower):
    raise ValueError("Not a lower board (213-avoiding, on the lower "
                     "shape): %s" % _show(lower))


def split_boards(pi):
  """D^2_{2n}(2143) -> BoardPair of the odd and even positions."""
  pi = _as_perm(pi)
  _require_dumont(pi, dumont_perms.SECOND, (2, 1, 4, 3))
  n = pi.n // 2
  upper = Permutation(v - n for v in pi[0::2])
  lower = Permutation(pi[1::2])
  _require_board_pair(upper, lower)
  return BoardPair(upper=upper, lower=lower, n=n)


def merge_boards(pair_or_upper, lower=None):
  """Interleaves (upper(i) + n, lower(i)); accepts a BoardPair or two boards."""
  if lower is None:
    upper, lower = pair_or_upper.upper, pair_or_upper.lower
  else:
    upper = pair_or_upper
  upper, lower = _as_perm(upper), _as_perm(lower)
  _require_board_pair(upper, lower)
  n = upper.n
  return Permutation(v for pair in zip(upper, lower)
                     for v in (pair[0] + n, pair[1]))


def lower_board_to_path(lower):
  """Lower board -> northwest path from (n, 0) to (ceil(n/2), n).

  The path keeps every dot to its left and stays on or above y = 2n - 2x as
  closely as it can. Steps are written over {N, W}.
  """
  lower = _as_perm(lower)
  if not objects.is_lower_board(lower):
    raise ValueError("Not a lower board: %s" % _show(lower))
  n = lower.n
  columns = permutations.inverse(lower)
  # Rightmost dot column among rows r..n bounds the path in row r.
  bound = [0] * n
  current = 0
  for r in reversed(range(n)):
    current = max(current, columns[r])
    bound[r] = current
  steps, x = [], n
  for b in bound:
    steps.append("W" * (x - b) + "N")
    x = b
  steps.append("W" * (x - (n + 1) // 2))
  return "".join(steps)


def _path_bounds(path, n):
  """Validates a northwest path and returns its x offset in each row."""
  if set(path) - set("NW"):
    raise ValueError("Path must use only N and W steps: %r" % path)
  if path.count("N") != n or path.count("W") != n // 2:
    raise ValueError("Path does not end at (%d, %d): %r" %
                     ((n + 1) // 2, n, path))
  x, y = n, 0
  bounds = []
  for i, s in enumerate(path, 1):
    if s == "N":
      bounds.append(x)
      y += 1
    else:
      x -= 1
    if 2 * x + y < 2 * n:
      raise ValueError("Path goes below y = 2n - 2x at prefix index %d" % i)
  return bounds


def path_to_lower_board(path, n=None):
  """Fills rows n..1, each in the rightmost free column left of the path."""
  path = str(path).upper()
  if n is None:
    n = path.count("N")
  bounds = _path_bounds(path, n)
  used = [False] * (n + 1)
  columns = [0] * n
  for r in reversed(range(n)):
    free = [c for c in range(1, bounds[r] + 1) if not used[c]]
    if not free:
      raise ValueError("No free column left of the path in row %d" % (r + 1))
    columns[r] = free[-1]
    used[free[-1]] = True
  lower = permutations.inverse(columns)
  if not objects.is_lower_board(lower):
    raise ValueError("Path does not describe a lower board: %r" % path)
  return lower


def dot_board(perm):
  """The n x n 0/1 array with board[row - 1, column - 1] = 1 at each dot."""
  perm = _as_perm(perm)
  board = np.zeros((perm.n, perm.n), dtype=np.int8)
  if perm.n:
    board[np.asarray(perm) - 1, np.arange(perm.n)] = 1
  return board


def upper_board_shape(n):
  """Mask of the cells an upper board may use, indexed [row-1, col-1]."""
  rows, cols = np.indices((n, n)) + 1
  return rows >= np.maximum(2 * cols - 1 - n, 1)


def lower_board_shape(n):
  rows, cols = np.indices((n, n)) + 1
  return rows <= np.minimum(2 * cols - 1, n)
