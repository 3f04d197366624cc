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
"""Dyck paths: statistics, tunnels and the doubling transforms g1 and g2.

Paths are words over {U, D}; step indices are 1-based. A tunnel joins a U
step to its matching D step; it is "marked" when its left endpoint is the
bottom of a valley, i.e. its U step directly follows a D step.
"""

import collections

Tunnel = collections.namedtuple(
    "Tunnel", ["left_index", "right_index", "level"])


class DyckPath(str):
  """An uppercase U/D word that never goes below the axis and returns to it."""

  def __new__(cls, steps=""):
    steps = str(steps).upper()
    level = 0
    for i, s in enumerate(steps, 1):
      if s == "U":
        level += 1
      elif s == "D":
        level -= 1
      else:
        raise ValueError("Invalid step %r at prefix index %d" % (s, i))
      if level < 0:
        raise ValueError("Path goes below the axis at prefix index %d" % i)
    if level:
      raise ValueError(
          "Path ends at level %d, not 0, at prefix index %d" %
          (level, len(steps)))
    return super(DyckPath, cls).__new__(cls, steps)

  @property
  def semilength(self):
    return len(self) // 2

  def __repr__(self):
    return "DyckPath(%s)" % str.__str__(self)


def parse(text):
  return DyckPath(text.strip())


def render(path):
  return str.__str__(DyckPath(path))


def levels(path):
  """Levels after 0, 1, ..., len(path) steps."""
  result = [0]
  for s in path:
    result.append(result[-1] + (1 if s == "U" else -1))
  return result


def height(path):
  return max(levels(path))


def peak_positions(path):
  """1-based indices k with steps k, k+1 equal to U, D."""
  return [k for k in range(1, len(path)) if path[k - 1:k + 1] == "UD"]


def peaks(path):
  return len(peak_positions(path))


def valleys(path):
  return sum(1 for k in range(1, len(path)) if path[k - 1:k + 1] == "DU")


def tunnels(path):
  """One tunnel per U step, paired like parentheses, ordered by left_index."""
  stack = []
  found = []
  level = 0
  for i, s in enumerate(path, 1):
    if s == "U":
      stack.append((i, level))
      level += 1
    else:
      level -= 1
      left, lvl = stack.pop()
      found.append(Tunnel(left, i, lvl))
  return sorted(found)


def marked_tunnels(path):
  """Tunnels whose left endpoint is the bottom of a valley."""
  return [t for t in tunnels(path)
          if t.left_index > 1 and path[t.left_index - 2] == "D"]


def lambda_stat(path):
  """Max over peaks of peak height plus marked tunnels lying below the peak."""
  lv = levels(path)
  marked = marked_tunnels(path)
  best = 0
  for k in peak_positions(path):
    below = sum(1 for t in marked if t.left_index <= k < t.right_index)
    best = max(best, lv[k] + below)
  return best


def g1(path):
  """Doubles the semilength; height(g1(p)) = lambda_stat(p)."""
  path = DyckPath(path)
  marked = set()
  for t in marked_tunnels(path):
    marked.update((t.left_index, t.right_index))
  out = []
  for i, s in enumerate(path, 1):
    if s == "U":
      out.append("UU" if i in marked else "U")
    else:
      out.append("DD" if i in marked else "DUD")
  return DyckPath("".join(out))


def _is_primitive(word):
  """Whether a nonempty Dyck word returns to the axis only at its end."""
  return bool(word) and 0 not in levels(word)[1:-1]


def _last_component_start(word):
  lv = levels(word)
  return max(i for i in range(len(word)) if lv[i] == 0)


def _g1_inverse(word):
  if not word:
    return ""
  start = _last_component_start(word)
  prefix, last = word[:start], word[start:]
  if last == "UD":
    if not _is_primitive(prefix):
      raise ValueError("Path is not in the image of g1: %s" % word)
    return "U" + _g1_inverse(prefix[1:-1]) + "D"
  inner = last[1:-1]
  if not prefix or not _is_primitive(inner):
    raise ValueError("Path is not in the image of g1: %s" % word)
  return _g1_inverse(prefix) + "U" + _g1_inverse(inner[1:-1]) + "D"


def g1_inverse(path):
  """Inverts g1 by the grammar C = A UU B DD | U A D U D."""
  path = DyckPath(path)
  result = DyckPath(_g1_inverse(str(path)))
  if g1(result) != path:
    raise ValueError("Path is not in the image of g1: %s" % path)
  return result


def g2(path):
  """Replaces every D with UDD."""
  return DyckPath(str(DyckPath(path)).replace("D", "UDD"))


def g2_inverse(path):
  """Replaces every UDD with D, scanning left to right."""
  path = str(DyckPath(path))
  out = []
  i = 0
  while i < len(path):
    if path.startswith("UDD", i):
      out.append("D")
      i += 3
    elif path[i] == "U":
      out.append("U")
      i += 1
    else:
      raise ValueError(
          "Path is not in the image of g2: stray D at prefix index %d" %
          (i + 1))
  return DyckPath("".join(out))


def enumerate_dyck(n):
  """Yields all Dyck paths of semilength n, lexicographically with U < D."""
  steps = []

  def extend(ups, downs):
    if downs == n:
      yield DyckPath("".join(steps))
      return
    if ups < n:
      steps.append("U")
      yield from extend(ups + 1, downs)
      steps.pop()
    if downs < ups:
      steps.append("D")
      yield from extend(ups, downs + 1)
      steps.pop()

  return extend(0, 0)
