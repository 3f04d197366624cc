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
"""Deterministic SVG renderings of Dyck paths and permutation boards."""

import collections

from absl import logging
from dumont.combinat import bijections
from dumont.combinat import dyck
from dumont.combinat import objects
from dumont.combinat import permutations
import gin
import numpy as np

SvgStyle = collections.namedtuple("SvgStyle", ["cell_size", "margin"])

_HEADER = ('<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           'width="%s" height="%s" viewBox="0 0 %s %s">')
_SHADE = "#d9d9d9"
_INK = "#000000"
_PATH = "#c0392b"


@gin.configurable
def svg_style(cell_size=24, margin=12):
  if cell_size <= 0 or margin < 0:
    raise ValueError("SVG cell_size must be > 0 and margin >= 0, got %s, %s" %
                     (cell_size, margin))
  return SvgStyle(cell_size=cell_size, margin=margin)


def _num(value):
  return "%g" % value


def _document(width, height, body):
  lines = [_HEADER % (_num(width), _num(height), _num(width), _num(height))]
  lines.extend("  " + element for element in body)
  lines.append("</svg>")
  return "\n".join(lines) + "\n"


def _polyline(points, color, width):
  coords = " ".join("%s,%s" % (_num(x), _num(y)) for x, y in points)
  return ('<polyline points="%s" fill="none" stroke="%s" '
          'stroke-width="%s"/>' % (coords, color, _num(width)))


def _circle(x, y, r, color):
  return '<circle cx="%s" cy="%s" r="%s" fill="%s"/>' % (
      _num(x), _num(y), _num(r), color)


def _rect(x, y, size, fill):
  return ('<rect x="%s" y="%s" width="%s" height="%s" fill="%s" '
          'stroke="%s" stroke-width="1"/>' % (
              _num(x), _num(y), _num(size), _num(size), fill, _INK))


def dyck_svg(path, style=None):
  """Draws a Dyck path on a unit grid with the axis underneath it."""
  path = dyck.DyckPath(path)
  style = style or svg_style()
  cell, margin = style.cell_size, style.margin
  lv = dyck.levels(path)
  top = max(max(lv), 1)
  width = len(path) * cell + 2 * margin
  height = top * cell + 2 * margin
  points = [(margin + i * cell, margin + (top - level) * cell)
            for i, level in enumerate(lv)]
  axis_y = margin + top * cell
  body = ['<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="%s" '
          'stroke-width="1"/>' % (_num(margin), _num(axis_y),
                                   _num(width - margin), _num(axis_y), _INK)]
  body.append(_polyline(points, _PATH, 2))
  body.extend(_circle(x, y, cell / 8, _INK) for x, y in points)
  return _document(width, height, body)


def _board_shape(perm):
  if objects.is_lower_board(perm):
    return bijections.lower_board_shape(perm.n), objects.LOWER
  if objects.is_upper_board(perm):
    return bijections.upper_board_shape(perm.n), objects.UPPER
  return np.zeros((perm.n, perm.n), dtype=bool), None


def board_svg(perm, style=None):
  """Draws the n x n dot board of a permutation.

  Position i is column i from the left and value v is row v from the bottom.
  Cells allowed by the board shape are shaded; a lower board also gets its
  northwest path drawn on top.

  Args:
    perm: a permutation or its text.
    style: an SvgStyle, svg_style() by default.

  Returns:
    the SVG markup as a string.
  """
  perm = permutations.as_permutation(perm)
  style = style or svg_style()
  cell, margin = style.cell_size, style.margin
  n = perm.n
  size = n * cell + 2 * margin
  mask, which = _board_shape(perm)

  def to_svg(x, y):
    return margin + x * cell, margin + (n - y) * cell

  body = []
  for row in range(n, 0, -1):
    for column in range(1, n + 1):
      x, y = to_svg(column - 1, row)
      fill = _SHADE if mask[row - 1, column - 1] else "#ffffff"
      body.append(_rect(x, y, cell, fill))
  for row, column in np.argwhere(bijections.dot_board(perm)):
    x, y = to_svg(column + 0.5, row + 0.5)
    body.append(_circle(x, y, cell / 4, _INK))
  if which == objects.LOWER and n:
    x, y = n, 0
    points = [to_svg(x, y)]
    for step in bijections.lower_board_to_path(perm):
      if step == "N":
        y += 1
      else:
        x -= 1
      points.append(to_svg(x, y))
    body.append(_polyline(points, _PATH, 3))
  return _document(size, size, body)


def write_svg(text, output_file):
  with open(output_file, "w") as f:
    f.write(text)
  logging.info("Wrote SVG to %s.", output_file)
