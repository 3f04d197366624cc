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
"""Tests for dumont.scripts.plotting."""

import os

from absl.testing import absltest
from dumont.scripts import plotting
import gin


class SvgStyleTest(absltest.TestCase):

  def tearDown(self):
    gin.clear_config()
    super(SvgStyleTest, self).tearDown()

  def test_defaults(self):
    self.assertEqual(plotting.SvgStyle(24, 12), plotting.svg_style())

  def test_gin(self):
    gin.bind_parameter("svg_style.cell_size", 10)
    self.assertEqual(10, plotting.svg_style().cell_size)

  def test_invalid(self):
    with self.assertRaisesRegex(ValueError, "cell_size must be > 0"):
      plotting.svg_style(cell_size=0)


class DyckSvgTest(absltest.TestCase):

  def test_geometry(self):
    text = plotting.dyck_svg("UUDD")
    self.assertStartsWith(
        text, '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="120" height="72" viewBox="0 0 120 72">')
    self.assertIn('points="12,60 36,36 60,12 84,36 108,60"', text)
    self.assertEqual(5, text.count("<circle"))
    self.assertTrue(text.endswith("</svg>\n"))

  def test_deterministic(self):
    self.assertEqual(plotting.dyck_svg("UDUUDD"), plotting.dyck_svg("UDUUDD"))

  def test_invalid(self):
    with self.assertRaisesRegex(ValueError, "below the axis"):
      plotting.dyck_svg("DU")


class BoardSvgTest(absltest.TestCase):

  def test_lower_board(self):
    text = plotting.board_svg("132")
    self.assertEqual(9, text.count("<rect"))
    self.assertEqual(7, text.count('fill="#d9d9d9"'))
    self.assertEqual(3, text.count("<circle"))
    # NNWN from (3, 0): three north steps and one west step.
    self.assertIn('points="84,84 84,60 84,36 60,36 60,12"', text)

  def test_unshaded(self):
    text = plotting.board_svg("4132")
    self.assertEqual(16, text.count("<rect"))
    self.assertNotIn('fill="#d9d9d9"', text)
    self.assertNotIn("<polyline", text)
    self.assertEqual(4, text.count("<circle"))

  def test_dot_positions(self):
    style = plotting.SvgStyle(cell_size=10, margin=0)
    text = plotting.board_svg("21", style)
    # Position 1 holds value 2: column 1, top row.
    self.assertIn('<circle cx="5" cy="5" r="2.5"', text)
    self.assertIn('<circle cx="15" cy="15" r="2.5"', text)

  def test_write(self):
    output_file = os.path.join(self.create_tempdir().full_path, "b.svg")
    plotting.write_svg(plotting.board_svg("12"), output_file)
    with open(output_file) as f:
      self.assertEqual(plotting.board_svg("12"), f.read())


if __name__ == "__main__":
  absltest.main()
