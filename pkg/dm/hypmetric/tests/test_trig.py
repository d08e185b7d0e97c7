# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Quasihyperbolic trigonometry of the punctured plane."""
from unittest import TestCase

import numpy as np
from hypothesis import given, settings, strategies as st

from ..config import GeodesicConfig
from ..domains import UnitBall, PuncturedSpace
from ..exception import DegenerateError, DomainError, ParameterError
from ..trig import law_of_cosines_check, heron, heron_area_check, \
     halfplane_cosine_check, cosine_exploration, ratio_field, levelset_trace, \
     ChartTriangle, TRIANGLE, TRIGON


def polar(r, theta): return np.array([r * np.cos(theta), r * np.sin(theta)])


class LawOfCosinesTests(TestCase):
  def test_right_triangle(self):
    r = law_of_cosines_check([1.0, 0.0], [0.0, 1.0], [2.0, 0.0])
    self.assertEqual(r.case, TRIANGLE)
    self.assertAlmostEqual(r.residual, 0.0, places=12)

  def test_isosceles(self):
    # z on the unit circle between x and y
    x = polar(1.0, 0.0); y = polar(1.0, 1.2); z = polar(2.0, 0.6)
    r = law_of_cosines_check(x, y, z)
    self.assertEqual(r.case, TRIANGLE)
    self.assertAlmostEqual(r.residual, 0.0, places=12)

  def test_trigon(self):
    x = polar(1.0, 0.0); z = polar(1.0, 2.0 * np.pi / 3.0); y = polar(1.0, 4.0 * np.pi / 3.0)
    r = law_of_cosines_check(x, y, z)
    self.assertEqual(r.case, TRIGON)
    self.assertAlmostEqual(r.alpha, 2.0 * np.pi / 3.0, places=12)
    self.assertAlmostEqual(r.gamma, np.pi, places=12)
    self.assertAlmostEqual(r.residual, 0.0, places=12)

  @given(st.floats(min_value=-2.0, max_value=2.0), st.floats(min_value=-2.0, max_value=2.0),
         st.floats(min_value=-2.0, max_value=2.0),
         st.floats(min_value=0.05, max_value=0.9), st.floats(min_value=0.05, max_value=0.9),
         st.floats(min_value=-np.pi, max_value=np.pi))
  @settings(max_examples=200, deadline=None)
  def test_triangles(self, u0, u1, u2, a, b, base):
    # x, z, y within a half turn
    x = polar(np.exp(u0), base)
    z = polar(np.exp(u2), base + a * np.pi * 0.5)
    y = polar(np.exp(u1), base + (a + b) * np.pi * 0.5)
    r = law_of_cosines_check(x, y, z)
    self.assertEqual(r.case, TRIANGLE)
    self.assertLess(abs(r.residual), 1e-9)

  def test_degenerate(self):
    e1 = np.array([1.0, 0.0])
    self.assertRaises(DegenerateError, law_of_cosines_check, e1, e1, [0.0, 1.0])
    self.assertRaises(DegenerateError, law_of_cosines_check, e1, [0.0, 1.0], -e1)
    self.assertRaises(DomainError, law_of_cosines_check, e1, [0.0, 0.0], [0.0, 1.0])

  def test_collinear(self):
    # three points on a ray span a flat chart triangle
    T = ChartTriangle(np.array([1.0, 0.0]), np.array([4.0, 0.0]), np.array([2.0, 0.0]))
    self.assertEqual(T.signed_area, 0.0)
    self.assertAlmostEqual(T.gamma, np.pi)


class HeronTests(TestCase):
  def test_values(self):
    self.assertAlmostEqual(heron(3.0, 4.0, 5.0), 6.0, places=14)
    self.assertEqual(heron(1.0, 1.0, 2.0), 0.0)
    self.assertAlmostEqual(heron(1.0, 1.0, 1.0), np.sqrt(3.0) / 4.0, places=15)

  def test_area(self):
    h, area, residual = heron_area_check([1.0, 0.0], [0.0, 1.0], [2.0, 0.0])
    self.assertAlmostEqual(area, 0.25 * np.pi * np.log(2.0), places=14)
    self.assertLess(residual, 1e-12)

  def test_trigon_rejected(self):
    x = polar(1.0, 0.0); z = polar(1.0, 2.0 * np.pi / 3.0); y = polar(1.0, 4.0 * np.pi / 3.0)
    self.assertRaises(DegenerateError, heron_area_check, x, y, z)


class HalfplaneTests(TestCase):
  def test_examples(self):
    for x, y, z in (([0.0, 1.0], [1.0, 1.0], [0.0, 2.0]),
                    ([-2.0, 0.5], [3.0, 0.1], [0.0, 4.0]),
                    ([0.0, 1.0], [0.0, 3.0], [0.0, 2.0])):
      r = halfplane_cosine_check(x, y, z)
      self.assertGreaterEqual(r.residual, -1e-12)

  def test_geodesic_vertex(self):
    # z on the geodesic from x to y: gamma = pi and equality
    r = halfplane_cosine_check([0.0, 1.0], [0.0, 3.0], [0.0, 2.0])
    self.assertAlmostEqual(r.gamma, np.pi)
    self.assertAlmostEqual(r.residual, 0.0, places=12)

  def test_errors(self):
    self.assertRaises(DomainError, halfplane_cosine_check, [0.0, 1.0], [1.0, 0.0], [0.0, 2.0])
    self.assertRaises(DegenerateError, halfplane_cosine_check, [0.0, 1.0], [0.0, 1.0],
                      [0.0, 2.0])


class ExplorationTests(TestCase):
  def test_punctured_plane(self):
    config = GeodesicConfig(resolution=64, max_vertices=24, refinement_iterations=16,
                            tolerance=1e-5)
    records = cosine_exploration(PuncturedSpace(2), count=2, seed=1, geodesic_config=config)
    self.assertLessEqual(len(records), 2)
    for r in records: self.assertEqual(r.case, "explore")

  def test_planar_only(self):
    self.assertRaises(ParameterError, cosine_exploration, UnitBall(3))


class LevelSetTests(TestCase):
  def test_ratio_field(self):
    self.assertEqual(ratio_field(np.array(0.0), np.array(0.0)), 1.0)
    self.assertAlmostEqual(float(ratio_field(np.array(0.0), np.array(np.pi))),
                           np.pi / np.log(3.0), places=14)
    u = np.linspace(-3.0, 3.0, 13); v = np.linspace(-3.0, 3.0, 13)
    np.testing.assert_allclose(ratio_field(u, v), ratio_field(-u, v), rtol=1e-12)
    self.assertTrue(np.all(ratio_field(u, v) >= 1.0 - 1e-12))

  def test_levels(self):
    sets = levelset_trace((1.5, 2.5, 2.9), resolution=129)
    self.assertFalse(sets[0].empty)
    self.assertFalse(sets[1].empty)
    self.assertTrue(sets[2].empty)
    for c in sets[0].contours:
      z = c[len(c) // 2]
      u, v = np.log(np.hypot(z[0], z[1])), np.arctan2(z[1], z[0])
      self.assertAlmostEqual(float(ratio_field(np.array(u), np.array(v))), 1.5, delta=0.05)

  def test_symmetry(self):
    ls, = levelset_trace((2.0,), resolution=129)
    W = np.concatenate(ls.chart_contours)
    # every contour point has a mirror image under u -> -u
    for w in W[::7]:
      self.assertLess(np.min(np.linalg.norm(W - w * np.array([-1.0, 1.0]), axis=1)),
                      2.0 * ls.cell)

  def test_invalid_level(self):
    self.assertRaises(ParameterError, levelset_trace, (1.0,))
    self.assertRaises(ParameterError, levelset_trace, (0.5, 2.0))
