# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Paths, densities and geodesics."""
from unittest import TestCase

import numpy as np

from ..config import GeodesicConfig
from ..domains import HalfSpace, UnitBall, PuncturedSpace, PuncturedBall, Polygon
from ..exception import DegenerateError, DomainError, ResolutionError
from ..geodesics import Polyline, weighted_length, quasihyperbolic_density, \
     hyperbolic_ball_density, halfspace_density, spherical_density, \
     radial_density, constant_density, spiral_geodesic, ball_geodesic, \
     log_chart, log_chart_inverse, log_chart_points, log_chart_inverse_points, \
     lift, qh_angle, numeric_geodesic
from ..metrics import rho_ball, quasihyperbolic_punctured, rho_halfspace
from ..mobius import spherical_distance

GEODESIC = GeodesicConfig(resolution=128, max_vertices=48, refinement_iterations=32,
                          tolerance=1e-6)

DUMBBELL = [(0.0, 0.0), (1.0, 0.0), (1.0, 0.5), (2.0, 0.5), (2.0, 0.0), (3.0, 0.0),
            (3.0, 1.0), (2.0, 1.0), (2.0, 0.51), (1.0, 0.51), (1.0, 1.0), (0.0, 1.0)]

e1 = np.array([1.0, 0.0]); e2 = np.array([0.0, 1.0])


class PolylineTests(TestCase):
  def test_basics(self):
    p = Polyline([[0.0, 0.0], [3.0, 0.0], [3.0, 4.0]])
    self.assertEqual(p.euclidean_length(), 7.0)
    self.assertEqual(len(p), 3)
    np.testing.assert_array_equal(p.reversed().start, [3.0, 4.0])
    q = p.concat(Polyline([[3.0, 4.0], [0.0, 0.0]]))
    self.assertEqual(q.euclidean_length(), 12.0)
    self.assertRaises(DegenerateError, p.concat, Polyline([[1.0, 1.0], [2.0, 2.0]]))

  def test_degenerate(self):
    self.assertRaises(DegenerateError, Polyline, [[0.0, 0.0]])
    self.assertRaises(DegenerateError, Polyline, [[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]])
    self.assertEqual(len(Polyline.cleaned([[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]])), 2)


class WeightedLengthTests(TestCase):
  def test_constant(self):
    path = Polyline([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]])
    self.assertEqual(weighted_length(path, constant_density(2.0)), 4.0)
    self.assertRaises(DomainError, constant_density, 0.0)

  def test_radial_segment(self):
    # integral of 1/r from 1 to 2
    self.assertAlmostEqual(weighted_length([[1.0, 0.0], [2.0, 0.0]], radial_density()),
                           np.log(2.0), places=12)
    G = UnitBall(2)
    self.assertAlmostEqual(
      weighted_length([[0.0, 0.0], [0.9, 0.0]], quasihyperbolic_density(G)),
      np.log(10.0), places=9)

  def test_hyperbolic_segments(self):
    x = np.array([0.0, 0.0]); y = np.array([0.5, 0.0])
    self.assertAlmostEqual(weighted_length([x, y], hyperbolic_ball_density()),
                           rho_ball(x, y), places=10)
    self.assertAlmostEqual(weighted_length([e2, 3.0 * e2], halfspace_density()),
                           np.log(3.0), places=10)

  def test_spherical(self):
    # a ray from 0 to 1 is a great circle arc
    self.assertAlmostEqual(weighted_length([[0.0, 0.0], [1.0, 0.0]], spherical_density()),
                           spherical_distance([0.0, 0.0], [1.0, 0.0]), places=12)

  def test_exit(self):
    with self.assertRaises(DomainError):
      weighted_length([[0.5, 0.0], [1.5, 0.0]], quasihyperbolic_density(UnitBall(2)))
    with self.assertRaises(DomainError):
      weighted_length([[0.0, 0.0], [1.0, 0.0]], radial_density())


class SpiralTests(TestCase):
  def test_length_converges(self):
    lengths = [weighted_length(spiral_geodesic(e1, e2, n), radial_density())
               for n in (16, 64, 256)]
    target = 0.5 * np.pi
    errors = [abs(l - target) for l in lengths]
    self.assertTrue(errors[0] >= errors[1] >= errors[2])
    self.assertLess(errors[2], 1e-5)

  def test_fine(self):
    p = spiral_geodesic(e1, e2, 10000)
    self.assertAlmostEqual(weighted_length(p, radial_density()), 0.5 * np.pi, delta=1e-6)

  def test_general_position(self):
    x = np.array([1.0, 2.0, 0.5]); y = np.array([-3.0, 0.1, 1.0])
    p = spiral_geodesic(x, y, 2048)
    np.testing.assert_array_equal(p.start, x); np.testing.assert_array_equal(p.end, y)
    self.assertAlmostEqual(weighted_length(p, radial_density()),
                           quasihyperbolic_punctured(x, y), places=5)

  def test_radial(self):
    p = spiral_geodesic(e1, 3.0 * e1)
    self.assertAlmostEqual(weighted_length(p, radial_density()), np.log(3.0), places=10)
    self.assertRaises(DegenerateError, spiral_geodesic, e1, e1)
    self.assertRaises(DomainError, spiral_geodesic, e1, [0.0, 0.0])


class BallGeodesicTests(TestCase):
  def test_orthogonal_circle(self):
    x = np.array([0.5, 0.1]); y = np.array([-0.2, 0.6])
    g = ball_geodesic(x, y)
    self.assertAlmostEqual(np.dot(g.center, g.center), 1.0 + g.radius ** 2, places=10)
    for a in g.ideal:
      self.assertAlmostEqual(np.linalg.norm(a), 1.0, places=10)
    for v in g.polyline.vertices:
      self.assertAlmostEqual(np.linalg.norm(v - g.center), g.radius, places=10)
    self.assertAlmostEqual(weighted_length(g.polyline, hyperbolic_ball_density()),
                           rho_ball(x, y), places=3)

  def test_ideal_order(self):
    x = np.array([0.5, 0.1]); y = np.array([-0.2, 0.6])
    a, b = ball_geodesic(x, y).ideal
    # x* is nearer to x than to y
    self.assertLess(np.linalg.norm(a - x), np.linalg.norm(a - y))
    self.assertLess(np.linalg.norm(b - y), np.linalg.norm(b - x))
    a2, b2 = ball_geodesic(y, x).ideal
    np.testing.assert_allclose(a2, b, atol=1e-10)

  def test_diameter(self):
    g = ball_geodesic(np.array([0.2, 0.0]), np.array([0.6, 0.0]))
    self.assertIsNone(g.center)
    self.assertEqual(g.radius, np.inf)
    np.testing.assert_allclose(g.ideal[0], [-1.0, 0.0], atol=1e-15)
    np.testing.assert_allclose(g.ideal[1], [1.0, 0.0], atol=1e-15)
    g = ball_geodesic(np.zeros(2), np.array([0.0, 0.5]))
    self.assertIsNone(g.center)

  def test_errors(self):
    self.assertRaises(DomainError, ball_geodesic, [0.0, 0.0], [1.0, 0.0])
    self.assertRaises(DegenerateError, ball_geodesic, [0.1, 0.0], [0.1, 0.0])


class ChartTests(TestCase):
  def test_chart(self):
    z = np.array([-1.0, 1.0])
    w = log_chart(z)
    np.testing.assert_allclose(w, [0.5 * np.log(2.0), 0.75 * np.pi])
    np.testing.assert_allclose(log_chart_inverse(w), z, atol=1e-15)
    P = np.array([[1.0, 2.0], [-3.0, -0.5]])
    np.testing.assert_allclose(log_chart_inverse_points(log_chart_points(P)), P)
    self.assertRaises(DomainError, log_chart, [0.0, 0.0])

  def test_lift(self):
    w = lift([0.0, -0.9 * np.pi], np.array([0.0, 0.9 * np.pi]))
    self.assertAlmostEqual(w[1], 1.1 * np.pi)

  def test_qh_angle(self):
    # a right angle at 1 between the radial ray and the circle
    self.assertAlmostEqual(qh_angle(e1, 2.0 * e1, e2), 0.5 * np.pi, places=14)
    self.assertAlmostEqual(qh_angle(e1, 2.0 * e1, 0.5 * e1), np.pi, places=14)
    self.assertRaises(DegenerateError, qh_angle, e1, e1, e2)


class NumericGeodesicTests(TestCase):
  def assertRelative(self, value, target, rtol):
    self.assertLess(abs(value - target), rtol * target, "%r vs %r" % (value, target))

  def test_punctured_plane(self):
    path, b = numeric_geodesic(PuncturedSpace(2), e1, e2, GEODESIC)
    self.assertRelative(b.value, 0.5 * np.pi, 5e-3)
    self.assertGreaterEqual(b.value, 0.5 * np.pi - 1e-9)
    np.testing.assert_array_equal(path.start, e1)
    np.testing.assert_array_equal(path.end, e2)

  def test_punctured_plane_default_grid(self):
    x = np.array([0.5, 0.0]); y = np.array([-1.0, 1.5])
    path, b = numeric_geodesic(PuncturedSpace(2), x, y, GeodesicConfig(tolerance=1e-6))
    self.assertEqual(GeodesicConfig().resolution, 512)
    self.assertRelative(b.value, quasihyperbolic_punctured(x, y), 5e-3)
    self.assertLessEqual(b.lower, quasihyperbolic_punctured(x, y) + 1e-9)

  def test_halfplane(self):
    path, b = numeric_geodesic(HalfSpace(2), e2, 2.0 * e2, GEODESIC)
    self.assertRelative(b.value, np.log(2.0), 5e-3)
    self.assertLessEqual(b.lower, np.log(2.0) + 1e-12)

  def test_ball(self):
    path, b = numeric_geodesic(UnitBall(2), np.zeros(2), 0.9 * e1, GEODESIC)
    self.assertRelative(b.value, np.log(10.0), 5e-3)
    self.assertTrue(UnitBall(2).contains_all(path.vertices).all())

  def test_density_override(self):
    x = np.array([0.0, 0.0]); y = np.array([0.3, 0.4])
    path, b = numeric_geodesic(UnitBall(2), x, y, GEODESIC,
                               density=hyperbolic_ball_density())
    self.assertEqual(b.lower, 0.0)
    self.assertRelative(b.value, rho_ball(x, y), 5e-3)

  def test_halfspace_three(self):
    x = np.array([0.0, 0.0, 1.0]); y = np.array([1.0, 1.0, 1.0])
    path, b = numeric_geodesic(HalfSpace(3), x, y, GEODESIC)
    self.assertEqual(path.dimension, 3)
    self.assertRelative(b.value, rho_halfspace(x, y), 5e-3)

  def test_punctured_ball(self):
    # the circle |z| = 1/2 is a geodesic of length pi/2
    path, b = numeric_geodesic(PuncturedBall(2), 0.5 * e1, 0.5 * e2, GEODESIC)
    self.assertRelative(b.value, 0.5 * np.pi, 1e-3)

  def test_dumbbell_resolution(self):
    G = Polygon(DUMBBELL)
    with self.assertRaises(ResolutionError):
      numeric_geodesic(G, [0.5, 0.5], [2.5, 0.5], GEODESIC.replace(resolution=16))

  def test_coincident(self):
    self.assertRaises(DegenerateError, numeric_geodesic, UnitBall(2), e1 * 0.5, e1 * 0.5)
