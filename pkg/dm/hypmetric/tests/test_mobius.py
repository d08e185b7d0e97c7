# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Extended space and Möbius maps."""
from unittest import TestCase

import numpy as np
from hypothesis import given, settings, strategies as st

from ..exception import DegenerateError, DimensionError, DomainError
from ..mobius import INFINITY, chordal_distance, spherical_distance, \
     stereographic_project, stereographic_inverse, absolute_ratio, \
     Inversion, Reflection, MobiusMap, mobius_apply, ball_automorphism, \
     halfspace_automorphism, halfspace_inversion, vertical_reflection, \
     random_mobius, random_ball_automorphism, random_halfspace_map
from ..util import rng


coordinate = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False)


@st.composite
def planar(draw):
  return np.array([draw(coordinate), draw(coordinate)])


class ChordalTests(TestCase):
  def test_values(self):
    o = np.zeros(2); e1 = np.array([1.0, 0.0])
    self.assertEqual(chordal_distance(o, INFINITY), 1.0)
    self.assertEqual(chordal_distance(INFINITY, INFINITY), 0.0)
    self.assertAlmostEqual(chordal_distance(o, e1), 1.0 / np.sqrt(2.0), places=15)
    self.assertAlmostEqual(chordal_distance(e1, -e1), 1.0, places=15)
    self.assertAlmostEqual(spherical_distance(o, INFINITY), 0.5 * np.pi, places=15)

  def test_dimension_mismatch(self):
    with self.assertRaises(DimensionError):
      chordal_distance(np.zeros(2), np.zeros(3))

  @given(planar(), planar(), planar())
  @settings(max_examples=200, deadline=None)
  def test_triangle_inequality(self, x, y, z):
    q = chordal_distance
    self.assertLessEqual(q(x, y), q(x, z) + q(z, y) + 1e-12)
    self.assertLessEqual(q(x, y), 1.0 + 1e-15)
    self.assertEqual(q(x, y), q(y, x))


class StereographicTests(TestCase):
  @given(planar())
  @settings(max_examples=100, deadline=None)
  def test_on_sphere(self, x):
    p = stereographic_project(x)
    center = np.array([0.0, 0.0, 0.5])
    self.assertAlmostEqual(np.linalg.norm(p - center), 0.5, places=12)

  def test_round_trip(self):
    x = np.array([0.3, -2.0, 5.0])
    np.testing.assert_allclose(stereographic_inverse(stereographic_project(x)), x,
                               rtol=1e-12)

  def test_infinity(self):
    p = stereographic_project(INFINITY, 2)
    np.testing.assert_array_equal(p, [0.0, 0.0, 1.0])
    self.assertIs(stereographic_inverse(p), INFINITY)
    with self.assertRaises(DimensionError): stereographic_project(INFINITY)

  def test_chordal_is_euclidean_on_sphere(self):
    x = np.array([0.4, 1.5]); y = np.array([-3.0, 0.2])
    d = np.linalg.norm(stereographic_project(x) - stereographic_project(y))
    self.assertAlmostEqual(d, chordal_distance(x, y), places=14)


class AbsoluteRatioTests(TestCase):
  def test_value(self):
    # |0, 1, -1, inf|: q(0,-1) q(1,inf) / (q(0,1) q(-1,inf))
    r = absolute_ratio([0.0], [1.0], [-1.0], INFINITY)
    self.assertAlmostEqual(r, 1.0, places=14)
    r = absolute_ratio([-1.0], [0.0], [1.0], INFINITY)
    self.assertAlmostEqual(r, 2.0, places=14)

  def test_degenerate(self):
    with self.assertRaises(DegenerateError):
      absolute_ratio([0.0], [0.0], [1.0], [2.0])

  def test_invariance(self):
    generator = rng(4711, 1)
    for _ in range(20):
      m = random_mobius(2, generator)
      pts = [generator.normal(size=2) for _ in range(4)]
      images = [mobius_apply(m, p) for p in pts]
      np.testing.assert_allclose(absolute_ratio(*images), absolute_ratio(*pts),
                                 rtol=1e-9)


class GeneratorTests(TestCase):
  def test_involutions(self):
    x = np.array([0.7, -1.2])
    for g in (Inversion([1.0, 1.0], 2.0), Reflection([1.0, 2.0], 0.5)):
      np.testing.assert_allclose(g(g(x)), x, rtol=1e-12, atol=1e-12)

  def test_inversion_infinity(self):
    g = Inversion([1.0, 0.0], 1.0)
    self.assertIs(g([1.0, 0.0]), INFINITY)
    np.testing.assert_array_equal(g(INFINITY), [1.0, 0.0])
    self.assertIs(Reflection([0.0, 1.0])(INFINITY), INFINITY)

  def test_invalid(self):
    with self.assertRaises(DomainError): Inversion([0.0, 0.0], 0.0)
    with self.assertRaises(DomainError): Reflection([0.0, 0.0])
    with self.assertRaises(DomainError): halfspace_inversion([0.0, 1.0], 1.0)
    with self.assertRaises(DomainError): vertical_reflection([0.0, 1.0])

  def test_composition(self):
    a = Inversion([0.0, 0.0], 1.0); b = Reflection([1.0, 0.0])
    m = MobiusMap([a]) * MobiusMap([b])
    x = np.array([2.0, 1.0])
    np.testing.assert_allclose(m(x), a(b(x)))
    np.testing.assert_allclose(m.inverse()(m(x)), x, rtol=1e-12)
    self.assertEqual(len(m), 2)


class AutomorphismTests(TestCase):
  def test_ball(self):
    a = np.array([0.3, -0.5])
    f = ball_automorphism(a)
    np.testing.assert_allclose(f(a), 0.0, atol=1e-14)
    for theta in np.linspace(0.0, 2.0 * np.pi, 7):
      p = np.array([np.cos(theta), np.sin(theta)])
      self.assertAlmostEqual(np.linalg.norm(f(p)), 1.0, places=12)
    self.assertEqual(len(ball_automorphism(np.zeros(2))), 0)
    with self.assertRaises(DomainError): ball_automorphism([1.0, 0.0])

  def test_halfspace(self):
    x = np.array([1.5, -0.5, 0.25])
    f = halfspace_automorphism(x)
    np.testing.assert_allclose(f(x), [0.0, 0.0, 1.0], atol=1e-14)
    y = f(np.array([3.0, 2.0, 0.1]))
    self.assertGreater(y[-1], 0.0)
    with self.assertRaises(DomainError): halfspace_automorphism([0.0, 0.0])

  def test_random_maps_preserve_domains(self):
    generator = rng(4711, 2)
    for _ in range(10):
      f = random_ball_automorphism(2, generator)
      p = generator.uniform(-0.7, 0.7, size=2)
      self.assertLess(np.linalg.norm(f(p)), 1.0)
      h = random_halfspace_map(2, generator)
      q = np.array([generator.normal(), generator.uniform(0.1, 3.0)])
      self.assertGreater(h(q)[-1], 0.0)
