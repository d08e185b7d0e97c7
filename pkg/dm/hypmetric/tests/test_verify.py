# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Verification suites and reports."""
from io import StringIO
from unittest import TestCase

import numpy as np

from ..config import SupSearchConfig, GeodesicConfig, TraceConfig
from ..domains import HalfSpace, UnitBall, PuncturedSpace, PuncturedBall, Sector, \
     Polygon
from ..exception import DomainError, ParameterError
from ..report import write_report, read_report
from ..verify import VerificationReport, all_passed, sample_pairs, inequality_suite, \
     uniformity_constant, uniformity_estimate, phi_uniform_check, Linear, Log, \
     four_definition_check, ball_conversion_check, transform_suite, m_ball_scan, \
     convexity_threshold_check, diameter_check, levelset_check, trig_suite, \
     run_suite, describe, SUITES

GEODESIC = GeodesicConfig(resolution=128, max_vertices=48, refinement_iterations=32,
                          tolerance=1e-6)
SUP = SupSearchConfig(boundary_samples=256, pair_samples=64, refinement_iterations=32)

L_SHAPE = [(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)]


def strict_failures(reports):
  return [r for r in reports if not r.ok]


class ReportTests(TestCase):
  def test_semantics(self):
    r = VerificationReport("c", "ball2", 3, -1e-13, (np.zeros(2),), tolerance=1e-12)
    self.assertTrue(r.passed)
    r = VerificationReport("c", "ball2", 3, -1.0, (np.zeros(2),))
    self.assertFalse(r.passed); self.assertFalse(r.ok); self.assertTrue(r.strict)
    r = VerificationReport("c", "ball2", 3, -1.0, (np.zeros(2),), evidence=True)
    self.assertFalse(r.passed); self.assertTrue(r.ok)
    self.assertTrue(all_passed([r]))
    r = VerificationReport("c", "ball2", 3, 5.0, (), passed=False)
    self.assertFalse(r.passed)

  def test_failure_needs_witness(self):
    self.assertRaises(ParameterError, VerificationReport, "c", "ball2", 3, -1.0)

  def test_describe(self):
    r = VerificationReport("check", "half2", 1, -1.0, (np.array([0.5, 1.0]),))
    line = describe(r)
    self.assertIn("FAIL", line)
    self.assertIn("(0.5,1)", line)

  def test_document(self):
    reports = [VerificationReport("a", "ball2", 2, 0.5, (np.array([0.1, 0.2]),),
                                  config=dict(seed=1), details=dict(found="x")),
               VerificationReport("b", "ball2", 2, -1.0, (np.array([0.1, 0.2]),),
                                  evidence=True)]
    f = StringIO()
    write_report(reports, f, dict(suite="test", seed=1))
    doc = read_report(StringIO(f.getvalue()))
    self.assertEqual(doc.get("run", "suite"), "test")
    self.assertEqual(doc.get("check 001", "passed"), "true")
    self.assertEqual(doc.get("check 001", "witness"), "0.1,0.2")
    self.assertEqual(doc.get("check 001", "config.seed"), "1")
    self.assertEqual(doc.get("check 001", "detail.found"), "x")
    self.assertEqual(doc.get("check 002", "level"), "evidence")
    self.assertEqual(float(doc.get("check 002", "margin")), -1.0)


class SamplingTests(TestCase):
  def test_prefix(self):
    G = UnitBall(2)
    X1, Y1 = sample_pairs(G, 32, 4711)
    X2, Y2 = sample_pairs(G, 96, 4711)
    self.assertEqual(len(X2), 96)
    n = len(X1)
    np.testing.assert_array_equal(X1, X2[:n]); np.testing.assert_array_equal(Y1, Y2[:n])
    self.assertTrue(G.contains_all(X2).all() and G.contains_all(Y2).all())

  def test_seed(self):
    G = HalfSpace(2)
    X1, _ = sample_pairs(G, 16, 1); X2, _ = sample_pairs(G, 16, 2)
    self.assertFalse(np.array_equal(X1, X2))

  def test_bad_sampler(self):
    G = UnitBall(2)
    sampler = lambda G, count, seed: (np.array([[2.0, 0.0]]), np.array([[0.0, 0.0]]))
    self.assertRaises(DomainError, inequality_suite, G, 1, sampler=sampler)


class InequalityTests(TestCase):
  def test_halfplane(self):
    reports = inequality_suite(HalfSpace(2), count=64, sup_config=SUP)
    self.assertEqual(strict_failures(reports), [])
    names = [r.name for r in reports]
    self.assertIn("rho/2<=k<=rho", names)
    self.assertIn("delta<=jtilde", names)

  def test_punctured(self):
    reports = inequality_suite(PuncturedSpace(2), count=64, sup_config=SUP)
    self.assertEqual(strict_failures(reports), [])
    self.assertIn("delta=j", [r.name for r in reports])

  def test_ball(self):
    reports = inequality_suite(UnitBall(2), count=32, sup_config=SUP,
                               geodesic_config=GEODESIC, numeric_count=2)
    self.assertEqual(strict_failures(reports), [])
    self.assertIn("j<=k<=(1+s)j in B(0.3)", [r.name for r in reports])

  def test_punctured_ball(self):
    reports = inequality_suite(PuncturedBall(2), count=32, sup_config=SUP,
                               geodesic_config=GEODESIC, numeric_count=2, search_count=8)
    self.assertEqual(strict_failures(reports), [])
    self.assertTrue(all(r.evidence for r in reports if r.name == "alpha<=delta"))

  def test_sector(self):
    reports = inequality_suite(Sector(np.pi / 3.0), count=32, sup_config=SUP,
                               geodesic_config=GEODESIC, numeric_count=2, search_count=8)
    self.assertEqual(strict_failures(reports), [])
    named = dict((r.name, r) for r in reports)
    self.assertEqual(named["j<=k"].samples, 32)
    self.assertTrue(named["alpha<=2k"].strict)

  def test_polygon(self):
    reports = inequality_suite(Polygon(L_SHAPE), count=32, sup_config=SUP,
                               geodesic_config=GEODESIC, numeric_count=2, search_count=8)
    self.assertEqual(strict_failures(reports), [])
    named = dict((r.name, r) for r in reports)
    self.assertEqual(named["j<=k"].samples, 2)
    self.assertTrue(named["j<=k"].strict)
    self.assertTrue(named["alpha<=2k"].evidence)


class UniformityTests(TestCase):
  def test_constants(self):
    self.assertAlmostEqual(uniformity_constant(PuncturedSpace(2)), np.pi / np.log(3.0))
    self.assertEqual(uniformity_constant(HalfSpace(3)), 2.0)
    self.assertAlmostEqual(uniformity_constant(Sector(np.pi)), 2.0)
    self.assertIsNone(uniformity_constant(UnitBall(2)))

  def test_estimate_punctured(self):
    A = np.pi / np.log(3.0)
    small = uniformity_estimate(PuncturedSpace(2), 32)
    large = uniformity_estimate(PuncturedSpace(2), 96)
    self.assertLessEqual(small.estimate, large.estimate)
    self.assertLessEqual(large.estimate, A + 1e-9)
    self.assertGreaterEqual(large.estimate, 0.95 * A)
    self.assertEqual(len(large.witness), 2)
    self.assertEqual(large.samples, 96)

  def test_estimate_halfplane(self):
    e = uniformity_estimate(HalfSpace(2), 32)
    self.assertLessEqual(e.estimate, 2.0 + 1e-9)
    self.assertGreaterEqual(e.estimate, 0.95 * 2.0)

  def test_estimate_sectors(self):
    for phi in (np.pi / 3.0, 0.5 * np.pi, np.pi):
      A = 1.0 / np.sin(0.5 * phi) + 1.0
      self.assertAlmostEqual(uniformity_constant(Sector(phi)), A, places=14)
      e = uniformity_estimate(Sector(phi), 32)
      self.assertLessEqual(e.estimate, A + 1e-9, phi)
      self.assertGreaterEqual(e.estimate, 0.95 * A, phi)
      x, y = e.witness
      self.assertTrue(Sector(phi).contains(x) and Sector(phi).contains(y))

  def test_phi_uniform(self):
    r = phi_uniform_check(PuncturedSpace(2), Log(2.9), samples=64)
    self.assertTrue(r.passed)
    self.assertLessEqual(r.details["constant"], np.pi / np.log(3.0) + 1e-9)
    r = phi_uniform_check(PuncturedSpace(2), Linear(0.1), samples=64)
    self.assertFalse(r.passed)
    self.assertEqual(len(r.witness), 2)

  def test_linear_dominates_log(self):
    # log(1 + t) <= t, so a passing logarithmic bound implies the linear one
    G = PuncturedSpace(2)
    for C in (1.5, 2.9, 4.0):
      log = phi_uniform_check(G, Log(C), samples=64)
      linear = phi_uniform_check(G, Linear(C), samples=64)
      self.assertGreaterEqual(linear.margin, log.margin)
      if log.passed: self.assertTrue(linear.passed, C)


class HyperbolicChecksTests(TestCase):
  def test_four_definitions(self):
    pairs = [(np.array([0.1, 0.2]), np.array([-0.5, 0.3])),
             (np.array([0.0, 0.0]), np.array([0.6, 0.0])),
             (np.array([0.7, -0.1]), np.array([0.2, 0.5]))]
    reports = four_definition_check(pairs, SupSearchConfig(boundary_samples=512))
    self.assertEqual(len(reports), 3)
    self.assertEqual(strict_failures(reports), [])

  def test_ball_conversion(self):
    reports = ball_conversion_check(samples=16)
    self.assertEqual([r.domain for r in reports], ["ball2", "half2", "ball3"])
    self.assertEqual(strict_failures(reports), [])


class TransformSuiteTests(TestCase):
  def test_transforms(self):
    reports = transform_suite(count=500)
    self.assertEqual(len(reports), 6)
    self.assertEqual(strict_failures(reports), [])

  def test_m_scan(self):
    reports = m_ball_scan(count=200, numeric_count=0)
    violation, scan = reports
    self.assertTrue(violation.passed)
    self.assertGreater(violation.margin, 0.0)
    self.assertTrue(scan.evidence)
    self.assertIn("certified", scan.details)


class BallSuiteTests(TestCase):
  def test_convexity(self):
    reports = convexity_threshold_check(TraceConfig(directions=128))
    for r in reports:
      self.assertTrue(r.passed, "%s: %s" % (r.name, r.details))

  def test_diameters(self):
    reports = diameter_check()
    self.assertEqual(strict_failures(reports), [])


class TrigSuiteTests(TestCase):
  def test_small_suite(self):
    reports = trig_suite(triangles=50, trigons=20, herons=20, halfplane=500,
                         resolution=129)
    self.assertEqual(strict_failures(reports), [])
    self.assertTrue(all(r.passed for r in reports))

  def test_levelsets(self):
    reports = levelset_check((1.5, 2.0), resolution=129)
    self.assertEqual(len(reports), 3)
    self.assertTrue(all(r.passed for r in reports))


class RunSuiteTests(TestCase):
  def test_unknown(self):
    self.assertRaises(ParameterError, run_suite, "nonsense")
    self.assertIn("balls", SUITES)

  def test_uniformity(self):
    reports = run_suite("uniformity", budget=64)
    self.assertTrue(all_passed(reports))
    self.assertEqual(reports[0].details["target"], np.pi / np.log(3.0))
    within = reports[1]
    self.assertEqual(within.name, "uniformity estimate within 5%")
    self.assertTrue(within.strict and within.passed)

  def test_uniformity_sector(self):
    reports = run_suite("uniformity", Sector(np.pi / 3.0), budget=32)
    self.assertEqual(strict_failures(reports), [])
    self.assertAlmostEqual(reports[0].details["target"], 3.0, places=14)
    self.assertTrue(reports[1].strict)

  def test_balls_trace_config(self):
    reports = run_suite("balls", trace_config=TraceConfig(directions=128))
    self.assertEqual(strict_failures(reports), [])
    self.assertEqual([r.samples for r in reports if r.name.startswith("j diameter (")],
                     [128, 128])

  def test_deterministic(self):
    def document():
      f = StringIO()
      write_report(transform_suite(count=300) + m_ball_scan(300, numeric_count=0), f,
                   dict(seed=4711))
      return f.getvalue()
    self.assertEqual(document(), document())
