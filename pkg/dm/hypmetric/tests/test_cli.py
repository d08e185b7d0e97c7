# Copyright (C) 2026; see 'LICENSE.txt' for details
"""The `hypmetric` command."""
import csv
from io import StringIO
from os import listdir
from os.path import join
from shutil import rmtree
from tempfile import mkdtemp
from unittest import TestCase

import numpy as np

from ..balls import CONVEX
from ..cli import main
from ..report import read_report


class CommandTests(TestCase):
  def setUp(self):
    self.tmp = mkdtemp()

  def tearDown(self):
    rmtree(self.tmp)

  def run_command(self, *argv):
    out = StringIO()
    status = main(list(argv) + ["--output", self.tmp], out)
    return status, out.getvalue()

  def test_dist(self):
    self.assertEqual(self.run_command("dist", "--metric", "j", "0,0", "0.5,0"),
                     (0, "0.693147180560\n"))
    self.assertEqual(self.run_command("dist", "0,0", "0.5,0"), (0, "1.098612288668\n"))
    self.assertEqual(self.run_command("dist", "--domain", "punctured2", "--metric", "k",
                                      "1,0", "0,1"),
                     (0, "1.570796326795\n"))

  def test_usage_errors(self):
    for argv in (("nonsense",),
                 ("dist", "0,0"),
                 ("dist", "--metric", "q", "0,0", "0.5,0"),
                 ("dist", "a,b", "0.5,0"),
                 ("dist", "--formats", "json", "0,0", "0.5,0"),
                 ("dist", "--tolerance", "-1", "0,0", "0.5,0"),
                 ("ball", "--metric", "j"),
                 ("verify", "nonsense"),
                 ("dist", "--domain", "nonsense", "0,0", "0.5,0"),
                 ("ball", "--domain", "sector:wide", "--M", "1"),
                 ("verify", "uniformity", "--domain", "nonsense")):
      self.assertEqual(self.run_command(*argv)[0], 2, argv)

  def test_computation_errors(self):
    self.assertEqual(self.run_command("dist", "2,0", "0,0")[0], 1)
    self.assertEqual(self.run_command("dist", "--domain", "punctured2", "0,1", "1,0")[0], 1)

  def test_ball_trace(self):
    status, output = self.run_command("ball", "--domain", "punctured2", "--metric", "j",
                                      "--M", "0.5", "--directions", "64", "--trace")
    self.assertEqual(status, 0)
    self.assertTrue(output.startswith("trace: 64 points, 0 marked"))
    with open(join(self.tmp, "ball-j-0_5.csv")) as f: rows = list(csv.reader(f))
    self.assertEqual(rows[0], ["direction", "x", "y", "residual", "marked"])
    self.assertEqual(len(rows), 65)
    e1 = np.array([1.0, 0.0])
    for row in rows[1:]:
      p = np.array([float(row[1]), float(row[2])])
      j = np.log1p(np.linalg.norm(p - e1) / min(1.0, np.linalg.norm(p)))
      self.assertAlmostEqual(j, 0.5, places=8)

  def test_ball_unresolved(self):
    # every direction leaves the disk before j reaches 40
    status, output = self.run_command("ball", "--domain", "ball2", "--metric", "j",
                                      "--M", "40", "--directions", "16")
    self.assertEqual(status, 0)
    self.assertEqual(output, "trace: 16 points, 16 marked, no resolved points\n")

  def test_ball_convexity(self):
    status, output = self.run_command("ball", "--domain", "punctured2", "--metric", "j",
                                      "--M", "0.6931", "--convexity", "--directions", "128")
    self.assertEqual(status, 0)
    self.assertEqual(output.splitlines()[-1], CONVEX)
    self.assertEqual(listdir(self.tmp), [])

  def test_verify_report(self):
    documents = []
    for _ in range(2):
      status, output = self.run_command("verify", "uniformity", "--budget", "64")
      self.assertEqual(status, 0)
      with open(join(self.tmp, "verify-uniformity.ini")) as f: documents.append(f.read())
    self.assertEqual(documents[0], documents[1])
    doc = read_report(StringIO(documents[0]))
    self.assertEqual(doc.get("run", "suite"), "uniformity")
    self.assertEqual(doc.get("run", "budget"), "64")
    self.assertEqual(doc.get("check 001", "passed"), "true")

  def test_geodesic(self):
    status, output = self.run_command("geodesic", "--domain", "puncturedball2",
                                      "--tolerance", "1e-6", "--resolution", "96",
                                      "0.5,0", "0,0.5")
    self.assertEqual(status, 0)
    value = float(output.split()[0])
    self.assertLess(abs(value - 0.5 * np.pi), 1e-3 * np.pi)
    self.assertIn("geodesic.csv", listdir(self.tmp))

  def test_levelset(self):
    status, output = self.run_command("levelset", "--levels", "1.5,2.9",
                                      "--resolution", "129")
    self.assertEqual(status, 0)
    lines = output.splitlines()
    self.assertTrue(lines[0].startswith("level 1.5: ") and lines[0].endswith(" contours"))
    self.assertEqual(lines[1], "level 2.9: empty")
    with open(join(self.tmp, "levelset.csv")) as f:
      self.assertEqual(f.readline().strip(), "level,contour,x,y")
