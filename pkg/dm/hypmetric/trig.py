# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Quasihyperbolic trigonometry.

In the punctured plane the logarithmic chart is an isometry onto a
cylinder; triangles whose sides do not wind around the puncture are
euclidean triangles in the chart, trigons pick up the correction
`-4 pi (pi - alpha)` in the Law of Cosines.
"""
from logging import getLogger

import numpy as np
from skimage.measure import find_contours

from .exception import HypmetricError, DegenerateError, DomainError, \
     ParameterError
from .geodesics import log_chart, lift, numeric_geodesic
from .metrics import quasihyperbolic_punctured, rho_halfspace, \
     quasihyperbolic_bracket
from .util import as_point, angle_between, fmt_point, rng

logger = getLogger(__name__)

TRIANGLE = "triangle"
TRIGON = "trigon"

DEFAULT_LEVELS = (1.5, 2.0, 2.5)


def _wrap(d):
  """*d* reduced into `(-pi, pi]`."""
  return np.pi - ((np.pi - d) % (2.0 * np.pi))


class ChartTriangle(object):
  """Chart lifts `X, Z, Y` of the vertices of a punctured plane triangle.

  `Z` and `Y` are reached from `X` along the geodesic sides `x z` and
  `z y`; for a trigon the side `x y` ends at `Y` shifted by `2 pi`.
  """

  def __init__(self, x, y, z, tolerance=1e-12):
    for p in (x, y, z):
      if not np.any(p): raise DomainError("the origin is not in the punctured plane")
    X = log_chart(x)
    Z = lift(log_chart(z), X)
    Y = lift(log_chart(y), Z)
    for a, b in ((X, Z), (Z, Y), (X, lift(log_chart(y), X))):
      if np.allclose(a, b, rtol=0.0, atol=tolerance):
        raise DegenerateError("coincident vertices")
    for w0, w1 in ((X, Z), (Z, Y)):
      if abs(abs(w1[1] - w0[1]) - np.pi) <= tolerance:
        raise DegenerateError("antipodal vertices: the side is not unique")
    turn = Y[1] - X[1]
    if abs(abs(turn) - np.pi) <= tolerance:
      raise DegenerateError("the origin lies on a side")
    self.X, self.Y, self.Z = X, Y, Z
    self.case = TRIANGLE if abs(turn) < np.pi else TRIGON
    # the euclidean angle alpha = angle(x, 0, y)
    self.alpha = abs(_wrap(turn))

  @property
  def gamma(self):
    """the angle at `z` between the sides to `x` and to `y`."""
    return angle_between(self.X - self.Z, self.Y - self.Z)

  @property
  def signed_area(self):
    (x0, y0), (x1, y1), (x2, y2) = self.X, self.Z, self.Y
    return 0.5 * ((x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0))


class CosineRecord(object):
  """Both sides of a cosine law (identity or inequality) and their difference."""

  def __init__(self, case, lhs, rhs, gamma, alpha=None):
    self.case = case; self.lhs = lhs; self.rhs = rhs
    self.gamma = gamma; self.alpha = alpha

  @property
  def residual(self): return self.lhs - self.rhs

  def __repr__(self):
    return "<CosineRecord %s: %.12g - %.12g = %.3g>" % (
      self.case, self.lhs, self.rhs, self.residual)


def _sides(x, y, z):
  return (quasihyperbolic_punctured(x, y), quasihyperbolic_punctured(x, z),
          quasihyperbolic_punctured(y, z))


def law_of_cosines_check(x, y, z):
  """the Law of Cosines at *z* for the punctured plane triangle `x, y, z`.

  Triangles satisfy the euclidean identity, trigons (sides enclosing
  the origin) the one with the extra term `-4 pi (pi - alpha)`,
  `alpha = angle(x, 0, y)`.
  """
  x = as_point(x, 2); y = as_point(y, 2); z = as_point(z, 2)
  T = ChartTriangle(x, y, z)
  kxy, kxz, kyz = _sides(x, y, z)
  gamma = T.gamma
  rhs = kxz * kxz + kyz * kyz - 2.0 * kxz * kyz * np.cos(gamma)
  if T.case == TRIGON: rhs -= 4.0 * np.pi * (np.pi - T.alpha)
  return CosineRecord(T.case, kxy * kxy, rhs, gamma, T.alpha)


def heron(a, b, c):
  """the area of a euclidean triangle with sides *a*, *b*, *c*.

  Kahan's arrangement of Heron's formula; degenerate triangles give 0.
  """
  a, b, c = sorted((float(a), float(b), float(c)), reverse=True)
  p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
  return 0.25 * np.sqrt(max(p, 0.0))


class HeronRecord(object):
  def __init__(self, heron, area):
    self.heron = heron; self.area = area

  @property
  def residual(self): return abs(self.heron - self.area)

  def __iter__(self): return iter((self.heron, self.area, self.residual))


def heron_area_check(x, y, z):
  """Heron's formula for the quasihyperbolic area of the triangle `x, y, z`.

  The area is the euclidean area of the chart triangle (the chart is
  an isometry). Trigons are rejected.
  """
  x = as_point(x, 2); y = as_point(y, 2); z = as_point(z, 2)
  T = ChartTriangle(x, y, z)
  if T.case != TRIANGLE: raise DegenerateError("Heron's formula needs a triangle, not a trigon")
  return HeronRecord(heron(*_sides(x, y, z)), abs(T.signed_area))


##############################################################################
# half plane

def _geodesic_tangent(z, x):
  """unit tangent at *z* of the hyperbolic geodesic from *z* to *x* in `H^2`."""
  if x[0] == z[0]:
    return np.array([0.0, 1.0 if x[1] > z[1] else -1.0])
  c = (np.dot(x, x) - np.dot(z, z)) / (2.0 * (x[0] - z[0]))
  phi_z = np.arctan2(z[1], z[0] - c); phi_x = np.arctan2(x[1], x[0] - c)
  return np.sign(phi_x - phi_z) * np.array([-np.sin(phi_z), np.cos(phi_z)])


def halfplane_cosine_check(x, y, z):
  """the cosine inequality `k(x,y)^2 >= k(x,z)^2 + k(y,z)^2 - 2 k k cos gamma`
  in the upper half plane; `gamma` is the angle at *z* between the
  geodesic arcs to *x* and *y*."""
  x = as_point(x, 2); y = as_point(y, 2); z = as_point(z, 2)
  for p in (x, y, z):
    if not p[1] > 0.0: raise DomainError("point %s is not in the half plane" % fmt_point(p))
  if np.all(x == y) or np.all(x == z) or np.all(y == z):
    raise DegenerateError("coincident vertices")
  kxy = rho_halfspace(x, y); kxz = rho_halfspace(x, z); kyz = rho_halfspace(y, z)
  gamma = angle_between(_geodesic_tangent(z, x), _geodesic_tangent(z, y))
  rhs = kxz * kxz + kyz * kyz - 2.0 * kxz * kyz * np.cos(gamma)
  return CosineRecord("halfplane", kxy * kxy, rhs, gamma)


def cosine_exploration(G, count=16, seed=4711, geodesic_config=None):
  """signs of the cosine residual for random triangles of planar *G*.

  Exploratory: the angle at `z` comes from the first segments of the
  numeric geodesics. Returns the list of `CosineRecord`s; the sign
  counts are logged.
  """
  if G.dimension != 2: raise ParameterError("exploration needs a planar domain")
  generator = rng(seed, 7)
  records = []
  for _ in range(int(count)):
    x, y, z = G.sample_uniform(3, generator)
    try:
      kxy = quasihyperbolic_bracket(G, x, y, geodesic_config).value
      px, bx = numeric_geodesic(G, z, x, geodesic_config)
      py, by = numeric_geodesic(G, z, y, geodesic_config)
    except HypmetricError as e:
      logger.debug("skipping triple: %s", e)
      continue
    gamma = angle_between(px.vertices[1] - z, py.vertices[1] - z)
    kxz = bx.value; kyz = by.value
    rhs = kxz * kxz + kyz * kyz - 2.0 * kxz * kyz * np.cos(gamma)
    records.append(CosineRecord("explore", kxy * kxy, rhs, gamma))
  positive = sum(r.residual >= 0.0 for r in records)
  logger.info("cosine residuals in %s: %d nonnegative, %d negative",
              G.name, positive, len(records) - positive)
  return records


##############################################################################
# level sets of k/j in the punctured plane

class LevelSet(object):
  """Contours of `k(1, z) / j(1, z) = level`.

  `chart_contours` are `(m, 2)` arrays in log chart coordinates
  `(log|z|, arg z)`, `contours` the same in the plane.
  """

  def __init__(self, level, chart_contours, cell):
    self.level = level; self.chart_contours = chart_contours; self.cell = cell

  @property
  def empty(self): return not self.chart_contours

  @property
  def contours(self):
    return [np.exp(w[:, :1]) * np.column_stack((np.cos(w[:, 1]), np.sin(w[:, 1])))
            for w in self.chart_contours]

  def __repr__(self):
    return "<LevelSet %g: %d contours>" % (self.level, len(self.chart_contours))


def ratio_field(u, v):
  """`k(1, z) / j(1, z)` for `z = exp(u + iv)` (`1` where `z = 1`)."""
  r = np.exp(u)
  k = np.hypot(u, np.abs(_wrap(v)))
  chord = np.hypot(r * np.cos(v) - 1.0, r * np.sin(v))
  j = np.log1p(chord / np.minimum(1.0, r))
  with np.errstate(divide="ignore", invalid="ignore"):
    return np.where(j > 0.0, k / np.where(j > 0.0, j, 1.0), 1.0)


def levelset_trace(levels=DEFAULT_LEVELS, resolution=513, extent=4.0):
  """marching squares contours of the `k/j` ratio of the punctured plane.

  The grid covers `log|z|` in `[-extent, extent]` and `arg z` in
  `[-pi, pi]`; an odd *resolution* keeps the grid symmetric under the
  inversion `z -> z/|z|^2` (`log|z| -> -log|z|`).
  """
  levels = [float(c) for c in levels]
  for c in levels:
    if not c > 1.0: raise ParameterError("levels must exceed 1, got %g" % c)
  u = np.linspace(-extent, extent, int(resolution))
  v = np.linspace(-np.pi, np.pi, int(resolution))
  U, V = np.meshgrid(u, v, indexing="ij")
  field = ratio_field(U, V)
  du = u[1] - u[0]; dv = v[1] - v[0]
  peak = float(field.max())
  result = []
  for c in levels:
    contours = []
    if c < peak:
      for line in find_contours(field, c):
        contours.append(np.column_stack((u[0] + line[:, 0] * du, v[0] + line[:, 1] * dv)))
    ls = LevelSet(c, contours, max(du, dv))
    if ls.empty:
      logger.info("level %g exceeds the largest ratio %.6g: empty level set", c, peak)
    result.append(ls)
  return result

