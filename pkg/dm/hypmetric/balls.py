# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Metric balls.

Hyperbolic balls are euclidean balls with moved centers; balls of the
other metrics are traced numerically along rays from the center
(planar domains only) and classified for convexity.
"""
from logging import getLogger

import numpy as np
from scipy.ndimage import label
from scipy.optimize import brentq
from shapely.geometry import LinearRing

from .config import TraceConfig
from .domains import UnitBall, HalfSpace, sphere_sample
from .exception import ConvergenceError, DimensionError, DomainError, \
     ParameterError, TraceError
from .geodesics import Polyline
from .metrics import metric_function, check_metric, evaluate
from .util import as_point, as_points, fmt_point, Bracket

logger = getLogger(__name__)


def _check_radius(M):
  M = float(M)
  if not M > 0.0: raise ParameterError("the radius must be positive, got %g" % M)
  return M


def _check_center(G, x):
  x = as_point(x, G.dimension)
  if not G.contains(x):
    raise DomainError("point %s is not in %s" % (fmt_point(x), G.name))
  return x


class EuclideanBall(object):
  """The open euclidean ball `B(center, radius)`."""

  def __init__(self, center, radius):
    self.center = as_point(center)
    self.radius = float(radius)
    if not self.radius > 0.0:
      raise ParameterError("the radius must be positive")

  @property
  def dimension(self): return len(self.center)

  def contains(self, p):
    return bool(np.linalg.norm(as_point(p, self.dimension) - self.center) < self.radius)

  def sphere_points(self, count, seed=0):
    """*count* points on the bounding sphere."""
    pts, _ = sphere_sample(int(count), self.dimension, seed)
    return self.center + self.radius * pts

  def __repr__(self):
    return "EuclideanBall((%s), %.12g)" % (fmt_point(self.center), self.radius)


def hyperbolic_ball_to_euclidean(G, x, M):
  """the hyperbolic ball `D(x, M)` of the unit ball or half space *G*."""
  M = _check_radius(M)
  if not isinstance(G, (UnitBall, HalfSpace)):
    raise DomainError("hyperbolic balls need a ball or a half space, not %s" % G.name)
  x = _check_center(G, x)
  if isinstance(G, HalfSpace):
    t = x[-1]
    center = x.copy(); center[-1] = t * np.cosh(M)
    return EuclideanBall(center, t * np.sinh(M))
  t = np.tanh(0.5 * M)
  xx = float(np.dot(x, x))
  denominator = 1.0 - xx * t * t
  return EuclideanBall(x * (1.0 - t * t) / denominator, (1.0 - xx) * t / denominator)


def inclusion_radii(G, x, M, kind="rho"):
  """factors `(a, A)` with `B(x, a d) < D(x, M) < B(x, A d)`, `d = d(x, dG)`.

  *kind* `rho` needs a ball or a half space; for `j` and `k` the factors
  `(1 - e^-M, e^M - 1)` hold in every domain.
  """
  M = _check_radius(M)
  x = _check_center(G, x)
  if kind in ("j", "k") or kind == "rho" and isinstance(G, HalfSpace):
    return -np.expm1(-M), np.expm1(M)
  if kind == "rho" and isinstance(G, UnitBall):
    t = np.tanh(0.5 * M)
    r = np.linalg.norm(x)
    return t * (1.0 + r) / (1.0 + r * t), t * (1.0 + r) / (1.0 - r * t)
  raise DomainError("no inclusion radii for metric %s in %s" % (kind, G.name))


##############################################################################
# tracing

class BallTrace(object):
  """The traced boundary of a planar metric ball.

  `points[i]` lies on the ray from *center* in direction `directions[i]`;
  rays reaching the domain boundary before the metric reaches
  *radius* are `marked` and carry `nan` points.
  """

  def __init__(self, center, kind, radius, directions, points, residuals, marked):
    self.center = center; self.kind = kind; self.radius = radius
    self.directions = directions
    self.points = points; self.residuals = residuals; self.marked = marked

  def __len__(self): return len(self.points)

  @property
  def closed(self): return not self.marked.any()

  @property
  def distances(self):
    """euclidean distance of the trace points from the center."""
    return np.linalg.norm(self.points - self.center, axis=1)

  @property
  def polyline(self):
    """the closed polyline through the trace points."""
    if not self.closed:
      raise TraceError("the trace has %d marked rays" % self.marked.sum())
    return Polyline(np.concatenate((self.points, self.points[:1])))

  def __repr__(self):
    return "<BallTrace %s(%s, %.12g): %d points, %d marked>" % (
      self.kind, fmt_point(self.center), self.radius, len(self), self.marked.sum())


def _march(f, G, center, u, M, d0, config, step=0.1):
  """first crossing of `f = M` along the ray `center + s u`.

  Steps are a fixed fraction of the distance to the boundary. Returns
  `(s, residual)` or `None` when the boundary is reached first.
  """
  s = 0.0; p = center
  for _ in range(config.max_steps):
    d = G.boundary_distances(p[None])[0]
    if not (np.isfinite(d) and d > 1e-12 * d0): return None
    t = s + step * d
    q = center + t * u
    if not np.all(np.isfinite(q)): return None
    v = f(q)
    if v >= M:
      if v == M: return t, 0.0
      root = brentq(lambda r: f(center + r * u) - M, s, t,
                    xtol=1e-15 * max(1.0, t), rtol=4.0 * np.finfo(float).eps,
                    maxiter=400)
      return root, abs(f(center + root * u) - M)
    s, p = t, q
  return None


def trace_ball_boundary(G, kind, center, M, config=None, metric=None,
                        sup_config=None, geodesic_config=None):
  """trace the boundary of `B_kind(center, M)` in the planar domain *G*.

  For every direction the first crossing from inside is bisected, so
  a disconnected ball is traced by the component containing the
  center. *metric* optionally replaces the metric `kind` by a
  function of one point.
  """
  config = config or TraceConfig()
  M = _check_radius(M)
  if G.dimension != 2:
    raise DimensionError("ball tracing needs a planar domain")
  center = _check_center(G, center)
  if metric is None:
    d = metric_function(G, kind, sup_config, geodesic_config)
    metric = lambda p: d(center, p)
  d0 = G.boundary_distance(center)
  n = config.directions
  theta = 2.0 * np.pi * np.arange(n) / n
  points = np.full((n, 2), np.nan); residuals = np.full(n, np.nan)
  marked = np.zeros(n, dtype=bool)
  for i, angle in enumerate(theta):
    u = np.array([np.cos(angle), np.sin(angle)])
    found = _march(metric, G, center, u, M, d0, config)
    if found is None:
      marked[i] = True
      continue
    s, residuals[i] = found
    points[i] = center + s * u
  if marked.any():
    logger.info("%d of %d rays reach the boundary of %s before %s = %g",
                marked.sum(), n, G.name, kind, M)
  worst = np.nanmax(residuals) if (~marked).any() else 0.0
  if worst > config.tolerance:
    logger.warning("trace residual %.3g exceeds the tolerance %.3g", worst, config.tolerance)
  return BallTrace(center, kind, M, theta, points, residuals, marked)


##############################################################################
# convexity

STRICTLY_CONVEX = "StrictlyConvex"
CONVEX = "Convex"
NON_CONVEX = "NonConvex"


class Convexity(object):
  """Outcome of `convexity_classify`; `witness` is a reflex triple."""

  def __init__(self, kind, witness=None, margin=0.0):
    self.kind = kind; self.witness = witness; self.margin = margin

  def __str__(self): return self.kind

  def __repr__(self): return "Convexity(%s, margin=%.3g)" % (self.kind, self.margin)


def convexity_classify(trace, tolerance=1e-9, flat_angle=1e-3, window=None):
  """classify the closed planar *trace* as strictly convex, convex or not.

  A negative cross product of consecutive edges below
  `-tolerance * scale^2` (`scale` the largest distance from the center)
  is a reflex vertex. A convex trace is strict unless some run of
  *window* consecutive vertices (default an eighth of the trace) turns
  by less than *flat_angle* in total.
  """
  if len(trace) < 64:
    raise TraceError("convexity needs at least 64 trace points, got %d" % len(trace))
  if not trace.closed:
    raise TraceError("the trace is not closed (%d marked rays)" % trace.marked.sum())
  P = trace.points
  if not LinearRing(P).is_simple:
    raise TraceError("the trace intersects itself")
  scale = float(trace.distances.max())
  before = P - np.roll(P, 1, axis=0)
  after = np.roll(P, -1, axis=0) - P
  cross = before[:, 0] * after[:, 1] - before[:, 1] * after[:, 0]
  dot = np.sum(before * after, axis=1)
  limit = tolerance * scale * scale
  i = int(np.argmin(cross))
  if cross[i] < -limit:
    witness = (P[i - 1], P[i], P[(i + 1) % len(P)])
    return Convexity(NON_CONVEX, witness, float(cross[i]) / (scale * scale))
  turns = np.arctan2(cross, dot)
  w = window or max(3, len(P) // 8)
  cumulative = np.concatenate(([0.0], np.cumsum(np.concatenate((turns, turns[:w])))))
  windowed = cumulative[w:w + len(P)] - cumulative[:len(P)]
  least = float(windowed.min())
  if least < flat_angle: return Convexity(CONVEX, margin=least)
  return Convexity(STRICTLY_CONVEX, margin=least)


##############################################################################
# diameters

def j_sphere_diameter(M):
  """the `j` diameter `log(2 e^M - 1)` of a `j` sphere of radius *M*."""
  M = _check_radius(M)
  return float(np.log(2.0 * np.exp(M) - 1.0))


def k_sphere_diameter_numeric(G, x, M, samples=64, pairs=8,
                              trace_config=None, geodesic_config=None):
  """the `k` diameter of the traced `k` sphere `S_k(x, M)` as a `Bracket`.

  The farthest *pairs* trace point pairs (euclidean) are evaluated;
  the lower end is the best certified pair value, the upper end the
  triangle inequality bound `2M` (plus trace residuals).
  """
  M = _check_radius(M)
  config = (trace_config or TraceConfig()).replace(directions=int(samples))
  trace = trace_ball_boundary(G, "k", x, M, config, geodesic_config=geodesic_config)
  P = trace.points[~trace.marked]
  if len(P) < 2: raise TraceError("too few trace points for a diameter")
  D = np.linalg.norm(P[:, None, :] - P[None, :, :], axis=2)
  D[np.tril_indices(len(P))] = -1.0
  order = np.argsort(D, axis=None)[::-1][:int(pairs)]
  lower = 0.0; value = 0.0
  for k in order:
    i, j = np.unravel_index(k, D.shape)
    try: b = evaluate(G, P[i], P[j], "k", geodesic_config=geodesic_config)
    except ConvergenceError as e:
      if e.bracket is None: raise
      b = e.bracket
    lower = max(lower, b.lower); value = max(value, b.value)
  upper = 2.0 * M + 2.0 * float(np.nanmax(trace.residuals))
  logger.debug("k sphere diameter in %s: [%.9g, %.9g], best %.9g",
               G.name, lower, upper, value)
  return Bracket(lower, max(upper, lower), value)


##############################################################################
# components

def _grid_values(G, kind, center, points, sup_config, geodesic_config):
  if kind in ("j", "jtilde"):
    L = np.linalg.norm(points - center, axis=1)
    dc = G.boundary_distance(center)
    dp = G.boundary_distances(points)
    if kind == "j": return np.log1p(L / np.minimum(dc, dp))
    return np.log1p(L / dc) + np.log1p(L / dp)
  d = metric_function(G, kind, sup_config, geodesic_config)
  return np.array([d(center, p) for p in points])


class BallComponents(object):
  """Grid flood fill of a metric ball: `count` components, `labels` grid."""

  def __init__(self, count, labels, window, center_label):
    self.count = count; self.labels = labels; self.window = window
    self.center_label = center_label

  def __repr__(self): return "<BallComponents %d>" % self.count


def ball_components(G, kind, center, M, resolution=256, window=None,
                    sup_config=None, geodesic_config=None):
  """count the connected components of `B_kind(center, M)` on a grid.

  The default *window* is the square around the euclidean ball
  `B(center, (e^M - 1) d(center))`, which contains the balls of the
  metrics dominating `j`.
  """
  M = _check_radius(M)
  check_metric(G, kind)
  if G.dimension != 2: raise DimensionError("component counts need a planar domain")
  center = _check_center(G, center)
  if window is None:
    if kind in ("j", "jtilde", "k", "delta", "rho", "m"):
      R = 1.02 * np.expm1(M) * G.boundary_distance(center)
      window = (center - R, center + R)
    else: window = G.window()
  lo, hi = (as_point(w, 2) for w in window)
  xs = np.linspace(lo[0], hi[0], int(resolution))
  ys = np.linspace(lo[1], hi[1], int(resolution))
  X, Y = np.meshgrid(xs, ys, indexing="ij")
  grid = as_points(np.column_stack((X.ravel(), Y.ravel())), 2)
  inside = G.contains_all(grid)
  values = np.full(len(grid), np.inf)
  values[inside] = _grid_values(G, kind, center, grid[inside], sup_config, geodesic_config)
  mask = (values < M).reshape(X.shape)
  labels, count = label(mask)
  ci = int(np.argmin(np.abs(xs - center[0]))); cj = int(np.argmin(np.abs(ys - center[1])))
  if count > 1:
    logger.info("%s ball of radius %g in %s has %d components", kind, M, G.name, count)
  return BallComponents(int(count), labels, (lo, hi), int(labels[ci, cj]))
