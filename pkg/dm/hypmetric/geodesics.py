# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Paths, weighted lengths and geodesics.

Explicit geodesics are available for the punctured space (logarithmic
spirals) and the unit ball (circular arcs orthogonal to the sphere).
`numeric_geodesic` approximates geodesics of other domains by a
shortest path on a grid followed by a relaxation of the path vertices.
Domains with a puncture or a vertex at the origin are handled in the
logarithmic chart `z -> (log|z|, arg z)`.
"""
from logging import getLogger

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.optimize import minimize
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import dijkstra
from zope.interface import implementer

from .interfaces import IDensityField
from .config import GeodesicConfig
from .domains import UnitBall, HalfSpace, PuncturedSpace, PuncturedBall, \
     Sector, Polygon
from .exception import DomainError, DegenerateError, DimensionError, \
     ConvergenceError, ResolutionError
from .util import as_point, as_points, angle_between, inside_domain, Bracket

logger = getLogger(__name__)

# objective value for paths leaving the domain
PENALTY = 1e12


class Polyline(object):
  """A path given by its vertices; consecutive vertices are distinct."""

  def __init__(self, vertices):
    v = as_points(vertices)
    if len(v) < 2: raise DegenerateError("a polyline needs at least 2 vertices")
    if not np.all(np.isfinite(v)): raise DomainError("non finite polyline vertex")
    if np.any(np.all(v[1:] == v[:-1], axis=1)):
      raise DegenerateError("consecutive polyline vertices coincide")
    self.vertices = v

  @classmethod
  def cleaned(cls, vertices):
    """a polyline from *vertices* with repeated consecutive vertices dropped."""
    v = as_points(vertices)
    keep = np.ones(len(v), dtype=bool)
    keep[1:] = np.any(v[1:] != v[:-1], axis=1)
    return cls(v[keep])

  @property
  def dimension(self): return self.vertices.shape[1]

  @property
  def start(self): return self.vertices[0]

  @property
  def end(self): return self.vertices[-1]

  def __len__(self): return len(self.vertices)

  def segment_lengths(self):
    return np.linalg.norm(np.diff(self.vertices, axis=0), axis=1)

  def euclidean_length(self): return float(self.segment_lengths().sum())

  def concat(self, other):
    """the path running through *self*, then through *other*."""
    if not np.allclose(self.end, other.start, rtol=0.0, atol=1e-12):
      raise DegenerateError("polylines do not join")
    return self.__class__(np.concatenate((self.vertices, other.vertices[1:])))

  def reversed(self): return self.__class__(self.vertices[::-1])

  def __repr__(self):
    return "<Polyline with %d vertices in R^%d>" % (len(self), self.dimension)


##############################################################################
# densities

@implementer(IDensityField)
class DensityField(object):
  """A positive weight `w` given by a vectorized function.

  *scale* maps points to the length on which `w` changes appreciably
  (usually the distance to the singular set); `None` means unlimited.
  `w` is `inf` outside its domain.
  """
  constant = None

  def __init__(self, weight, scale=None, name=None):
    self._weight = weight; self._scale = scale
    self.name = name

  def __call__(self, points):
    return self._weight(as_points(points))

  def scale(self, points):
    pts = as_points(points)
    if self._scale is None: return np.full(len(pts), np.inf)
    return self._scale(pts)

  def __repr__(self): return "<DensityField %s>" % self.name


def _reciprocal(d):
  with np.errstate(divide="ignore"):
    return np.where(d > 0.0, 1.0 / np.where(d > 0.0, d, 1.0), np.inf)


def _norms(points): return np.linalg.norm(points, axis=1)


def quasihyperbolic_density(G):
  """the density `1/d(z, boundary G)`."""
  f = DensityField(lambda p: _reciprocal(G.boundary_distances(p)),
                   lambda p: G.boundary_distances(p),
                   "quasihyperbolic(%s)" % G.name)
  f.domain = G
  return f


def hyperbolic_ball_density():
  """the density `2/(1 - |z|^2)` of the hyperbolic metric of the unit ball."""
  return DensityField(lambda p: 2.0 * _reciprocal(1.0 - (p * p).sum(axis=1)),
                      lambda p: 1.0 - _norms(p), "hyperbolic ball")


def halfspace_density():
  """the density `1/z_n` of the hyperbolic metric of the half space."""
  return DensityField(lambda p: _reciprocal(p[:, -1]), lambda p: p[:, -1],
                      "hyperbolic half space")


def spherical_density():
  return DensityField(lambda p: 1.0 / (1.0 + (p * p).sum(axis=1)),
                      lambda p: 1.0 + _norms(p), "spherical")


def radial_density():
  """the density `1/|z|` (the quasihyperbolic density of the punctured space)."""
  return DensityField(lambda p: _reciprocal(_norms(p)), _norms, "radial")


def constant_density(c=1.0):
  c = float(c)
  if not c > 0.0: raise DomainError("the density must be positive")
  f = DensityField(lambda p: np.full(len(p), c), None, "constant %g" % c)
  f.constant = c
  return f


##############################################################################
# lengths

_MAX_PIECES = 4096


def _quadrature(order):
  nodes, weights = leggauss(int(order))
  return 0.5 * (nodes + 1.0), 0.5 * weights


def _segment_weighted_lengths(vertices, density, order):
  """per segment quadrature of `w` along the straight segments."""
  t, gw = _quadrature(order)
  a = vertices[:-1]; b = vertices[1:]
  k, n = a.shape
  pts = a[:, None, :] + (b - a)[:, None, :] * t[None, :, None]
  w = density(pts.reshape(-1, n)).reshape(k, len(t))
  return np.linalg.norm(b - a, axis=1) * (w @ gw)


def _split(vertices, density, ratio=0.25):
  """subdivide segments longer than *ratio* times the density scale."""
  scale = density.scale(vertices)
  if not np.all(scale > 0.0): raise DomainError("the path exits the domain")
  seg = np.linalg.norm(np.diff(vertices, axis=0), axis=1)
  local = np.minimum(scale[:-1], scale[1:])
  with np.errstate(invalid="ignore"):
    pieces = np.where(np.isfinite(local), np.ceil(seg / (ratio * local)), 1.0)
  pieces = np.clip(pieces, 1, _MAX_PIECES).astype(int)
  if np.all(pieces == 1): return vertices
  out = [vertices[:1]]
  for a, b, m in zip(vertices[:-1], vertices[1:], pieces):
    s = np.arange(1, m + 1) / float(m)
    out.append(a + (b - a) * s[:, None])
  return np.concatenate(out)


def weighted_length(path, density, order=8):
  """the weighted length `integral of w |dz|` of *path*.

  Composite Gauss-Legendre quadrature of *order* nodes per segment;
  segments long compared to the density scale are subdivided.
  """
  if not isinstance(path, Polyline): path = Polyline(path)
  if density.constant is not None:
    return density.constant * path.euclidean_length()
  v = path.vertices
  w = density(v)
  if not np.all(np.isfinite(w) & (w > 0.0)):
    raise DomainError("the path exits the domain")
  v = _split(v, density)
  seg = _segment_weighted_lengths(v, density, order)
  if not np.all(np.isfinite(seg)): raise DomainError("the path exits the domain")
  return float(seg.sum())


##############################################################################
# explicit geodesics

def _perpendicular(u):
  """a deterministic unit vector orthogonal to the unit vector *u*."""
  e = np.zeros(len(u)); e[int(np.argmin(np.abs(u)))] = 1.0
  v = e - np.dot(e, u) * u
  return v / np.linalg.norm(v)


def _plane(x, y):
  """orthonormal `(e1, e2)` with `x` along `e1` and `y` in their span."""
  e1 = x / np.linalg.norm(x)
  r = y - np.dot(y, e1) * e1
  nr = np.linalg.norm(r)
  if nr <= 1e-15 * max(1.0, np.linalg.norm(y)): return e1, _perpendicular(e1)
  return e1, r / nr


def spiral_geodesic(x, y, samples=256):
  """the logarithmic spiral from *x* to *y* in the plane through `0, x, y`.

  This is the quasihyperbolic geodesic of the punctured space.
  """
  x = as_point(x); y = as_point(y, len(x))
  rx = np.linalg.norm(x); ry = np.linalg.norm(y)
  if rx == 0.0 or ry == 0.0: raise DomainError("the spiral needs nonzero points")
  if np.all(x == y): raise DegenerateError("coincident points")
  samples = max(2, int(samples))
  phi = angle_between(x, y)
  t = np.linspace(0.0, 1.0, samples)
  r = rx * np.exp(t * np.log(ry / rx))
  if phi == 0.0:
    v = r[:, None] * (x / rx)[None, :]
  else:
    if len(x) == 1: raise DegenerateError("opposite points on the punctured line")
    e1, e2 = _plane(x, y)
    w = t * phi
    v = r[:, None] * (np.cos(w)[:, None] * e1 + np.sin(w)[:, None] * e2)
  v[0] = x; v[-1] = y
  return Polyline.cleaned(v)


class BallGeodesic(object):
  """A hyperbolic geodesic segment of the unit ball.

  *ideal* holds the endpoints `(x*, y*)` of the full geodesic on the
  sphere, ordered `x*, x, y, y*` along it; *center* is `None` for
  diameters (then *radius* is `inf`).
  """

  def __init__(self, polyline, ideal, center, radius):
    self.polyline = polyline; self.ideal = ideal
    self.center = center; self.radius = radius


def ball_geodesic(x, y, samples=256):
  """the hyperbolic geodesic segment of the unit ball joining *x* and *y*."""
  x = as_point(x); y = as_point(y, len(x))
  for p in (x, y):
    if not np.dot(p, p) < 1.0: raise DomainError("point outside the unit ball")
  if np.all(x == y): raise DegenerateError("coincident points")
  samples = max(2, int(samples))
  if np.linalg.norm(x) < np.linalg.norm(y): a, b, swapped = y, x, True
  else: a, b, swapped = x, y, False
  ra = np.linalg.norm(a)
  e1, e2 = _plane(a, b) if ra > 0.0 else (None, None)
  b2 = (np.dot(b, e1), np.dot(b, e2)) if e1 is not None else (0.0, 0.0)
  if e1 is None or abs(b2[1]) <= 1e-12 * ra:
    # diameter case
    u = (y - x) / np.linalg.norm(y - x)
    p = np.dot(x, u); c = np.dot(x, x) - 1.0
    root = np.sqrt(p * p - c)
    ideal = (x + (-p - root) * u, x + (-p + root) * u)
    t = np.linspace(0.0, 1.0, samples)
    v = x + (y - x) * t[:, None]
    v[0] = x; v[-1] = y
    return BallGeodesic(Polyline.cleaned(v), ideal, None, np.inf)
  # circle through a, b and the inverse point of a
  cx = 0.5 * (ra + 1.0 / ra)
  cy = ((cx - b2[0]) ** 2 + b2[1] ** 2 - (cx - ra) ** 2) / (2.0 * b2[1])
  c2 = np.array([cx, cy])
  radius = float(np.hypot(ra - cx, cy))
  nc = np.linalg.norm(c2)
  # angles around the center, measured from the direction towards 0
  base = np.arctan2(-cy, -cx)
  def angle(q):
    d = np.arctan2(q[1] - cy, q[0] - cx) - base
    return (d + np.pi) % (2.0 * np.pi) - np.pi
  beta = np.arcsin(min(1.0, 1.0 / nc))
  ta = angle((ra, 0.0)); tb = angle(b2)
  tx, ty = (tb, ta) if swapped else (ta, tb)
  sign = 1.0 if ty > tx else -1.0
  def embed(theta):
    q = c2[None, :] + radius * np.column_stack((np.cos(base + theta),
                                                np.sin(base + theta)))
    return q[:, :1] * e1 + q[:, 1:] * e2
  ends = embed(np.array([-sign * beta, sign * beta]))
  v = embed(np.linspace(tx, ty, samples))
  v[0] = x; v[-1] = y
  center = cx * e1 + cy * e2
  return BallGeodesic(Polyline.cleaned(v), (ends[0], ends[1]), center, radius)


##############################################################################
# logarithmic chart of the punctured plane

def log_chart(z):
  """`(log|z|, arg z)` with `arg z` in `(-pi, pi]`."""
  z = as_point(z, 2)
  r = np.hypot(z[0], z[1])
  if r == 0.0: raise DomainError("the chart is not defined at 0")
  return np.array([np.log(r), np.arctan2(z[1], z[0])])


def log_chart_inverse(w):
  w = as_point(w, 2)
  return np.exp(w[0]) * np.array([np.cos(w[1]), np.sin(w[1])])


def log_chart_points(points):
  p = as_points(points, 2)
  return np.column_stack((np.log(_norms(p)), np.arctan2(p[:, 1], p[:, 0])))


def log_chart_inverse_points(chart_points):
  w = as_points(chart_points, 2)
  return np.exp(w[:, :1]) * np.column_stack((np.cos(w[:, 1]), np.sin(w[:, 1])))


def lift(w, reference):
  """chart point *w* shifted by a multiple of `2pi` in `v` such that
  `v - reference_v` lies in `(-pi, pi]`."""
  w = np.array(w, dtype=float)
  d = w[1] - reference[1]
  w[1] = reference[1] + (np.pi - ((np.pi - d) % (2.0 * np.pi)))
  return w


def qh_angle(z, x, y):
  """the quasihyperbolic angle at *z* of the punctured plane triangle `x, z, y`.

  The angle between the chart images of the geodesics from *z* to
  *x* and to *y*.
  """
  wz = log_chart(z)
  a = lift(log_chart(x), wz) - wz
  b = lift(log_chart(y), wz) - wz
  if not np.any(a) or not np.any(b):
    raise DegenerateError("coincident vertices")
  return angle_between(a, b)


##############################################################################
# numeric geodesics

class _Working(object):
  """The problem in working coordinates (the plane or the log chart)."""

  def __init__(self, density, to_domain, contains, start, end, window,
               chart_scale=None):
    self.density = density; self.to_domain = to_domain
    self.contains = contains
    self.start = start; self.end = end; self.window = window
    self._chart_scale = chart_scale

  def weights(self, points):
    w = np.full(len(points), np.inf)
    ok = self.contains(points)
    if ok.any(): w[ok] = self.density(points[ok])
    return w

  def scale(self, points):
    return self._chart_scale(points)


def _planar_frame(G, x, y):
  """reduce a higher dimensional problem to a symmetric 2-plane.

  Returns `(G2, x2, y2, embed)`.
  """
  if isinstance(G, HalfSpace):
    o = x.copy(); o[-1] = 0.0
    h = y - x; h[-1] = 0.0
    nh = np.linalg.norm(h)
    e1 = h / nh if nh > 0.0 else np.eye(G.dimension)[0]
    e2 = np.eye(G.dimension)[-1]
    G2 = HalfSpace(2)
  else:
    o = np.zeros(G.dimension)
    e1, e2 = _plane(x, y) if np.any(x) else _plane(y, x)
    G2 = G.__class__(2)
  def embed(p): return o + p[:, :1] * e1 + p[:, 1:] * e2
  x2 = np.array([np.dot(x - o, e1), np.dot(x - o, e2)])
  y2 = np.array([np.dot(y - o, e1), np.dot(y - o, e2)])
  return G2, x2, y2, embed


def _working_problem(G, x, y, density):
  if isinstance(G, (PuncturedSpace, PuncturedBall, Sector)):
    wx = log_chart(x)
    wy = lift(log_chart(y), wx)
    if isinstance(G, Sector):
      wx[1] = G.angles(x[None])[0]; wy[1] = G.angles(y[None])[0]
      def contains(p):
        return (p[:, 1] > 0.0) & (p[:, 1] < G.phi) & np.isfinite(p[:, 0])
      pad = 2.0 + 0.5 * abs(wx[0] - wy[0])
      vlo, vhi = 0.0, G.phi
    else:
      def contains(p):
        ok = np.isfinite(p).all(axis=1)
        ok[ok] = G.contains_all(log_chart_inverse_points(p[ok]))
        return ok
      pad = 1.0 + 0.25 * abs(wx[0] - wy[0])
      vlo = min(wx[1], wy[1]) - 1.0; vhi = max(wx[1], wy[1]) + 1.0
    ulo = min(wx[0], wy[0]) - pad; uhi = max(wx[0], wy[0]) + pad
    if isinstance(G, PuncturedBall): uhi = min(uhi, 0.0)
    def chart_density(p):
      z = log_chart_inverse_points(p)
      return np.exp(p[:, 0]) * density(z)
    def chart_scale(p):
      z = log_chart_inverse_points(p)
      return density.scale(z) / np.exp(p[:, 0])
    return _Working(chart_density, log_chart_inverse_points, contains, wx, wy,
                    (np.array([ulo, vlo]), np.array([uhi, vhi])), chart_scale)
  if isinstance(G, UnitBall):
    window = (-np.ones(2), np.ones(2))
  elif isinstance(G, Polygon):
    window = G.window()
  elif isinstance(G, HalfSpace):
    span = np.linalg.norm(x - y)
    top = max(x[1], y[1]) + span
    window = (np.array([min(x[0], y[0]) - 0.5 * span - top, 0.5 * min(x[1], y[1])]),
              np.array([max(x[0], y[0]) + 0.5 * span + top, top]))
  else:
    raise DimensionError("no numeric geodesics for %s" % G.name)
  def contains(p): return G.contains_all(p)
  return _Working(density, lambda p: p.copy(), contains, x.copy(), y.copy(),
                  window, density.scale)


def _grid_path(work, resolution):
  """the shortest grid path (in working coordinates) from start to end."""
  lo, hi = work.window
  h = float(np.max(hi - lo)) / (resolution - 1)
  nx = max(2, int(np.ceil((hi[0] - lo[0]) / h)) + 1)
  ny = max(2, int(np.ceil((hi[1] - lo[1]) / h)) + 1)
  gx = lo[0] + h * np.arange(nx); gy = lo[1] + h * np.arange(ny)
  X, Y = np.meshgrid(gx, gy, indexing="ij")
  nodes = np.column_stack((X.ravel(), Y.ravel()))
  w = work.weights(nodes).reshape(nx, ny)
  valid = np.isfinite(w)
  if not valid.any(): raise ResolutionError("no grid node inside the domain")
  index = np.arange(nx * ny).reshape(nx, ny)
  rows = []; cols = []; vals = []
  for di, dj in ((1, 0), (0, 1), (1, 1), (1, -1)):
    i0 = slice(0, nx - di)
    j0 = slice(max(0, -dj), ny - max(0, dj))
    i1 = slice(di, nx)
    j1 = slice(max(0, dj), ny - max(0, -dj) if dj < 0 else ny)
    ok = valid[i0, j0] & valid[i1, j1]
    step = h * np.hypot(di, dj)
    rows.append(index[i0, j0][ok]); cols.append(index[i1, j1][ok])
    vals.append(step * 0.5 * (w[i0, j0][ok] + w[i1, j1][ok]))
  graph = coo_matrix((np.concatenate(vals),
                      (np.concatenate(rows), np.concatenate(cols))),
                     shape=(nx * ny, nx * ny)).tocsr()
  flat_valid = valid.ravel()
  candidates = np.flatnonzero(flat_valid)
  def nearest(p):
    d = np.linalg.norm(nodes[candidates] - p, axis=1)
    return candidates[int(np.argmin(d))]
  src = nearest(work.start); dst = nearest(work.end)
  if src == dst: return np.array([work.start, work.end])
  dist, pred = dijkstra(graph, directed=False, indices=src,
                        return_predecessors=True)
  if not np.isfinite(dist[dst]):
    raise ResolutionError("the grid separates the points; increase the resolution")
  path = [dst]
  while path[-1] != src: path.append(pred[path[-1]])
  inner = nodes[path[::-1]]
  return np.concatenate((work.start[None], inner, work.end[None]))


def _thin(vertices, count):
  if len(vertices) <= count: return vertices
  keep = np.unique(np.round(np.linspace(0, len(vertices) - 1, count)).astype(int))
  return vertices[keep]


def _densify(vertices, work, ratio, limit):
  scale = work.scale(vertices)
  seg = np.linalg.norm(np.diff(vertices, axis=0), axis=1)
  local = np.minimum(scale[:-1], scale[1:])
  with np.errstate(invalid="ignore"):
    pieces = np.where(np.isfinite(local) & (local > 0.0),
                      np.ceil(seg / (ratio * local)), 1.0)
  pieces = np.clip(pieces, 1, 64).astype(int)
  if np.all(pieces == 1) or len(vertices) + pieces.sum() > limit: return vertices
  out = [vertices[:1]]
  for a, b, m in zip(vertices[:-1], vertices[1:], pieces):
    s = np.arange(1, m + 1) / float(m)
    out.append(a + (b - a) * s[:, None])
  return np.concatenate(out)


def _relax(vertices, work, order, iterations):
  """minimize the weighted length over the inner vertices (L-BFGS-B).

  Gradients are central differences; perturbing every other vertex at
  once changes each segment through one endpoint only.
  """
  t, gw = _quadrature(order)
  start = vertices[:1]; end = vertices[-1:]
  m = len(vertices) - 2
  if m <= 0: return vertices
  def segments(inner):
    v = np.concatenate((start, inner, end))
    a = v[:-1]; b = v[1:]
    pts = a[:, None, :] + (b - a)[:, None, :] * t[None, :, None]
    w = work.weights(pts.reshape(-1, 2)).reshape(len(a), len(t))
    seg = np.linalg.norm(b - a, axis=1) * (w @ gw)
    return np.where(np.isfinite(seg), seg, PENALTY)
  def fun(flat):
    inner = flat.reshape(m, 2)
    s0 = segments(inner)
    steps = 1e-7 * np.clip(work.scale(inner), 1e-6, 1.0)
    grad = np.zeros((m, 2))
    for parity in (0, 1):
      idx = np.arange(parity, m, 2)
      for c in (0, 1):
        diff = []
        for sign in (1.0, -1.0):
          moved = inner.copy()
          moved[idx, c] += sign * steps[idx]
          s = segments(moved)
          diff.append(s[idx] + s[idx + 1])
        grad[idx, c] = (diff[0] - diff[1]) / (2.0 * steps[idx])
    return float(s0.sum()), grad.ravel()
  res = minimize(fun, vertices[1:-1].ravel(), jac=True, method="L-BFGS-B",
                 options=dict(maxiter=iterations, ftol=1e-15, gtol=1e-12))
  inner = res.x.reshape(m, 2)
  if segments(inner).max() >= PENALTY: return vertices
  return np.concatenate((start, inner, end))


def _working_length(vertices, work, order):
  t, gw = _quadrature(order)
  a = vertices[:-1]; b = vertices[1:]
  pts = a[:, None, :] + (b - a)[:, None, :] * t[None, :, None]
  w = work.weights(pts.reshape(-1, 2)).reshape(len(a), len(t))
  return float((np.linalg.norm(b - a, axis=1) * (w @ gw)).sum())


@inside_domain
def numeric_geodesic(G, x, y, config=None, density=None):
  """an approximate geodesic from *x* to *y* in *G* and its length bracket.

  The density defaults to the quasihyperbolic density of *G*; then
  the lower end of the bracket is the distance ratio bound
  `log(1 + |x-y|/min(d(x), d(y)))`, otherwise `0`. The upper end is
  the weighted length of the returned path.
  """
  config = config or GeodesicConfig()
  if np.all(x == y): raise DegenerateError("coincident points")
  qh = density is None
  if qh: density = quasihyperbolic_density(G)
  Gw, xw, yw, embed = G, x, y, None
  if G.dimension < 2: raise DimensionError("numeric geodesics need a planar domain")
  if G.dimension != 2:
    if not isinstance(G, (UnitBall, HalfSpace, PuncturedSpace, PuncturedBall)):
      raise DimensionError("numeric geodesics need a planar domain")
    Gw, xw, yw, embed = _planar_frame(G, x, y)
    plane_density = density
    density = DensityField(lambda p: plane_density(embed(p)),
                           lambda p: plane_density.scale(embed(p)))
  work = _working_problem(Gw, xw, yw, density)
  path = _grid_path(work, config.resolution)
  path = _thin(path, config.max_vertices)
  limit = 4 * config.max_vertices
  length = _working_length(path, work, config.quadrature_order)
  improvement = np.inf
  rounds = 0
  while rounds < config.refinement_iterations:
    rounds += 1
    path = _densify(path, work, 0.5, limit)
    path = _relax(path, work, config.quadrature_order, 200)
    new = _working_length(path, work, config.quadrature_order)
    improvement = length - new
    length = min(length, new)
    if improvement < config.tolerance: break
  lower = 0.0
  if qh:
    d = min(G.boundary_distance(x), G.boundary_distance(y))
    lower = float(np.log1p(np.linalg.norm(x - y) / d))
  bracket = Bracket(min(lower, length), length)
  logger.debug("numeric geodesic in %s: %d vertices, %d rounds, bracket %r",
               G.name, len(path), rounds, bracket)
  if config.refinement_iterations and improvement >= config.tolerance:
    logger.warning("numeric geodesic in %s did not converge: %r", G.name, bracket)
    raise ConvergenceError("relaxation did not converge", bracket)
  # chart segments are mapped with a few intermediate points
  fine = np.concatenate([path[:1]] + [
    a + (b - a) * (np.arange(1, 5) / 4.0)[:, None]
    for a, b in zip(path[:-1], path[1:])])
  points = work.to_domain(fine)
  if embed is not None: points = embed(points)
  points[0] = x; points[-1] = y
  return Polyline.cleaned(points), bracket
