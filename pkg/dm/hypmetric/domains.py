# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Canonical domains.

Each domain knows its boundary distance, membership and how to sample
its boundary in the extended space. Unbounded domains include the
point `INFINITY` in their boundary samples exactly once.

Finite boundary sample points carry *parameters*: coordinates of a
parameterization of (a piece of) the boundary which the supremum
searches refine continuously. Isolated boundary points (the centre of
a `PuncturedBall`, the puncture of `PuncturedSpace`) are *atoms* and have
`nan` parameters.
"""
import re
from logging import getLogger

import numpy as np
import shapely
from shapely.geometry import LinearRing, LineString
from shapely.geometry import Polygon as ShapelyPolygon
from scipy.special import expit, logit
from scipy.stats import norm, qmc
from zope.interface import implementer

from .interfaces import IDomain, IInteriorChart
from .exception import DomainError, DimensionError
from .mobius import INFINITY
from .util import as_point, as_points, fmt_point, rng as make_rng

logger = getLogger(__name__)

# keeps boundary parameters away from the images of infinity
_EDGE = 1.0 - 1e-12


class BoundarySample(object):
  """A finite sample of the boundary of a domain in the extended space.

  *finite* is an `(m, n)` array of finite boundary points, *params*
  an `(m, k)` array of their boundary parameters (`nan` rows for atoms)
  or `None`; *infinite* tells whether `INFINITY` belongs to the sample.
  """

  def __init__(self, finite, params=None, infinite=False, weights=None):
    self.finite = np.asarray(finite, dtype=float)
    self.params = None if params is None else np.asarray(params, dtype=float)
    self.infinite = bool(infinite)
    self.weights = None if weights is None else np.asarray(weights, dtype=float)

  @property
  def points(self):
    """the sample as a list of extended points."""
    pts = list(self.finite)
    if self.infinite: pts.append(INFINITY)
    return pts

  @property
  def movable(self):
    """mask of the finite points with continuous parameters."""
    if self.params is None or self.params.shape[1] == 0:
      return np.zeros(len(self.finite), dtype=bool)
    return ~np.isnan(self.params[:, 0])

  def __len__(self): return len(self.finite) + int(self.infinite)


@implementer(IInteriorChart)
class InteriorChart(object):
  """A parameterization given by a pair of vectorized functions."""

  def __init__(self, dimension, point, params):
    self.dimension = dimension
    self._point = point; self._params = params

  def point(self, params):
    p = np.asarray(params, dtype=float)
    return self._point(p[None])[0] if p.ndim == 1 else self._point(p)

  def params(self, x):
    x = np.asarray(x, dtype=float)
    return self._params(x[None])[0] if x.ndim == 1 else self._params(x)


def _norms(points): return np.linalg.norm(points, axis=1)


def _directions(count, n, generator):
  """*count* random unit vectors in `R^n`."""
  d = generator.normal(size=(count, n))
  nd = _norms(d)
  nd[nd == 0.0] = 1.0
  return d / nd[:, None]


def sphere_sample(count, n, seed):
  """low discrepancy points on `S^{n-1}` with their parameters."""
  if n == 2:
    offset = make_rng(seed, 2).random()
    angles = 2.0 * np.pi * (np.arange(count) + offset) / count
    return np.column_stack((np.cos(angles), np.sin(angles))), angles[:, None]
  m = 1 << max(1, int(np.ceil(np.log2(count))))
  u = qmc.Sobol(d=n, scramble=True, seed=seed).random(m)[:count]
  v = norm.ppf(np.clip(u, 1e-12, 1.0 - 1e-12))
  pts = v / _norms(v)[:, None]
  return pts, pts.copy()


def _sphere_points(params):
  if params.shape[1] == 1:
    return np.column_stack((np.cos(params[:, 0]), np.sin(params[:, 0])))
  nv = _norms(params)
  nv[nv == 0.0] = 1.0
  return params / nv[:, None]


def _stratified(count, seed, key):
  """*count* stratified numbers in `(-1, 1)`."""
  offset = make_rng(seed, key).random()
  return -1.0 + 2.0 * (np.arange(count) + offset) / count


@implementer(IDomain)
class Domain(object):
  """Base class for the canonical domains."""
  dimension = None
  bounded = False
  name = None

  def contains(self, x):
    p = np.asarray(x, dtype=float).reshape(-1)
    if p.shape[0] != self.dimension:
      raise DimensionError("expected dimension %d, got %d" % (self.dimension, p.shape[0]))
    if not np.all(np.isfinite(p)): return False
    return bool(self.boundary_distances(p[None])[0] > 0.0)

  def contains_all(self, points):
    """vectorized `contains` for an `(m, n)` array."""
    pts = as_points(points, self.dimension)
    ok = np.all(np.isfinite(pts), axis=1)
    res = np.zeros(len(pts), dtype=bool)
    if ok.any(): res[ok] = self.boundary_distances(pts[ok]) > 0.0
    return res

  def boundary_distance(self, x):
    x = as_point(x, self.dimension)
    d = float(self.boundary_distances(x[None])[0])
    if not d > 0.0:
      raise DomainError("point %s is not in %s" % (fmt_point(x), self.name))
    return d

  def boundary_distances(self, points):
    raise NotImplementedError()

  def boundary_sample(self, count, seed):
    raise NotImplementedError()

  def boundary_points(self, params):
    """the finite boundary points for an `(m, k)` parameter array."""
    raise NotImplementedError()

  def ray_exit(self, x, direction):
    raise NotImplementedError()

  def interior_chart(self):
    raise NotImplementedError()

  def window(self):
    """`(lower, upper)` corners of a box used for sampling."""
    raise NotImplementedError()

  def sample_uniform(self, count, generator):
    """*count* points uniformly distributed in `G` (intersected with `window`)."""
    lo, hi = self.window()
    out = []; have = 0
    while have < count:
      cand = generator.uniform(lo, hi, size=(2 * (count - have) + 8, self.dimension))
      cand = cand[self.contains_all(cand)]
      out.append(cand); have += len(cand)
    return np.concatenate(out)[:count]

  def sample_hugging(self, count, generator):
    """*count* points close to the boundary (in a scale invariant sense)."""
    raise NotImplementedError()

  def _check_direction(self, direction):
    d = as_point(direction, self.dimension)
    nd = np.linalg.norm(d)
    if nd == 0.0: raise DomainError("the direction must not vanish")
    return d / nd

  def __repr__(self): return "<%s %s>" % (self.__class__.__name__, self.name)


class _Dimensioned(Domain):
  def __init__(self, dimension):
    if int(dimension) != dimension or dimension < 1:
      raise DomainError("the dimension must be a positive integer")
    self.dimension = int(dimension)


class HalfSpace(_Dimensioned):
  """The upper half space `H^n = {x: x_n > 0}`."""
  bounded = False

  @property
  def name(self): return "half%d" % self.dimension

  def boundary_distances(self, points):
    return as_points(points, self.dimension)[:, -1].copy()

  def boundary_sample(self, count, seed):
    n = self.dimension
    m = max(1, int(count) - 1)
    if n == 1: return BoundarySample(np.zeros((1, 1)), infinite=True)
    if n == 2: t = _stratified(m, seed, 1)[:, None]
    else:
      k = 1 << max(1, int(np.ceil(np.log2(m))))
      t = 2.0 * qmc.Sobol(d=n - 1, scramble=True, seed=seed).random(k)[:m] - 1.0
    return BoundarySample(self.boundary_points(t), t, infinite=True)

  def boundary_points(self, params):
    t = np.clip(np.asarray(params, dtype=float), -_EDGE, _EDGE)
    return np.column_stack((np.tan(0.5 * np.pi * t), np.zeros(len(t))))

  def ray_exit(self, x, direction):
    x = as_point(x, self.dimension); d = self._check_direction(direction)
    if d[-1] >= 0.0: return np.inf
    return float(x[-1] / -d[-1])

  def interior_chart(self):
    return InteriorChart(
      self.dimension,
      lambda p: np.column_stack((np.sinh(p[:, :-1]), np.exp(p[:, -1]))),
      lambda x: np.column_stack((np.arcsinh(x[:, :-1]), np.log(x[:, -1]))),
      )

  def window(self):
    n = self.dimension
    return np.append(-2.0 * np.ones(n - 1), 0.0), np.append(2.0 * np.ones(n - 1), 4.0)

  def sample_hugging(self, count, generator):
    n = self.dimension
    heights = 10.0 ** generator.uniform(-3.0, 0.5, size=count)
    horizontal = generator.uniform(-4.0, 4.0, size=(count, n - 1))
    return np.column_stack((horizontal, heights))


class UnitBall(_Dimensioned):
  """The unit ball `B^n`."""
  bounded = True

  @property
  def name(self): return "ball%d" % self.dimension

  def boundary_distances(self, points):
    return 1.0 - _norms(as_points(points, self.dimension))

  def boundary_sample(self, count, seed):
    n = self.dimension
    if n == 1: return BoundarySample(np.array([[-1.0], [1.0]]))
    pts, params = sphere_sample(max(2, int(count)), n, seed)
    return BoundarySample(pts, params)

  def boundary_points(self, params):
    return _sphere_points(np.asarray(params, dtype=float))

  def ray_exit(self, x, direction):
    x = as_point(x, self.dimension); d = self._check_direction(direction)
    b = np.dot(x, d); c = np.dot(x, x) - 1.0
    return float(-b + np.sqrt(b * b - c))

  def interior_chart(self):
    def point(p):
      s = _norms(p)
      r = -np.expm1(-s)
      with np.errstate(invalid="ignore", divide="ignore"):
        f = np.where(s > 0.0, r / s, 1.0)
      return p * f[:, None]
    def params(x):
      r = _norms(x)
      s = -np.log1p(-r)
      with np.errstate(invalid="ignore", divide="ignore"):
        f = np.where(r > 0.0, s / r, 1.0)
      return x * f[:, None]
    return InteriorChart(self.dimension, point, params)

  def window(self):
    n = self.dimension
    return -np.ones(n), np.ones(n)

  def sample_hugging(self, count, generator):
    d = _directions(count, self.dimension, generator)
    r = 1.0 - 10.0 ** generator.uniform(-3.0, -0.3, size=count)
    return d * r[:, None]


class PuncturedSpace(_Dimensioned):
  """`R^n` without the origin; its boundary is `{0, INFINITY}`."""
  bounded = False

  def __init__(self, dimension):
    super(PuncturedSpace, self).__init__(dimension)
    if self.dimension < 2: raise DomainError("a punctured line is not connected")

  @property
  def name(self): return "punctured%d" % self.dimension

  def boundary_distances(self, points):
    return _norms(as_points(points, self.dimension))

  def boundary_sample(self, count, seed):
    # the boundary consists of two points whatever the count
    return BoundarySample(np.zeros((1, self.dimension)), infinite=True)

  def boundary_points(self, params):
    return np.zeros((len(params), self.dimension))

  def ray_exit(self, x, direction):
    x = as_point(x, self.dimension); d = self._check_direction(direction)
    s = -np.dot(x, d)
    if s > 0.0 and np.allclose(x + s * d, 0.0, atol=1e-12 * max(1.0, s)):
      return float(s)
    return np.inf

  def interior_chart(self):
    return _polar_chart(self.dimension, np.log, np.exp)

  def window(self):
    n = self.dimension
    return -2.0 * np.ones(n), 2.0 * np.ones(n)

  def sample_hugging(self, count, generator):
    d = _directions(count, self.dimension, generator)
    r = 10.0 ** generator.uniform(-3.0, 3.0, size=count)
    return d * r[:, None]


class PuncturedBall(_Dimensioned):
  """The unit ball without its center."""
  bounded = True

  def __init__(self, dimension):
    super(PuncturedBall, self).__init__(dimension)
    if self.dimension < 2: raise DomainError("a punctured interval is not connected")

  @property
  def name(self): return "puncturedball%d" % self.dimension

  def boundary_distances(self, points):
    r = _norms(as_points(points, self.dimension))
    return np.minimum(r, 1.0 - r)

  def boundary_sample(self, count, seed):
    n = self.dimension
    origin = np.zeros((1, n))
    pts, params = sphere_sample(max(1, int(count) - 1), n, seed)
    atom = np.full((1, params.shape[1]), np.nan)
    return BoundarySample(np.concatenate((origin, pts)),
                          np.concatenate((atom, params)))

  def boundary_points(self, params):
    return _sphere_points(np.asarray(params, dtype=float))

  def ray_exit(self, x, direction):
    x = as_point(x, self.dimension)
    through = PuncturedSpace(self.dimension).ray_exit(x, direction)
    return min(through, UnitBall(self.dimension).ray_exit(x, direction))

  def interior_chart(self):
    return _polar_chart(self.dimension, logit, expit)

  def window(self): return UnitBall(self.dimension).window()

  def sample_hugging(self, count, generator):
    d = _directions(count, self.dimension, generator)
    s = 10.0 ** generator.uniform(-3.0, -0.3, size=count)
    r = np.where(generator.random(count) < 0.5, s, 1.0 - s)
    return d * r[:, None]


def _polar_chart(n, radial, radial_inverse):
  """a chart `(radial(|x|), direction)` of a rotationally symmetric domain.

  For `n = 2` the direction is the argument, for `n >= 3` an
  unnormalized vector.
  """
  if n == 2:
    return InteriorChart(
      2,
      lambda p: radial_inverse(p[:, 0])[:, None]
                * np.column_stack((np.cos(p[:, 1]), np.sin(p[:, 1]))),
      lambda x: np.column_stack((radial(_norms(x)), np.arctan2(x[:, 1], x[:, 0]))),
      )
  return InteriorChart(
    n + 1,
    lambda p: radial_inverse(p[:, 0])[:, None] * _sphere_points(p[:, 1:]),
    lambda x: np.column_stack((radial(_norms(x)), x / _norms(x)[:, None])),
    )


class Sector(Domain):
  """The planar angular domain `{(r, theta): r > 0, 0 < theta < phi}`."""
  dimension = 2
  bounded = False

  def __init__(self, phi):
    phi = float(phi)
    if not 0.0 < phi < 2.0 * np.pi:
      raise DomainError("the sector angle must lie in (0, 2pi)")
    self.phi = phi
    self._rays = np.array([[1.0, 0.0], [np.cos(phi), np.sin(phi)]])

  @property
  def name(self): return "sector:%.12g" % self.phi

  def angles(self, points):
    pts = as_points(points, 2)
    return np.mod(np.arctan2(pts[:, 1], pts[:, 0]), 2.0 * np.pi)

  def boundary_distances(self, points):
    pts = as_points(points, 2)
    r = _norms(pts)
    theta = self.angles(pts)
    d = np.full(len(pts), np.inf)
    for ray_angle in (0.0, self.phi):
      gap = np.abs(theta - ray_angle)
      gap = np.minimum(gap, 2.0 * np.pi - gap)
      d = np.minimum(d, np.where(gap <= 0.5 * np.pi, r * np.sin(gap), r))
    inside = (r > 0.0) & (theta > 0.0) & (theta < self.phi)
    return np.where(inside, d, -d)

  def boundary_sample(self, count, seed):
    m = max(2, int(count) - 1)
    t = _stratified(m - 1, seed, 3)
    params = np.concatenate(([0.0], t))[:, None]
    return BoundarySample(self.boundary_points(params), params, infinite=True)

  def boundary_points(self, params):
    """`t >= 0` runs along the ray `theta = 0`, `t < 0` along `theta = phi`."""
    t = np.clip(np.asarray(params, dtype=float)[:, 0], -_EDGE, _EDGE)
    r = np.tan(0.5 * np.pi * np.abs(t))
    rays = np.where((t >= 0.0)[:, None], self._rays[0], self._rays[1])
    return rays * r[:, None]

  def ray_exit(self, x, direction):
    x = as_point(x, 2); d = self._check_direction(direction)
    best = np.inf
    for e in self._rays:
      # x + s d = lam e
      det = -d[0] * e[1] + d[1] * e[0]
      if abs(det) < 1e-15: continue
      s = (x[0] * e[1] - x[1] * e[0]) / det
      lam = (x[0] * d[1] - x[1] * d[0]) / det
      if s > 0.0 and lam >= 0.0: best = min(best, s)
    return float(best)

  def interior_chart(self):
    phi = self.phi
    def point(p):
      theta = phi * expit(p[:, 1])
      return np.exp(p[:, 0])[:, None] * np.column_stack((np.cos(theta), np.sin(theta)))
    def params(x):
      return np.column_stack((np.log(_norms(x)), logit(self.angles(x) / phi)))
    return InteriorChart(2, point, params)

  def window(self):
    return -2.0 * np.ones(2), 2.0 * np.ones(2)

  def sample_uniform(self, count, generator):
    r = 2.0 * np.sqrt(generator.random(count))
    theta = self.phi * generator.uniform(1e-9, 1.0, size=count)
    return r[:, None] * np.column_stack((np.cos(theta), np.sin(theta)))

  def sample_hugging(self, count, generator):
    r = 10.0 ** generator.uniform(-2.0, 2.0, size=count)
    s = 10.0 ** generator.uniform(-3.0, 0.0, size=count) * min(0.5 * self.phi, 1.0)
    theta = np.where(generator.random(count) < 0.5, s, self.phi - s)
    return r[:, None] * np.column_stack((np.cos(theta), np.sin(theta)))


class Polygon(Domain):
  """The interior of a simple planar polygon."""
  dimension = 2
  bounded = True

  def __init__(self, vertices, source=None):
    v = as_points(vertices, 2)
    if len(v) > 1 and np.all(v[0] == v[-1]): v = v[:-1]
    if len(v) < 3: raise DomainError("a polygon needs at least 3 vertices")
    if not np.all(np.isfinite(v)): raise DomainError("non finite polygon vertex")
    ring = LinearRing(v)
    if not ring.is_simple:
      raise DomainError("the polygon must not intersect itself")
    self._polygon = ShapelyPolygon(ring)
    if not self._polygon.area > 0.0: raise DomainError("degenerate polygon")
    self.vertices = v
    self.source = source
    self._boundary = self._polygon.exterior
    self.perimeter = float(self._boundary.length)
    shapely.prepare(self._polygon)

  @property
  def name(self):
    return "polygon:%s" % self.source if self.source else "polygon"

  def boundary_distances(self, points):
    pts = as_points(points, 2)
    geoms = shapely.points(pts)
    d = shapely.distance(self._boundary, geoms)
    inside = shapely.contains(self._polygon, geoms)
    return np.where(inside, d, -d)

  def boundary_sample(self, count, seed):
    vparams = np.array([self._boundary.project(shapely.Point(p)) for p in self.vertices])
    m = max(0, int(count) - len(self.vertices))
    offset = make_rng(seed, 4).random()
    s = self.perimeter * (np.arange(m) + offset) / max(m, 1)
    params = np.concatenate((vparams, s))[:, None]
    weights = np.full(len(params), self.perimeter / len(params))
    return BoundarySample(self.boundary_points(params), params, weights=weights)

  def boundary_points(self, params):
    s = np.mod(np.asarray(params, dtype=float)[:, 0], self.perimeter)
    return shapely.get_coordinates(shapely.line_interpolate_point(self._boundary, s))

  def ray_exit(self, x, direction):
    x = as_point(x, 2); d = self._check_direction(direction)
    minx, miny, maxx, maxy = self._polygon.bounds
    reach = 2.0 * (np.hypot(maxx - minx, maxy - miny) + np.linalg.norm(x))
    hits = shapely.get_coordinates(
      self._boundary.intersection(LineString([x, x + reach * d])))
    if not len(hits): return np.inf
    dist = _norms(hits - x)
    dist = dist[dist > 0.0]
    return float(dist.min()) if len(dist) else np.inf

  def interior_point(self):
    """a point guaranteed to lie inside."""
    return np.array(self._polygon.representative_point().coords[0])

  def interior_chart(self):
    return InteriorChart(2, lambda p: p.copy(), lambda x: x.copy())

  def window(self):
    minx, miny, maxx, maxy = self._polygon.bounds
    return np.array([minx, miny]), np.array([maxx, maxy])

  def sample_hugging(self, count, generator):
    minx, miny, maxx, maxy = self._polygon.bounds
    size = max(maxx - minx, maxy - miny)
    out = []; have = 0
    while have < count:
      k = 2 * (count - have) + 8
      base = self.boundary_points(generator.uniform(0.0, self.perimeter, size=(k, 1)))
      offsets = _directions(k, 2, generator) \
                * (size * 10.0 ** generator.uniform(-4.0, -1.0, size=k))[:, None]
      cand = base + offsets
      cand = cand[self.contains_all(cand)]
      out.append(cand); have += len(cand)
    return np.concatenate(out)[:count]


def read_polygon(source):
  """the vertices from *source* (a file name or an iterable of lines).

  Each nonempty line holds one `x y` pair (a comma may separate the
  coordinates); lines starting with `#` are ignored. The polygon is
  closed implicitly.
  """
  if isinstance(source, str):
    with open(source) as f: lines = f.readlines()
  else: lines = list(source)
  vertices = []
  for lineno, line in enumerate(lines, 1):
    line = line.strip()
    if not line or line.startswith("#"): continue
    fields = line.replace(",", " ").split()
    if len(fields) != 2:
      raise DomainError("line %d: expected an `x y` pair" % lineno)
    try: vertices.append([float(c) for c in fields])
    except ValueError:
      raise DomainError("line %d: bad coordinate" % lineno)
  return np.array(vertices)


_DIMENSIONED = dict(
  ball=UnitBall, half=HalfSpace,
  punctured=PuncturedSpace, puncturedball=PuncturedBall,
  )
_named = re.compile(r"^(ball|half|punctured|puncturedball)(\d+)$")


def parse_domain(text):
  """the domain described by the short name *text*.

  Examples: `ball2`, `half3`, `punctured2`, `puncturedball2`,
  `sector:1.0472`, `polygon:vertices.txt`.
  """
  text = text.strip()
  m = _named.match(text)
  if m is not None:
    return _DIMENSIONED[m.group(1)](int(m.group(2)))
  kind, sep, arg = text.partition(":")
  if sep and kind == "sector":
    try: phi = float(arg)
    except ValueError: raise DomainError("bad sector angle: %s" % arg)
    return Sector(phi)
  if sep and kind == "polygon":
    try: vertices = read_polygon(arg)
    except (IOError, OSError) as e:
      raise DomainError("cannot read polygon %s: %s" % (arg, e))
    return Polygon(vertices, source=arg)
  raise DomainError("unknown domain: %s" % text)
