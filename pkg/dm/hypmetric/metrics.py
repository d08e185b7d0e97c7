# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Hyperbolic type metrics.

Closed forms are used wherever they exist; the quasihyperbolic metric
of other domains comes from the numeric geodesic oracle, the
Apollonian and Seittenranta metrics from the boundary supremum
searches. `evaluate` returns a `Bracket` for every metric kind:
exact values have zero width, numeric ones carry certified bounds.
"""
from logging import getLogger

import numpy as np
from scipy.optimize import minimize_scalar

from .config import SupSearchConfig, GeodesicConfig
from .domains import UnitBall, HalfSpace, PuncturedSpace, Sector
from .exception import DomainError, ParameterError
from .geodesics import numeric_geodesic
from .mobius import chordal_distance, spherical_distance
from .search import apollonian_search, seittenranta_search
from .util import as_point, angle_between, inside_domain, Bracket, fmt_point

logger = getLogger(__name__)


def _ball_points(x, y):
  x = as_point(x); y = as_point(y, len(x))
  for p in (x, y):
    if not np.dot(p, p) < 1.0:
      raise DomainError("point %s is not in the unit ball" % fmt_point(p))
  return x, y


def rho_ball(x, y):
  """the hyperbolic distance in the unit ball.

  `rho = 2 arsinh(|x-y| / sqrt((1-|x|^2)(1-|y|^2)))`
  """
  x, y = _ball_points(x, y)
  nx = np.linalg.norm(x); ny = np.linalg.norm(y)
  s = np.linalg.norm(x - y) / np.sqrt((1.0 - nx) * (1.0 + nx) * (1.0 - ny) * (1.0 + ny))
  return float(2.0 * np.arcsinh(s))


def rho_halfspace(x, y):
  """the hyperbolic distance in the upper half space.

  Equal to `arcosh(1 + |x-y|^2 / (2 x_n y_n))`; evaluated in the
  form `2 arsinh(|x-y| / (2 sqrt(x_n y_n)))` which keeps its precision
  for nearby points.
  """
  x = as_point(x); y = as_point(y, len(x))
  if not (x[-1] > 0.0 and y[-1] > 0.0):
    raise DomainError("points must lie in the upper half space")
  return float(2.0 * np.arcsinh(np.linalg.norm(x - y) / (2.0 * np.sqrt(x[-1] * y[-1]))))


def _is_halfplane(G):
  return isinstance(G, Sector) and G.phi == np.pi


def hyperbolic(G, x, y):
  """the hyperbolic metric of the unit ball or the half space *G*."""
  if isinstance(G, UnitBall):
    return rho_ball(as_point(x, G.dimension), as_point(y, G.dimension))
  if isinstance(G, HalfSpace):
    return rho_halfspace(as_point(x, G.dimension), as_point(y, G.dimension))
  raise DomainError("the hyperbolic metric is defined for balls and half spaces only, "
                    "not for %s" % G.name)


def quasihyperbolic_punctured(x, y):
  """the quasihyperbolic distance in `R^n \\ {0}`: `sqrt(phi^2 + log^2(|x|/|y|))`."""
  x = as_point(x); y = as_point(y, len(x))
  nx = np.linalg.norm(x); ny = np.linalg.norm(y)
  if nx == 0.0 or ny == 0.0:
    raise DomainError("the origin is not in the punctured space")
  phi = angle_between(x, y)
  return float(np.hypot(phi, np.log(nx / ny)))


def _fold(phi, z):
  """*z* reflected into the half sector `0 < theta <= phi/2`.

  Returns the reflected point, its polar coordinates and whether *z*
  lay beyond the bisector.
  """
  beta = 0.5 * phi
  theta = np.mod(np.arctan2(z[1], z[0]), 2.0 * np.pi)
  if not 0.0 < theta < phi:
    raise DomainError("point %s is not in the sector" % fmt_point(z))
  r = np.linalg.norm(z)
  beyond = theta > beta
  if beyond: theta = phi - theta
  return r * np.array([np.cos(theta), np.sin(theta)]), r, theta, beyond


def _arc_below(p, q, beta):
  """true if the half plane geodesic from *p* to *q* keeps its polar angle `<= beta`."""
  if p[0] == q[0]: return True
  c = (np.dot(p, p) - np.dot(q, q)) / (2.0 * (p[0] - q[0]))
  R = np.hypot(p[0] - c, p[1])
  if c <= R: return True
  lo, hi = sorted((np.arctan2(p[1], p[0] - c), np.arctan2(q[1], q[0] - c)))
  return not (lo < np.arccos(-R / c) < hi and np.arcsin(R / c) > beta)


class _BisectorCost(object):
  """the quasihyperbolic distance from a half sector point to the bisector point `e^sigma b`.

  Between the two tangent points the half plane geodesic is visible;
  beyond them the path follows the bisector at the rate `1/sin(beta)`.
  """

  def __init__(self, r, theta, beta):
    self.log_r = np.log(r); self.beta = beta
    self.a = np.sin(theta) * np.sin(beta); self.c = np.cos(beta - theta)
    cb = np.cos(beta)
    root = np.sqrt(max(np.cos(theta) ** 2 - cb ** 2, 0.0))
    # the tangent points lie at the log radii `log r -+ t`
    t = np.log((np.cos(theta) + root) / cb)
    self.lower = self.log_r - t; self.upper = self.log_r + t

  def rho(self, sigma):
    lam = sigma - self.log_r
    return np.arccosh(1.0 + np.maximum(np.cosh(lam) - self.c, 0.0) / self.a)

  def __call__(self, sigma):
    sigma = np.asarray(sigma, dtype=float)
    s = np.clip(sigma, self.lower, self.upper)
    return self.rho(s) + np.abs(sigma - s) / np.sin(self.beta)


def quasihyperbolic_sector(phi, x, y):
  """the quasihyperbolic distance in the sector of angle `phi < pi`.

  On either side of the bisector the boundary distance is that of the
  half plane bounded by the nearer ray. Geodesics are half plane
  geodesics, joined by a piece of the bisector where they would
  cross it.
  """
  if not 0.0 < phi < np.pi:
    raise ParameterError("the closed form needs a sector angle in (0, pi)")
  x = as_point(x, 2); y = as_point(y, 2)
  beta = 0.5 * phi
  fx, rx, tx, bx = _fold(phi, x); fy, ry, ty, by = _fold(phi, y)
  if bx == by and _arc_below(fx, fy, beta): return rho_halfspace(fx, fy)
  cx = _BisectorCost(rx, tx, beta); cy = _BisectorCost(ry, ty, beta)
  lo = min(cx.lower, cy.lower); hi = max(cx.upper, cy.upper)
  grid = np.linspace(lo, hi, 65)
  i = int(np.argmin(cx(grid) + cy(grid)))
  bounds = (grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)])
  if bounds[0] == bounds[1]: return float(cx(bounds[0]) + cy(bounds[0]))
  res = minimize_scalar(lambda s: float(cx(s) + cy(s)), bounds=bounds, method="bounded",
                        options=dict(xatol=1e-12))
  return float(min(res.fun, cx(grid[i]) + cy(grid[i])))


@inside_domain
def distance_ratio_j(G, x, y):
  """`j_G(x, y) = log(1 + |x-y| / min(d(x), d(y)))`."""
  d = min(G.boundary_distance(x), G.boundary_distance(y))
  return float(np.log1p(np.linalg.norm(x - y) / d))


@inside_domain
def distance_ratio_jtilde(G, x, y):
  """`log((1 + |x-y|/d(x)) (1 + |x-y|/d(y)))`."""
  L = np.linalg.norm(x - y)
  return float(np.log1p(L / G.boundary_distance(x)) + np.log1p(L / G.boundary_distance(y)))


def radial_case(G, x, y):
  """true when *x* and *y* lie on a segment to a common nearest boundary point.

  This is the case iff `|d(x) - d(y)| = |x - y|`; then
  `k_G(x, y) = j_G(x, y) = |log(d(x)/d(y))|`.
  """
  L = np.linalg.norm(x - y)
  dx = G.boundary_distance(x); dy = G.boundary_distance(y)
  return abs(abs(dx - dy) - L) <= 1e-12 * max(L, dx, dy)


@inside_domain
def quasihyperbolic_bracket(G, x, y, config=None):
  """the quasihyperbolic distance as a `Bracket`.

  Closed forms (punctured space, half space, convex sectors, radial
  segments) give exact brackets; otherwise the numeric geodesic oracle
  is used. A `ConvergenceError` carries the bracket reached.
  """
  if np.all(x == y): return Bracket.exact(0.0)
  if isinstance(G, PuncturedSpace):
    return Bracket.exact(quasihyperbolic_punctured(x, y))
  if isinstance(G, HalfSpace): return Bracket.exact(rho_halfspace(x, y))
  if _is_halfplane(G): return Bracket.exact(rho_halfspace(x, y))
  if isinstance(G, Sector) and G.phi < np.pi:
    return Bracket.exact(quasihyperbolic_sector(G.phi, x, y))
  if radial_case(G, x, y):
    return Bracket.exact(abs(np.log(G.boundary_distance(x) / G.boundary_distance(y))))
  path, bracket = numeric_geodesic(G, x, y, config or GeodesicConfig())
  logger.debug("numeric quasihyperbolic distance in %s: %r", G.name, bracket)
  return bracket


def quasihyperbolic(G, x, y, config=None):
  """the quasihyperbolic distance (the best path length for numeric cases)."""
  return quasihyperbolic_bracket(G, x, y, config).value


def _sup_closed_form(G, x, y):
  """the common closed form of the Apollonian and Seittenranta metrics or `None`."""
  if isinstance(G, UnitBall): return rho_ball(x, y)
  if isinstance(G, HalfSpace) or _is_halfplane(G): return rho_halfspace(x, y)
  return None


@inside_domain
def apollonian(G, x, y, config=None):
  """the Apollonian metric: exact for balls and half spaces, else a lower bound."""
  if np.all(x == y): return 0.0
  closed = _sup_closed_form(G, x, y)
  if closed is not None: return closed
  return apollonian_search(G, x, y, config or SupSearchConfig()).value


@inside_domain
def seittenranta_delta(G, x, y, config=None):
  """the Seittenranta metric: exact for balls, half spaces and the
  punctured space, else a lower bound."""
  if np.all(x == y): return 0.0
  closed = _sup_closed_form(G, x, y)
  if closed is not None: return closed
  if isinstance(G, PuncturedSpace): return distance_ratio_j(G, x, y)
  return seittenranta_search(G, x, y, config or SupSearchConfig()).value


def m_ball(x, y):
  """`m(x, y) = 2 log(1 + |x-y| / (2 min(d(x), d(y))))` in the unit ball.

  Not a metric: radial triples violate the triangle inequality.
  """
  x, y = _ball_points(x, y)
  d = min(1.0 - np.linalg.norm(x), 1.0 - np.linalg.norm(y))
  return float(2.0 * np.log1p(np.linalg.norm(x - y) / (2.0 * d)))


def m_ball_violation(n=2, direction=None, grid=64):
  """the worst triangle inequality violation of `m` over radial triples.

  Points `t_i e` (`t_i` equally spaced in `(0, 1)`) along the unit
  vector *direction*; returns `(margin, (x, z, y))` maximizing
  `m(x, y) - m(x, z) - m(z, y)`.
  """
  e = np.zeros(n); e[0] = 1.0
  if direction is not None:
    e = as_point(direction, n); e = e / np.linalg.norm(e)
  t = np.arange(1, grid) / float(grid)
  d = 1.0 - t
  L = np.abs(t[:, None] - t[None, :])
  M = 2.0 * np.log1p(L / (2.0 * np.minimum(d[:, None], d[None, :])))
  # margin[i, k, j] = M[i, j] - M[i, k] - M[k, j]
  margin = M[:, None, :] - M[:, :, None] - M[None, :, :]
  k = int(np.argmax(margin))
  i, z, j = np.unravel_index(k, margin.shape)
  return float(margin[i, z, j]), (t[i] * e, t[z] * e, t[j] * e)


##############################################################################
# metric transforms

class Power(object):
  """`d -> d^a` for `a` in `(0, 1]`: again a metric."""
  quasi_constant = 1.0

  def __init__(self, a):
    if not 0.0 < a <= 1.0: raise ParameterError("the exponent must lie in (0, 1]")
    self.a = float(a)

  def __call__(self, d): return np.asarray(d, dtype=float) ** self.a

  def __repr__(self): return "Power(%g)" % self.a


def _ratio(t): return t / (1.0 + t)


def _cap(t): return np.minimum(t, 1.0)


CONCAVE_PRESETS = dict(ratio=_ratio, log=np.log1p, min=_cap)


class Concave(object):
  """`d -> h(d)` for increasing `h` with `h(0) = 0` and `h(t)/t` decreasing.

  *h* is a preset name (`ratio`, `log`, `min`) or a vectorized callable;
  callables are checked on a logarithmic grid.
  """
  quasi_constant = 1.0

  def __init__(self, h):
    self.name = h if isinstance(h, str) else getattr(h, "__name__", "h")
    if isinstance(h, str):
      try: h = CONCAVE_PRESETS[h]
      except KeyError: raise ParameterError("unknown concave preset: %s" % h)
    else:
      t = np.logspace(-6, 6, 241)
      v = np.asarray(h(t), dtype=float)
      if abs(float(np.asarray(h(np.zeros(1)))[0])) > 1e-12 or np.any(np.diff(v) < -1e-12) \
         or np.any(np.diff(v / t) > 1e-12):
        raise ParameterError("h must be increasing with h(0) = 0 and h(t)/t decreasing")
    self.h = h

  def __call__(self, d): return np.asarray(self.h(np.asarray(d, dtype=float)), dtype=float)

  def __repr__(self): return "Concave(%s)" % self.name


class MaxPower(object):
  """`d -> max(d^a, d^b)` with `0 < a <= 1 <= b`.

  The result satisfies the triangle inequality up to the factor `2^(b-1)`.
  """

  def __init__(self, a, b):
    if not 0.0 < a <= 1.0: raise ParameterError("a must lie in (0, 1]")
    if not b >= 1.0: raise ParameterError("b must be at least 1")
    self.a = float(a); self.b = float(b)

  @property
  def quasi_constant(self): return 2.0 ** (self.b - 1.0)

  def __call__(self, d):
    d = np.asarray(d, dtype=float)
    return np.maximum(d ** self.a, d ** self.b)

  def __repr__(self): return "MaxPower(%g, %g)" % (self.a, self.b)


def metric_transform(values, mode):
  """the metric values *values* transformed by *mode*."""
  return mode(values)


def quasi_constant_check(dxy, dxz, dzy, mode, constant=None):
  """the worst margin of `C (t(d(x,z)) + t(d(z,y))) - t(d(x,y))` over triples.

  *dxy*, *dxz*, *dzy* hold the metric values of the sampled triples;
  `C` defaults to the quasi constant of *mode*. Returns
  `(margin, index)`; a nonnegative margin means the check passed.
  """
  c = mode.quasi_constant if constant is None else constant
  margins = c * (mode(dxz) + mode(dzy)) - mode(dxy)
  i = int(np.argmin(margins))
  return float(margins[i]), i


##############################################################################
# dispatch

def check_metric(G, kind):
  """raise `DomainError` unless metric *kind* is defined on *G*."""
  if kind == "rho" and not isinstance(G, (UnitBall, HalfSpace)):
    raise DomainError("the hyperbolic metric needs a ball or a half space")
  if kind == "m" and not isinstance(G, UnitBall):
    raise DomainError("m is defined on the unit ball only")
  if kind not in EVALUATORS: raise DomainError("unknown metric: %s" % kind)


def _exact(f):
  def evaluate(G, x, y, sup_config, geodesic_config):
    return Bracket.exact(f(G, x, y))
  return evaluate


def _apollonian_bracket(G, x, y, sup_config, geodesic_config):
  v = apollonian(G, x, y, sup_config)
  if _sup_closed_form(G, x, y) is not None: return Bracket.exact(v)
  return Bracket(v, max(v, 2.0 * distance_ratio_j(G, x, y)), v)


def _delta_bracket(G, x, y, sup_config, geodesic_config):
  v = seittenranta_delta(G, x, y, sup_config)
  if _sup_closed_form(G, x, y) is not None or isinstance(G, PuncturedSpace):
    return Bracket.exact(v)
  return Bracket(v, max(v, distance_ratio_jtilde(G, x, y)), v)


EVALUATORS = dict(
  rho=_exact(hyperbolic),
  k=lambda G, x, y, s, g: quasihyperbolic_bracket(G, x, y, g),
  j=_exact(distance_ratio_j),
  jtilde=_exact(distance_ratio_jtilde),
  alpha=_apollonian_bracket,
  delta=_delta_bracket,
  q=_exact(lambda G, x, y: chordal_distance(x, y)),
  spherical=_exact(lambda G, x, y: spherical_distance(x, y)),
  euclidean=_exact(lambda G, x, y: float(np.linalg.norm(x - y))),
  m=_exact(lambda G, x, y: m_ball(x, y)),
  )


@inside_domain
def evaluate(G, x, y, kind, sup_config=None, geodesic_config=None):
  """metric *kind* of *G* at `(x, y)` as a `Bracket`."""
  check_metric(G, kind)
  return EVALUATORS[kind](G, x, y, sup_config or SupSearchConfig(),
                          geodesic_config or GeodesicConfig())


def distance(G, kind, x, y, sup_config=None, geodesic_config=None):
  """metric *kind* of *G* at `(x, y)` (the bracket's point estimate)."""
  return evaluate(G, x, y, kind, sup_config, geodesic_config).value


def metric_function(G, kind, sup_config=None, geodesic_config=None):
  """a two point function evaluating metric *kind* of *G*."""
  check_metric(G, kind)
  def d(x, y): return distance(G, kind, x, y, sup_config, geodesic_config)
  d.__name__ = "%s_%s" % (kind, G.name)
  return d
