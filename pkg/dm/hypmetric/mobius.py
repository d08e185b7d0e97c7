# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Extended space, Möbius transformations and the chordal geometry.

Points of the extended space are either finite (numpy vectors) or
the singleton `INFINITY`. All formulas have explicit branches for
`INFINITY`; no large coordinate sentinel is ever used.

The Möbius group is generated by inversions in spheres and
reflections in hyperplanes; a `MobiusMap` is a finite composition
of such generators, applied from left to right.
"""
import numpy as np
from zope.interface import implementer

from .interfaces import IMobiusGenerator
from .exception import DimensionError, DomainError, DegenerateError
from .util import as_point, unit


class _Infinity(object):
  """The point at infinity of the extended space."""
  _instance = None

  def __new__(cls):
    if cls._instance is None: cls._instance = object.__new__(cls)
    return cls._instance

  def __repr__(self): return "INFINITY"

  def __reduce__(self): return (_Infinity, ())

INFINITY = _Infinity()


def is_infinite(x): return x is INFINITY


def extended(x, dimension=None):
  """*x* as an extended point: `INFINITY` or a finite vector."""
  if x is INFINITY: return x
  return as_point(x, dimension)


def same_point(x, y):
  if x is INFINITY or y is INFINITY: return x is y
  return x.shape == y.shape and bool(np.all(x == y))


def _check_dimensions(*points):
  dims = set(p.shape[0] for p in points if p is not INFINITY)
  if len(dims) > 1:
    raise DimensionError("points of different dimensions: %s" % sorted(dims))


def chordal_distance(x, y):
  """the chordal distance `q(x, y)` in `[0, 1]`."""
  x = extended(x); y = extended(y)
  _check_dimensions(x, y)
  if x is INFINITY and y is INFINITY: return 0.0
  if y is INFINITY: x, y = y, x
  if x is INFINITY: return float(1.0 / np.sqrt(1.0 + np.dot(y, y)))
  return float(np.linalg.norm(x - y)
               / (np.sqrt(1.0 + np.dot(x, x)) * np.sqrt(1.0 + np.dot(y, y))))


def spherical_distance(x, y):
  """the arc length distance on the Riemann sphere of radius 1/2.

  This is the weighted length metric with density `1/(1+|z|^2)`.
  """
  return float(np.arcsin(min(1.0, chordal_distance(x, y))))


def stereographic_project(x, dimension=None):
  """the image of *x* on the sphere `S^n(e_{n+1}/2, 1/2)`.

  *dimension* is needed only for `INFINITY`.
  """
  if x is INFINITY:
    if dimension is None:
      raise DimensionError("the dimension is needed to project infinity")
    return unit(dimension + 1, dimension)
  x = as_point(x, dimension)
  n = x.shape[0]
  e = unit(n + 1, n)
  d = np.append(x, 0.0) - e
  return e + d / np.dot(d, d)


def stereographic_inverse(p):
  """the extended point projecting to the sphere point *p*."""
  p = as_point(p)
  n = p.shape[0] - 1
  if n < 1: raise DimensionError("sphere points need at least two coordinates")
  e = unit(n + 1, n)
  d = p - e
  dd = np.dot(d, d)
  if dd == 0.0: return INFINITY
  x = e + d / dd
  return x[:n]


def absolute_ratio(a, b, c, d):
  """the absolute (cross) ratio `|a,b,c,d| = q(a,c)q(b,d) / (q(a,b)q(c,d))`."""
  pts = [extended(p) for p in (a, b, c, d)]
  _check_dimensions(*pts)
  for i in range(4):
    for j in range(i + 1, 4):
      if same_point(pts[i], pts[j]):
        raise DegenerateError("the absolute ratio needs four distinct points")
  a, b, c, d = pts
  q = chordal_distance
  return q(a, c) * q(b, d) / (q(a, b) * q(c, d))


##############################################################################
# generators

@implementer(IMobiusGenerator)
class Inversion(object):
  """Inversion in the sphere `S^{n-1}(center, radius)`."""

  def __init__(self, center, radius):
    self.center = as_point(center)
    if not radius > 0:
      raise DomainError("the inversion radius must be positive")
    self.radius = float(radius)

  def __call__(self, x):
    x = extended(x)
    a = self.center
    if x is INFINITY: return a.copy()
    _check_dimensions(x, a)
    v = x - a
    vv = np.dot(v, v)
    if vv == 0.0: return INFINITY
    return a + self.radius ** 2 * v / vv

  def __repr__(self):
    return "Inversion(%r, %r)" % (self.center.tolist(), self.radius)


@implementer(IMobiusGenerator)
class Reflection(object):
  """Reflection in the hyperplane `P(normal, offset) = {x: x.normal = offset}`.

  *normal* is kept as given (not normalized).
  """

  def __init__(self, normal, offset=0.0):
    self.normal = as_point(normal)
    if not np.any(self.normal):
      raise DomainError("the reflection normal must not vanish")
    self.offset = float(offset)

  def __call__(self, x):
    x = extended(x)
    if x is INFINITY: return x
    a = self.normal
    _check_dimensions(x, a)
    return x - 2.0 * (np.dot(x, a) - self.offset) * a / np.dot(a, a)

  def __repr__(self):
    return "Reflection(%r, %r)" % (self.normal.tolist(), self.offset)


class MobiusMap(object):
  """A composition of generators, applied from left to right."""

  def __init__(self, generators=()):
    self.generators = tuple(generators)

  def __call__(self, x):
    x = extended(x)
    for g in self.generators: x = g(x)
    return x

  def inverse(self):
    # every generator is an involution
    return self.__class__(reversed(self.generators))

  def __mul__(self, other):
    """`(self * other)(x) == self(other(x))`."""
    return self.__class__(other.generators + self.generators)

  def __len__(self): return len(self.generators)

  def __repr__(self):
    return "MobiusMap(%r)" % (list(self.generators),)


def mobius_apply(m, x):
  """apply Möbius map (or single generator) *m* to the extended point *x*."""
  return m(x)


def ball_automorphism(a):
  """a Möbius self map of the unit ball sending *a* to `0`.

  The inversion in the sphere orthogonal to `S^{n-1}` centred at
  `a/|a|^2` is followed by the reflection in the hyperplane
  through `0` orthogonal to *a*.
  """
  a = as_point(a)
  aa = np.dot(a, a)
  if aa >= 1.0: raise DomainError("the point must lie in the unit ball")
  if aa == 0.0: return MobiusMap()
  star = a / aa
  return MobiusMap((Inversion(star, np.sqrt(np.dot(star, star) - 1.0)),
                    Reflection(a, 0.0)))


def halfspace_inversion(center, radius):
  """an inversion mapping the upper half space onto itself."""
  center = as_point(center)
  if center[-1] != 0.0:
    raise DomainError("the center must lie on the boundary hyperplane")
  return Inversion(center, radius)


def vertical_reflection(normal, offset=0.0):
  """a reflection mapping the upper half space onto itself."""
  normal = as_point(normal)
  if normal[-1] != 0.0:
    raise DomainError("the hyperplane must be vertical")
  return Reflection(normal, offset)


def halfspace_automorphism(x):
  """a Möbius self map of the upper half space sending *x* to `e_n`.

  A horizontal translation (two parallel vertical reflections)
  is followed by a dilation (two concentric inversions).
  """
  x = as_point(x)
  n = x.shape[0]
  if x[-1] <= 0.0: raise DomainError("the point must lie in the upper half space")
  gens = []
  v = -x.copy(); v[-1] = 0.0
  vv = np.dot(v, v)
  if vv > 0.0:
    gens.extend((Reflection(v, 0.0), Reflection(v, vv / 2.0)))
  if x[-1] != 1.0:
    o = np.zeros(n)
    gens.extend((Inversion(o, 1.0), Inversion(o, np.sqrt(1.0 / x[-1]))))
  return MobiusMap(gens)


def random_generator(n, rng, scale=2.0):
  """a random inversion or reflection in `R^n`."""
  if rng.random() < 0.5:
    return Inversion(rng.normal(size=n) * scale, rng.uniform(0.2, 2.0) * scale)
  return Reflection(rng.normal(size=n), rng.normal() * scale)


def random_mobius(n, rng, generators=3):
  return MobiusMap([random_generator(n, rng) for _ in range(generators)])


def random_ball_automorphism(n, rng):
  r = rng.uniform(0.0, 0.9)
  d = rng.normal(size=n); d /= np.linalg.norm(d)
  return ball_automorphism(r * d)


def random_halfspace_map(n, rng, generators=3):
  """a random composition of half space preserving generators."""
  gens = []
  for _ in range(generators):
    if n > 1 and rng.random() < 0.5:
      normal = np.append(rng.normal(size=n - 1), 0.0)
      gens.append(vertical_reflection(normal, rng.normal()))
    else:
      center = np.append(rng.normal(size=n - 1), 0.0)
      gens.append(halfspace_inversion(center, rng.uniform(0.3, 3.0)))
  return MobiusMap(gens)
