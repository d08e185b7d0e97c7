# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Utilities."""
import numpy as np
from decorator import decorator

from .exception import DimensionError, DomainError


def vocab_from_names(pairs):
  """turn sequence *pairs* of `(name, title)` into a vocabulary."""
  from zope.schema.vocabulary import SimpleVocabulary, SimpleTerm

  return SimpleVocabulary(tuple(SimpleTerm(name, title=title)
                                for name, title in pairs
                                ))


def as_point(x, dimension=None):
  """*x* as a finite float vector, optionally checking its *dimension*."""
  p = np.asarray(x, dtype=float)
  if p.ndim == 0: p = p.reshape(1)
  if p.ndim != 1:
    raise DimensionError("a point must be a vector, got shape %s" % (p.shape,))
  if not np.all(np.isfinite(p)):
    raise DomainError("point with non finite coordinates: %s" % fmt_point(p))
  if dimension is not None and p.shape[0] != dimension:
    raise DimensionError("expected dimension %d, got %d" % (dimension, p.shape[0]))
  return p


def as_points(points, dimension=None):
  """*points* as an `(m, n)` float array."""
  a = np.asarray(points, dtype=float)
  if a.ndim == 1: a = a.reshape(1, -1)
  if a.ndim != 2:
    raise DimensionError("expected an (m, n) array, got shape %s" % (a.shape,))
  if dimension is not None and a.shape[1] != dimension:
    raise DimensionError("expected dimension %d, got %d" % (dimension, a.shape[1]))
  return a


def fmt_point(p):
  return ",".join("%.12g" % c for c in np.atleast_1d(p))


def unit(n, i):
  """the `i`-th standard basis vector of `R^n` (0 based)."""
  e = np.zeros(n); e[i] = 1.0
  return e


def angle_between(u, v):
  """angle in `[0, pi]` between the nonzero vectors *u* and *v*.

  Computed with `atan2` in the plane spanned by *u* and *v*;
  opposite vectors give exactly `pi`.
  """
  nu = np.linalg.norm(u); nv = np.linalg.norm(v)
  uu = u / nu; vv = v / nv
  c = float(np.dot(uu, vv))
  s = float(np.linalg.norm(vv - c * uu))
  if s == 0.0: return 0.0 if c > 0 else np.pi
  return float(np.arctan2(s, c))


class Bracket(object):
  """An interval `[lower, upper]` known to contain a value."""

  def __init__(self, lower, upper, value=None):
    self.lower = float(lower); self.upper = float(upper)
    # the best point estimate; defaults to the upper end
    self.value = self.upper if value is None else float(value)

  @classmethod
  def exact(cls, v): return cls(v, v)

  @property
  def width(self): return self.upper - self.lower

  def contains(self, v, tolerance=0.0):
    return self.lower - tolerance <= v <= self.upper + tolerance

  def __iter__(self): return iter((self.lower, self.upper))

  def __repr__(self):
    return "[%.12g, %.12g]" % (self.lower, self.upper)


def rng(seed, *keys):
  """a numpy generator derived deterministically from *seed* and *keys*."""
  return np.random.default_rng(np.random.SeedSequence([int(seed)] + [int(k) for k in keys]))


@decorator
def inside_domain(f, G, x, y, *args, **kw):
  """check that *x* and *y* lie in domain *G*.

  For functions with signature `(G, x, y, ...)`.
  """
  x = as_point(x, G.dimension); y = as_point(y, G.dimension)
  for p in (x, y):
    if not G.contains(p):
      raise DomainError("point %s is not in %s" % (fmt_point(p), G.name))
  return f(G, x, y, *args, **kw)
