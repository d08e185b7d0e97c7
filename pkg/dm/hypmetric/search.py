# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Supremum searches over pairs of boundary points.

The Apollonian and the Seittenranta metric are suprema of cross ratio
expressions over pairs `a, b` of boundary points. The searches
evaluate a deterministic boundary sample, then refine the best
candidates continuously in the boundary parameters (compass search,
followed by a Nelder-Mead polish which is kept only when it improves).
Every reported value is attained at its witness pair and therefore
a lower bound of the supremum.
"""
from logging import getLogger

import numpy as np
from scipy.optimize import minimize

from .config import SupSearchConfig
from .mobius import INFINITY
from .util import inside_domain

logger = getLogger(__name__)


class SupResult(object):
  """*value* attained at the boundary pair *witness* (extended points)."""

  def __init__(self, value, witness):
    self.value = float(value); self.witness = witness

  def __float__(self): return self.value

  def __repr__(self): return "SupResult(%.12g, %r)" % (self.value, self.witness)


def _distances(points, p):
  return np.linalg.norm(points - p, axis=1)


def _initial_step(params):
  """a compass step of the order of the sample spacing."""
  k = params.shape[1]
  spread = float(np.max(np.ptp(params, axis=0))) if len(params) > 1 else 0.0
  if not spread > 0.0: return 0.1
  return 2.0 * spread * len(params) ** (-1.0 / k)


def compass_refine(objective, p0, value, step, config):
  """maximize *objective* starting at *p0* (with `objective(p0) == value`).

  Coordinate-wise steps of size *step*; the step shrinks by
  `config.shrink` after each sweep improving less than `config.tolerance`.
  The returned value never falls below *value*.
  """
  p = np.array(p0, dtype=float)
  for sweep in range(config.refinement_iterations):
    start = value
    for i in range(len(p)):
      for sign in (1.0, -1.0):
        q = p.copy(); q[i] += sign * step
        v = objective(q)
        if v > value: p, value = q, v; break
    if value - start < config.tolerance:
      step *= config.shrink
      if step < 1e-14 * (1.0 + np.max(np.abs(p))): break
  return p, value


def polish(objective, p, value, step):
  """a Nelder-Mead polish of the maximum; kept only if it improves."""
  res = minimize(lambda q: -objective(q), p, method="Nelder-Mead",
                 options=dict(initial_simplex=_simplex(p, step), xatol=1e-13,
                              fatol=1e-15, maxiter=200 * len(p)))
  v = -float(res.fun)
  if np.isfinite(v) and v > value: return res.x, v
  return p, value


def _simplex(p, step):
  s = np.tile(p, (len(p) + 1, 1))
  s[1:] += step * np.eye(len(p))
  return s


def _boundary(G, config):
  sample = G.boundary_sample(config.boundary_samples, config.seed)
  if len(sample) <= 2:
    logger.warning("%s has a degenerate boundary; the Apollonian metric "
                   "is only a pseudometric", G.name)
  return sample


def _point_objective(G, f):
  """*f* evaluated at the boundary point with the given parameters."""
  def objective(params):
    v = f(G.boundary_points(params[None]))[0]
    return v if np.isfinite(v) else -np.inf
  return objective


##############################################################################
# Apollonian

@inside_domain
def apollonian_search(G, x, y, config=None):
  """sup of `log |a,x,y,b|` over boundary points `a, b` of *G*.

  The expression separates into `log(|a-y|/|a-x|) + log(|b-x|/|b-y|)`
  (the factor for `INFINITY` is `1`); both terms are maximized
  independently.
  """
  config = config or SupSearchConfig()
  sample = _boundary(G, config)
  F = sample.finite
  fa = np.log(_distances(F, y)) - np.log(_distances(F, x))
  best = []
  for sign in (1.0, -1.0):
    values = sign * fa
    objective = _point_objective(
      G, lambda P, s=sign: s * (np.log(_distances(P, y)) - np.log(_distances(P, x))))
    i = int(np.argmax(values))
    point, value = F[i], values[i]
    if sample.infinite and 0.0 > value: point, value = INFINITY, 0.0
    elif sample.movable[i]:
      step = _initial_step(sample.params[sample.movable])
      p, value = compass_refine(objective, sample.params[i], value, step, config)
      p, value = polish(objective, p, value, step * 1e-3)
      point = G.boundary_points(p[None])[0]
    best.append((point, value))
  value = max(0.0, best[0][1] + best[1][1])
  return SupResult(value, (best[0][0], best[1][0]))


##############################################################################
# Seittenranta

def _pair_subset(dx, dy, count):
  """indices of a pair subsample: those nearest to x and y, and a stride."""
  m = len(dx)
  if m <= count: return np.arange(m)
  quarter = max(1, count // 4)
  near = np.concatenate((np.argsort(dx)[:quarter], np.argsort(dy)[:quarter]))
  stride = np.linspace(0, m - 1, count - len(near)).astype(int)
  return np.unique(np.concatenate((near, stride)))


@inside_domain
def seittenranta_search(G, x, y, config=None):
  """sup of `log(1 + |a,x,b,y|)` over boundary points `a, b` of *G*.

  `|a,x,b,y| = |a-b||x-y| / (|a-x||b-y|)`; a pair with `b = INFINITY`
  gives `|x-y|/|a-x|`, one with `a = INFINITY` gives `|x-y|/|b-y|`.
  """
  config = config or SupSearchConfig()
  sample = _boundary(G, config)
  F = sample.finite
  L = float(np.linalg.norm(x - y))
  if not len(F) or L == 0.0: return SupResult(0.0, None)
  dx = _distances(F, x); dy = _distances(F, y)
  # candidates: (value, ia, ib) with None standing for INFINITY
  candidates = []
  S = _pair_subset(dx, dy, config.pair_samples)
  D = np.linalg.norm(F[S][:, None, :] - F[S][None, :, :], axis=2)
  V = D * L / (dx[S][:, None] * dy[S][None, :])
  order = np.argsort(V, axis=None)[::-1][:8]
  for k in order:
    i, j = np.unravel_index(k, V.shape)
    candidates.append((V[i, j], int(S[i]), int(S[j])))
  if sample.infinite:
    i = int(np.argmin(dx)); candidates.append((L / dx[i], i, None))
    j = int(np.argmin(dy)); candidates.append((L / dy[j], None, j))
  # alternating maximization over the full sample
  improved = []
  for value, ia, ib in candidates:
    for _ in range(32):
      if ia is not None:
        vb = np.linalg.norm(F - F[ia], axis=1) * L / (dx[ia] * dy)
        jb = int(np.argmax(vb)); nb, cb = vb[jb], jb
        if sample.infinite and L / dx[ia] > nb: nb, cb = L / dx[ia], None
      else:
        cb, nb = int(np.argmin(dy)), L / dy.min()
      if cb is not None:
        va = np.linalg.norm(F - F[cb], axis=1) * L / (dx * dy[cb])
        ja = int(np.argmax(va)); na, ca = va[ja], ja
        if sample.infinite and L / dy[cb] > na: na, ca = L / dy[cb], None
      else:
        ca, na = int(np.argmin(dx)), L / dx.min()
      new = max(nb, na)
      if new <= value: break
      value, ia, ib = new, ca, cb
    improved.append((value, ia, ib))
  value, ia, ib = max(improved, key=lambda c: c[0])
  value, a, b = _refine_pair(G, sample, x, y, L, value, ia, ib, config)
  return SupResult(np.log1p(value), (a, b))


def _refine_pair(G, sample, x, y, L, value, ia, ib, config):
  """continuous refinement of the pair; `INFINITY` and atoms stay fixed."""
  F = sample.finite
  movable = sample.movable
  free = [ia is not None and movable[ia], ib is not None and movable[ib]]
  a = INFINITY if ia is None else F[ia]
  b = INFINITY if ib is None else F[ib]
  if not any(free): return value, a, b
  k = sample.params.shape[1]
  step = _initial_step(sample.params[movable])
  p0 = np.concatenate([sample.params[i] for i, f in zip((ia, ib), free) if f])
  def points(p):
    pa = a; pb = b; offset = 0
    if free[0]:
      pa = G.boundary_points(p[None, :k])[0]; offset = k
    if free[1]:
      pb = G.boundary_points(p[None, offset:offset + k])[0]
    return pa, pb
  def objective(p):
    pa, pb = points(p)
    if pb is INFINITY: v = L / np.linalg.norm(pa - x)
    elif pa is INFINITY: v = L / np.linalg.norm(pb - y)
    else:
      v = np.linalg.norm(pa - pb) * L \
          / (np.linalg.norm(pa - x) * np.linalg.norm(pb - y))
    return v if np.isfinite(v) else -np.inf
  p, value = compass_refine(objective, p0, value, step, config)
  p, value = polish(objective, p, value, step * 1e-3)
  a, b = points(p)
  return value, a, b
