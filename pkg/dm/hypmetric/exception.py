# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Exceptions"""

class HypmetricError(Exception):
  """Base class for all errors raised by this package."""


class DimensionError(HypmetricError, ValueError):
  """Points (or a point and a domain) live in different dimensions."""


class DomainError(HypmetricError, ValueError):
  """A point lies outside its domain or a domain is ill specified."""


class DegenerateError(HypmetricError, ValueError):
  """Coincident points or an otherwise degenerate configuration."""


class ConvergenceError(HypmetricError):
  """A numeric procedure did not reach its tolerance.

  *bracket* is the best `Bracket` known when giving up.
  """
  def __init__(self, msg, bracket=None):
    super(ConvergenceError, self).__init__(msg)
    self.bracket = bracket


class ResolutionError(HypmetricError):
  """The discretization separates points which should be connected."""


class TraceError(HypmetricError):
  """A ball boundary could not be traced or classified."""


class UsageError(HypmetricError):
  """Bad command line usage."""


class ParameterError(HypmetricError, ValueError):
  """An invalid parameter (exponent, radius, count, ...)."""
