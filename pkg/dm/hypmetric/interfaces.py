# Copyright (C) 2026; see 'LICENSE.txt' for details
from zope.interface import Interface, Attribute
from zope.i18nmessageid import MessageFactory
from zope.schema import Int, Float, Choice, Tuple, TextLine, NativeStringLine

from .util import vocab_from_names

_ = MessageFactory('dm_hypmetric')


##############################################################################
# vocabularies

METRIC_KINDS = (
  ("rho", u"Hyperbolic"),
  ("k", u"Quasihyperbolic"),
  ("j", u"Distance ratio"),
  ("jtilde", u"Distance ratio (product form)"),
  ("alpha", u"Apollonian"),
  ("delta", u"Seittenranta"),
  ("q", u"Chordal"),
  ("spherical", u"Spherical"),
  ("euclidean", u"Euclidean"),
  ("m", u"Ball comparison function m"),
  )

metric_vocabulary = vocab_from_names(METRIC_KINDS)

OUTPUT_FORMATS = (("csv", u"CSV"), ("svg", u"SVG"), ("report", u"Report"))

format_vocabulary = vocab_from_names(OUTPUT_FORMATS)


##############################################################################
# component interfaces

class IDomain(Interface):
  """A proper subdomain `G` of euclidean space."""

  dimension = Attribute(u"the dimension `n` of the ambient space")
  bounded = Attribute(u"true when `G` is bounded")
  name = Attribute(u"the short name used on the command line")

  def contains(x):
    """true iff *x* lies in the (open) domain."""

  def boundary_distance(x):
    """euclidean distance from *x* (inside) to the boundary."""

  def boundary_distances(points):
    """vectorized `boundary_distance` for an `(m, n)` array.

    Points outside get a nonpositive value.
    """

  def boundary_sample(count, seed):
    """a deterministic `BoundarySample` of about *count* boundary points."""

  def ray_exit(x, direction):
    """distance along the ray from *x* in *direction* to the boundary (may be `inf`)."""

  def interior_chart():
    """an `IInteriorChart` parameterizing the domain."""


class IInteriorChart(Interface):
  """A smooth parameterization `R^m -> G` used for local searches."""

  dimension = Attribute(u"number of parameters")

  def point(params):
    """the domain point for *params*."""

  def params(x):
    """parameters for the domain point *x*."""


class IMobiusGenerator(Interface):
  """An involutive generator of the Möbius group."""

  def __call__(x):
    """the image of the extended point *x*."""


class IDensityField(Interface):
  """A positive weight function `w` on a domain."""

  def __call__(points):
    """weights for an `(m, n)` array of points."""

  def scale(points):
    """length scale on which the weight changes (e.g. the boundary distance)."""


##############################################################################
# schemata

class ISupSearchConfig(Interface):
  """Parameters for the boundary supremum searches (Apollonian, Seittenranta)."""

  boundary_samples = Int(
    title=_(u"boundary_samples_title", u"Boundary samples"),
    description=_(u"boundary_samples_description",
                  u"Number of boundary points sampled before refinement."),
    min=2,
    default=4096,
    )

  refinement_iterations = Int(
    title=_(u"refinement_iterations_title", u"Refinement iterations"),
    description=_(u"refinement_iterations_description",
                  u"Maximal number of coordinate-wise refinement sweeps."),
    min=0,
    default=64,
    )

  shrink = Float(
    title=_(u"shrink_title", u"Step shrink factor"),
    description=_(u"shrink_description",
                  u"Factor applied to the refinement step after a sweep without improvement."),
    min=0.01,
    max=0.99,
    default=0.5,
    )

  pair_samples = Int(
    title=_(u"pair_samples_title", u"Pair samples"),
    description=_(u"pair_samples_description",
                  u"Size of the boundary subsample whose pairs are evaluated exhaustively."),
    min=2,
    default=256,
    )

  tolerance = Float(
    title=_(u"sup_tolerance_title", u"Tolerance"),
    description=_(u"sup_tolerance_description",
                  u"Refinement stops when a sweep improves the objective by less."),
    min=0.0,
    default=1e-9,
    )

  seed = Int(
    title=_(u"seed_title", u"Seed"),
    default=4711,
    )


class IGeodesicConfig(Interface):
  """Parameters for the numeric geodesic oracle."""

  resolution = Int(
    title=_(u"resolution_title", u"Grid resolution"),
    description=_(u"resolution_description",
                  u"Number of grid nodes per axis for the shortest path stage."),
    min=8,
    default=512,
    )

  refinement_iterations = Int(
    title=_(u"geodesic_refinement_title", u"Relaxation rounds"),
    description=_(u"geodesic_refinement_description",
                  u"Maximal number of polyline relaxation rounds."),
    min=0,
    default=64,
    )

  quadrature_order = Int(
    title=_(u"quadrature_order_title", u"Quadrature order"),
    description=_(u"quadrature_order_description",
                  u"Gauss-Legendre nodes per polyline segment."),
    min=1,
    default=8,
    )

  tolerance = Float(
    title=_(u"geodesic_tolerance_title", u"Tolerance"),
    description=_(u"geodesic_tolerance_description",
                  u"Relaxation stops when a round improves the length by less."),
    min=0.0,
    default=1e-9,
    )

  max_vertices = Int(
    title=_(u"max_vertices_title", u"Maximal vertices"),
    description=_(u"max_vertices_description",
                  u"The grid path is thinned to this many vertices before relaxation."),
    min=3,
    default=160,
    )


class ITraceConfig(Interface):
  """Parameters for tracing metric ball boundaries."""

  directions = Int(
    title=_(u"directions_title", u"Directions"),
    min=8,
    default=256,
    )

  tolerance = Float(
    title=_(u"trace_tolerance_title", u"Tolerance"),
    description=_(u"trace_tolerance_description",
                  u"Allowed deviation of the metric from the radius at a trace point."),
    min=0.0,
    default=1e-9,
    )

  max_steps = Int(
    title=_(u"max_steps_title", u"Maximal steps"),
    description=_(u"max_steps_description",
                  u"Maximal number of marching steps along a ray."),
    min=1,
    default=20000,
    )


class IRunConfig(Interface):
  """Parameters of a command line run."""

  domain = TextLine(
    title=_(u"domain_title", u"Domain"),
    description=_(u"domain_description",
                  u"Short domain name, e.g. `ball2`, `half2`, `punctured2`, "
                  u"`puncturedball2`, `sector:1.0472` or `polygon:file.txt`."),
    required=True,
    default=u"ball2",
    )

  metric = Choice(
    title=_(u"metric_title", u"Metric"),
    vocabulary=metric_vocabulary,
    required=True,
    default="rho",
    )

  seed = Int(
    title=_(u"run_seed_title", u"Seed"),
    default=4711,
    )

  output = NativeStringLine(
    title=_(u"output_title", u"Output directory"),
    default=".",
    )

  formats = Tuple(
    title=_(u"formats_title", u"Output formats"),
    value_type=Choice(vocabulary=format_vocabulary),
    default=("csv",),
    )

  tolerance = Float(
    title=_(u"run_tolerance_title", u"Tolerance override"),
    required=False,
    min=0.0,
    )
