# Copyright (C) 2026; see 'LICENSE.txt' for details
"""The `hypmetric` command.

Exit codes: `0` success, `1` failed strict check or computation
error, `2` usage error. Points are written `x,y` (use `--` before
points with a leading minus sign).
"""
import argparse
import logging
import sys
from logging import getLogger
from os import makedirs
from os.path import join

import numpy as np
from zope.schema import ValidationError

from .balls import trace_ball_boundary, convexity_classify
from .config import RunConfig, SupSearchConfig, GeodesicConfig, TraceConfig
from .domains import parse_domain, UnitBall, HalfSpace, PuncturedSpace, \
     PuncturedBall, Sector, Polygon
from .exception import DomainError, HypmetricError, UsageError
from .export import write_trace_csv, write_trace_svg, write_polyline_csv, \
     write_svg, write_contours_csv, write_contours_svg
from .geodesics import numeric_geodesic
from .interfaces import METRIC_KINDS
from .metrics import evaluate
from .report import write_report
from .trig import levelset_trace, DEFAULT_LEVELS
from .util import as_point, unit
from .verify import SUITES, run_suite, all_passed, describe

logger = getLogger(__name__)


def fmt(v):
  return "%.12f" % v


def parse_point(text):
  try: return as_point([float(c) for c in text.split(",")])
  except ValueError: raise UsageError("bad point: %s" % text)


def parse_floats(text):
  try: return tuple(float(c) for c in text.split(","))
  except ValueError: raise UsageError("bad number list: %s" % text)


def domain(run):
  """the domain of *run*; an unknown domain is a usage error."""
  try: return parse_domain(run.domain)
  except DomainError as e: raise UsageError(str(e))


def default_center(G):
  """a representative interior point of *G*."""
  n = G.dimension
  if isinstance(G, UnitBall): return np.zeros(n)
  if isinstance(G, HalfSpace): return unit(n, n - 1)
  if isinstance(G, PuncturedSpace): return unit(n, 0)
  if isinstance(G, PuncturedBall): return 0.5 * unit(n, 0)
  if isinstance(G, Sector):
    return np.array([np.cos(0.5 * G.phi), np.sin(0.5 * G.phi)])
  if isinstance(G, Polygon):
    return G.interior_point()
  raise UsageError("no default center for %s" % G.name)


##############################################################################
# configuration

def run_config(args):
  try:
    return RunConfig(
      domain=args.domain, metric=getattr(args, "metric", "rho"), seed=int(args.seed),
      output=args.output,
      formats=tuple(f for f in args.formats.split(",") if f),
      tolerance=None if args.tolerance is None else float(args.tolerance),
      )
  except ValidationError as e:
    raise UsageError("invalid parameter: %s" % e.__class__.__name__)


def tuned_configs(args, run):
  """search, geodesic and trace configurations for the command line."""
  over = {} if run.tolerance is None else dict(tolerance=run.tolerance)
  sup = SupSearchConfig(seed=run.seed, **over)
  geo = dict(over)
  if getattr(args, "resolution", None): geo["resolution"] = int(args.resolution)
  trace = dict(over)
  if getattr(args, "directions", None): trace["directions"] = int(args.directions)
  return sup, GeodesicConfig(**geo), TraceConfig(**trace)


def _open(run, name):
  makedirs(run.output, exist_ok=True)
  path = join(run.output, name)
  logger.info("writing %s", path)
  return open(path, "w", newline="")


def _tag(v): return ("%g" % v).replace(".", "_")


##############################################################################
# commands

def cmd_dist(args, out):
  run = run_config(args)
  G = domain(run)
  sup, geo, trace = tuned_configs(args, run)
  b = evaluate(G, parse_point(args.x), parse_point(args.y), run.metric, sup, geo)
  if b.width > 0.0:
    out.write("%s [%s, %s]\n" % (fmt(b.value), fmt(b.lower), fmt(b.upper)))
  else: out.write("%s\n" % fmt(b.value))
  return 0


def cmd_ball(args, out):
  run = run_config(args)
  G = domain(run)
  sup, geo, config = tuned_configs(args, run)
  center = default_center(G) if args.center is None else parse_point(args.center)
  t = trace_ball_boundary(G, run.metric, center, args.M, config, sup_config=sup,
                          geodesic_config=geo)
  r = t.distances[~t.marked]
  if len(r):
    out.write("trace: %d points, %d marked, radius %s .. %s, residual %.3g\n" % (
      len(t), t.marked.sum(), fmt(r.min()), fmt(r.max()), float(np.nanmax(t.residuals))))
  else:
    out.write("trace: %d points, %d marked, no resolved points\n" % (len(t), t.marked.sum()))
  name = "ball-%s-%s" % (run.metric, _tag(args.M))
  if args.trace:
    with _open(run, name + ".csv") as f: write_trace_csv(t, f)
  if args.svg or "svg" in run.formats:
    with _open(run, name + ".svg") as f: write_trace_svg(t, f)
  if args.convexity:
    c = convexity_classify(t)
    out.write("%s\n" % c.kind)
  return 0


def cmd_verify(args, out):
  run = run_config(args)
  G = domain(run) if args.domain_given else None
  sup, geo, trace = tuned_configs(args, run)
  reports = run_suite(args.suite, G, args.budget, run.seed, sup, geo,
                      trace if args.directions else None)
  for r in reports: out.write(describe(r) + "\n")
  if "report" in run.formats:
    with _open(run, "verify-%s.ini" % args.suite) as f:
      write_report(reports, f, dict(suite=args.suite, domain=G.name if G else "default",
                                    seed=run.seed, budget=args.budget or 0))
  passed = all_passed(reports)
  logger.info("suite %s: %d checks, %s", args.suite, len(reports),
              "passed" if passed else "failed")
  return 0 if passed else 1


def cmd_geodesic(args, out):
  run = run_config(args)
  G = domain(run)
  sup, geo, trace = tuned_configs(args, run)
  path, b = numeric_geodesic(G, parse_point(args.x), parse_point(args.y), geo)
  out.write("%s [%s, %s] %d vertices\n" % (fmt(b.value), fmt(b.lower), fmt(b.upper),
                                           len(path)))
  if "csv" in run.formats:
    with _open(run, "geodesic.csv") as f: write_polyline_csv(path.vertices, f)
  if "svg" in run.formats and path.dimension == 2:
    with _open(run, "geodesic.svg") as f: write_svg([path.vertices], f, closed=False)
  return 0


def cmd_levelset(args, out):
  run = run_config(args)
  levels = parse_floats(args.levels) if args.levels else DEFAULT_LEVELS
  sets = levelset_trace(levels, args.resolution or 513)
  for ls in sets:
    out.write("level %g: %s\n" % (ls.level, "empty" if ls.empty
                                   else "%d contours" % len(ls.chart_contours)))
  if "csv" in run.formats:
    with _open(run, "levelset.csv") as f: write_contours_csv(sets, f)
  if "svg" in run.formats:
    with _open(run, "levelset.svg") as f: write_contours_svg(sets, f)
  return 0


##############################################################################
# argument parsing

class _Parser(argparse.ArgumentParser):
  def error(self, message):
    raise UsageError(message)


def parser():
  common = argparse.ArgumentParser(add_help=False)
  common.add_argument("--domain", default=None,
                      help="domain: ballN, halfN, puncturedN, puncturedballN, "
                           "sector:<angle>, polygon:<file>")
  common.add_argument("--seed", type=int, default=4711)
  common.add_argument("--output", default=".", help="output directory")
  common.add_argument("--formats", default=None,
                      help="comma separated: csv, svg, report (default csv, for verify report)")
  common.add_argument("--tolerance", type=float, default=None)
  common.add_argument("--resolution", type=int, default=None)
  metric = argparse.ArgumentParser(add_help=False)
  metric.add_argument("--metric", default="rho", choices=[k for k, _ in METRIC_KINDS])

  p = _Parser(prog="hypmetric", description="Hyperbolic type metrics")
  p.add_argument("-v", "--verbose", action="count", default=0)
  p.add_argument("-q", "--quiet", action="store_true")
  sub = p.add_subparsers(dest="command", parser_class=_Parser)
  sub.required = True

  s = sub.add_parser("dist", parents=[common, metric], help="distance of two points")
  s.add_argument("x"); s.add_argument("y")
  s.set_defaults(func=cmd_dist)

  s = sub.add_parser("ball", parents=[common, metric], help="trace a metric ball")
  s.add_argument("--M", type=float, required=True, help="the radius")
  s.add_argument("--center", default=None)
  s.add_argument("--directions", type=int, default=None)
  s.add_argument("--trace", action="store_true", help="write the trace as CSV")
  s.add_argument("--svg", action="store_true", help="write the trace as SVG")
  s.add_argument("--convexity", action="store_true", help="classify the convexity")
  s.set_defaults(func=cmd_ball)

  s = sub.add_parser("verify", parents=[common], help="run a verification suite")
  s.add_argument("suite", choices=SUITES)
  s.add_argument("--budget", type=int, default=None)
  s.add_argument("--directions", type=int, default=None)
  s.set_defaults(func=cmd_verify)

  s = sub.add_parser("geodesic", parents=[common], help="numeric quasihyperbolic geodesic")
  s.add_argument("x"); s.add_argument("y")
  s.set_defaults(func=cmd_geodesic)

  s = sub.add_parser("levelset", parents=[common], help="level sets of k/j in R^2 \\ {0}")
  s.add_argument("--levels", default=None, help="comma separated levels (> 1)")
  s.set_defaults(func=cmd_levelset)
  return p


def _setup_logging(args):
  level = logging.ERROR if args.quiet else \
          (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
  logging.basicConfig(level=level, stream=sys.stderr,
                      format="%(levelname)s %(name)s: %(message)s")


def main(argv=None, out=None):
  out = out or sys.stdout
  try:
    args = parser().parse_args(argv)
  except UsageError as e:
    sys.stderr.write("hypmetric: %s\n" % e)
    return 2
  _setup_logging(args)
  args.domain_given = args.domain is not None
  if args.domain is None: args.domain = "ball2"
  if args.formats is None:
    args.formats = "report" if args.command == "verify" else "csv"
  try:
    return args.func(args, out)
  except UsageError as e:
    sys.stderr.write("hypmetric: %s\n" % e)
    return 2
  except HypmetricError as e:
    sys.stderr.write("hypmetric: %s\n" % e)
    logger.debug("computation error", exc_info=True)
    return 1


if __name__ == "__main__":
  sys.exit(main())
