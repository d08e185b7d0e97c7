# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Report documents.

A report is an INI style document: a `run` section echoing the run
parameters, then one section per check.
"""
from configparser import ConfigParser

import numpy as np

from .util import fmt_point


def _value(v):
  if isinstance(v, (bool, np.bool_)): return "true" if v else "false"
  if isinstance(v, (float, np.floating)): return "%.17g" % v
  if isinstance(v, (int, np.integer)): return "%d" % v
  if isinstance(v, np.ndarray) and v.ndim == 1: return fmt_point(v)
  return str(v)


def _witness(w):
  if not w: return ""
  return "; ".join(fmt_point(p) for p in w if np.ndim(p) == 1)


def report_document(reports, run=None):
  """a `ConfigParser` holding *reports* (and the *run* parameters)."""
  doc = ConfigParser(interpolation=None)
  doc.optionxform = str
  if run is not None:
    doc.add_section("run")
    for key in sorted(run): doc.set("run", key, _value(run[key]))
  for i, r in enumerate(reports):
    section = "check %03d" % (i + 1)
    doc.add_section(section)
    items = [("name", r.name), ("domain", r.domain), ("samples", r.samples),
             ("passed", r.passed), ("level", "evidence" if r.evidence else "strict"),
             ("margin", r.margin), ("tolerance", r.tolerance),
             ("witness", _witness(r.witness))]
    items.extend(("config.%s" % k, r.config[k]) for k in sorted(r.config))
    items.extend(("detail.%s" % k, r.details[k]) for k in sorted(r.details))
    for key, value in items: doc.set(section, key, _value(value))
  return doc


def write_report(reports, stream, run=None):
  report_document(reports, run).write(stream)


def read_report(stream):
  """the `ConfigParser` of a written report."""
  doc = ConfigParser(interpolation=None)
  doc.optionxform = str
  doc.read_file(stream)
  return doc
