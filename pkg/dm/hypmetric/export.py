# Copyright (C) 2026; see 'LICENSE.txt' for details
"""CSV and SVG output of polylines, traces and contours.

Numbers are written with a fixed format so that identical runs
produce identical files.
"""
import csv
import xml.etree.ElementTree as ET

import numpy as np

SVG_NAMESPACE = "http://www.w3.org/2000/svg"


def _num(v): return "%.15g" % v


def write_polyline_csv(vertices, stream):
  """the vertices of a polyline, one `x,y,...` row each."""
  vertices = np.asarray(vertices, dtype=float)
  writer = csv.writer(stream, lineterminator="\n")
  writer.writerow(["x%d" % (i + 1) for i in range(vertices.shape[1])])
  for v in vertices: writer.writerow([_num(c) for c in v])


def write_trace_csv(trace, stream):
  """a `BallTrace`: direction, point, residual and mark per ray."""
  writer = csv.writer(stream, lineterminator="\n")
  writer.writerow(["direction", "x", "y", "residual", "marked"])
  for theta, p, r, m in zip(trace.directions, trace.points, trace.residuals, trace.marked):
    writer.writerow([_num(theta), _num(p[0]), _num(p[1]), _num(r), int(m)])


def write_contours_csv(levelsets, stream):
  """the contours of `LevelSet`s as `level,contour,x,y` rows."""
  writer = csv.writer(stream, lineterminator="\n")
  writer.writerow(["level", "contour", "x", "y"])
  for ls in levelsets:
    for i, contour in enumerate(ls.contours):
      for p in contour: writer.writerow([_num(ls.level), i, _num(p[0]), _num(p[1])])


def _path_data(points, closed):
  # svg y axis points down
  parts = ["M %s %s" % (_num(points[0][0]), _num(-points[0][1]))]
  parts.extend("L %s %s" % (_num(x), _num(-y)) for x, y in points[1:])
  if closed: parts.append("Z")
  return " ".join(parts)


def svg_document(paths, closed=True, margin=0.05):
  """an SVG element with one path per point array in *paths*.

  The view box is fitted to the points (enlarged by *margin*); paths
  are stroked with a 1 pixel line and not filled.
  """
  paths = [np.asarray(p, dtype=float) for p in paths if len(p)]
  if paths:
    allp = np.concatenate(paths)
    lo = allp.min(axis=0); hi = allp.max(axis=0)
  else: lo = hi = np.zeros(2)
  size = np.maximum(hi - lo, 1e-12)
  pad = margin * size
  box = (lo[0] - pad[0], -hi[1] - pad[1], size[0] + 2 * pad[0], size[1] + 2 * pad[1])
  root = ET.Element("svg", xmlns=SVG_NAMESPACE,
                    viewBox=" ".join(_num(v) for v in box))
  for p in paths:
    ET.SubElement(root, "path", d=_path_data(p, closed), fill="none",
                  stroke="black", attrib={"stroke-width": "1",
                                          "vector-effect": "non-scaling-stroke"})
  return root


def write_svg(paths, stream, closed=True):
  stream.write(ET.tostring(svg_document(paths, closed), encoding="unicode"))
  stream.write("\n")


def write_trace_svg(trace, stream):
  """the trace as a single closed path."""
  write_svg([trace.points[~trace.marked]], stream)


def write_contours_svg(levelsets, stream):
  write_svg([c for ls in levelsets for c in ls.contours], stream, closed=False)
