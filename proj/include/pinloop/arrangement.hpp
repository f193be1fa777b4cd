#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "pinloop/combmap.hpp"

namespace pinloop {

struct Point {
  mpq_class x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Parses "p/q", "p" or a plain decimal such as "-0.25" exactly. Throws Error("BadNumber").
mpq_class parse_rational(const std::string& s);
std::string to_string(const mpq_class& q);

// Combinatorial map of closed polylines in general position.
// Edges are numbered along the loops (loop order, then drawing order starting
// at the first double point); +k arrives at the end of edge k. Vertex cycles
// list half-edges counterclockwise.
struct Drawing {
  std::vector<std::vector<int>> sigma;
  std::vector<int> orientation;                 // first edge of every loop
  std::vector<Point> crossings;                 // one per vertex, in sigma order
  std::vector<std::vector<Point>> edge_paths;   // edge k-1: from its start crossing to its end crossing
  std::vector<std::vector<Point>> region_polygons;  // in the map's face order

  Multiloop multiloop(const std::map<int, std::string>& labels = {}) const;
  // Region (face index) containing a point that lies off the curves.
  // Throws Error("OnCurve") for a point on a polyline.
  int locate(const Point& p) const;
};

// Throws Error("DegenerateCrossing") when two pieces touch at a corner,
// overlap, or three pieces meet; Error("NoCrossing") for a simple loop.
Drawing trace_polylines(const std::vector<std::vector<Point>>& loops);

}  // namespace pinloop
