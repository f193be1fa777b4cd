#include "pinloop/arrangement.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "pinloop/error.hpp"

namespace pinloop {

namespace {

mpq_class cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

// 0 for directions in [0, pi), 1 for [pi, 2pi).
int half(const Point& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

bool angle_less(const Point& a, const Point& b) {
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

struct Segment {
  int loop, index;
  Point p, q;
};

// Parameters of the proper crossing of pq and rs; throws on touching.
std::optional<std::pair<mpq_class, mpq_class>> crossing(const Segment& a, const Segment& b) {
  Point d1 = sub(a.q, a.p), d2 = sub(b.q, b.p), w = sub(b.p, a.p);
  mpq_class den = cross(d1, d2);
  if (den == 0) {
    if (cross(d1, w) != 0) return std::nullopt;
    // collinear: overlapping pieces are degenerate
    auto proj = [&](const Point& x) -> mpq_class { return (x.x - a.p.x) * d1.x + (x.y - a.p.y) * d1.y; };
    mpq_class len = d1.x * d1.x + d1.y * d1.y, s0 = proj(b.p), s1 = proj(b.q);
    if (s0 > s1) std::swap(s0, s1);
    if (s1 < 0 || s0 > len) return std::nullopt;
    throw Error("DegenerateCrossing", "two polyline pieces overlap");
  }
  mpq_class t = cross(w, d2) / den, u = cross(w, d1) / den;
  if (t > 0 && t < 1 && u > 0 && u < 1) return std::make_pair(t, u);
  if (t >= 0 && t <= 1 && u >= 0 && u <= 1)
    throw Error("DegenerateCrossing", "a polyline corner lies on another piece");
  return std::nullopt;
}

bool on_segment(const Point& x, const Point& p, const Point& q) {
  if (cross(sub(q, p), sub(x, p)) != 0) return false;
  return std::min(p.x, q.x) <= x.x && x.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= x.y &&
         x.y <= std::max(p.y, q.y);
}

mpq_class area2(const std::vector<Point>& poly) {
  mpq_class a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) a += cross(poly[i], poly[(i + 1) % poly.size()]);
  return a;
}

bool inside(const Point& x, const std::vector<Point>& poly) {
  bool in = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    if ((a.y > x.y) != (b.y > x.y)) {
      mpq_class xi = a.x + (x.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x.x < xi) in = !in;
    }
  }
  return in;
}

}  // namespace

mpq_class parse_rational(const std::string& s) {
  try {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
      mpq_class q(s, 10);
      if (q.get_den() == 0) throw Error("BadNumber", "zero denominator in '" + s + "'");
      q.canonicalize();
      return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t decimals = s.size() - dot - 1;
    if (decimals == 0 || s.find('/') != std::string::npos) throw Error("BadNumber", "cannot parse '" + s + "'");
    mpz_class den = 1;
    for (std::size_t i = 0; i < decimals; ++i) den *= 10;
    mpq_class q{mpz_class(digits, 10), den};
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error("BadNumber", "cannot parse '" + s + "' as a rational");
  }
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

Multiloop Drawing::multiloop(const std::map<int, std::string>& labels) const {
  return Multiloop::from_map(CombinatorialMap::from_cycles(sigma, true), orientation, labels);
}

int Drawing::locate(const Point& p) const {
  for (const auto& e : edge_paths)
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
      if (on_segment(p, e[i], e[i + 1])) throw Error("OnCurve", "the probe point lies on the curve");
  int best = -1, unbounded = -1;
  mpq_class best_area;
  for (std::size_t i = 0; i < region_polygons.size(); ++i) {
    mpq_class a = area2(region_polygons[i]);
    if (a < 0) unbounded = static_cast<int>(i);
    if (a > 0 && inside(p, region_polygons[i]) && (best == -1 || a < best_area)) {
      best = static_cast<int>(i);
      best_area = a;
    }
  }
  return best == -1 ? unbounded : best;
}

Drawing trace_polylines(const std::vector<std::vector<Point>>& input) {
  std::vector<std::vector<Point>> loops = input;
  std::vector<Segment> segs;
  for (int l = 0; l < static_cast<int>(loops.size()); ++l) {
    auto& loop = loops[l];
    if (loop.size() > 1 && loop.front() == loop.back()) loop.pop_back();
    if (loop.size() < 3) throw Error("DegenerateCrossing", "a loop needs at least three corners");
    for (int i = 0; i < static_cast<int>(loop.size()); ++i) {
      const Point& p = loop[i];
      const Point& q = loop[(i + 1) % loop.size()];
      if (p == q) throw Error("DegenerateCrossing", "repeated corner");
      segs.push_back({l, i, p, q});
    }
  }
  std::vector<std::vector<std::vector<std::pair<mpq_class, int>>>> events(loops.size());
  for (std::size_t l = 0; l < loops.size(); ++l) events[l].resize(loops[l].size());
  std::vector<Point> points;
  for (std::size_t a = 0; a < segs.size(); ++a)
    for (std::size_t b = a + 1; b < segs.size(); ++b) {
      const Segment& s = segs[a];
      const Segment& t = segs[b];
      int n = static_cast<int>(loops[s.loop].size());
      if (s.loop == t.loop && (t.index - s.index == 1 || (s.index == 0 && t.index == n - 1))) {
        // consecutive pieces meet only at their shared corner
        Point d1 = sub(s.q, s.p), d2 = sub(t.q, t.p);
        if (cross(d1, d2) == 0 && d1.x * d2.x + d1.y * d2.y < 0)
          throw Error("DegenerateCrossing", "a polyline folds back on itself");
        continue;
      }
      auto hit = crossing(s, t);
      if (!hit) continue;
      int id = static_cast<int>(points.size());
      points.push_back({s.p.x + hit->first * (s.q.x - s.p.x), s.p.y + hit->first * (s.q.y - s.p.y)});
      events[s.loop][s.index].emplace_back(hit->first, id);
      events[t.loop][t.index].emplace_back(hit->second, id);
    }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw Error("DegenerateCrossing", "three pieces meet at one point");

  Drawing d;
  struct Edge {
    int start, end;
    std::vector<Point> path;
  };
  std::vector<Edge> edges;
  for (std::size_t l = 0; l < loops.size(); ++l) {
    // ("corner", point index) or ("crossing", id) in drawing order
    std::vector<std::pair<bool, int>> seq;
    for (std::size_t i = 0; i < loops[l].size(); ++i) {
      seq.emplace_back(false, static_cast<int>(i));
      auto ev = events[l][i];
      std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [t, id] : ev) seq.emplace_back(true, id);
    }
    auto first = std::find_if(seq.begin(), seq.end(), [](const auto& e) { return e.first; });
    if (first == seq.end()) throw Error("NoCrossing", "a loop without double points");
    std::rotate(seq.begin(), first, seq.end());
    seq.push_back(seq.front());
    d.orientation.push_back(static_cast<int>(edges.size()) + 1);
    Edge cur{-1, -1, {}};
    for (const auto& [is_crossing, v] : seq) {
      Point pt = is_crossing ? points[v] : loops[l][v];
      if (is_crossing) {
        if (cur.start != -1) {
          cur.path.push_back(pt);
          cur.end = v;
          edges.push_back(cur);
        }
        cur = Edge{v, -1, {pt}};
      } else {
        cur.path.push_back(pt);
      }
    }
  }
  std::vector<std::vector<std::pair<Point, int>>> at(points.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    int h = static_cast<int>(k) + 1;
    at[e.end].emplace_back(sub(e.path[e.path.size() - 2], e.path.back()), h);
    at[e.start].emplace_back(sub(e.path[1], e.path[0]), -h);
  }
  for (auto& around : at) {
    std::sort(around.begin(), around.end(), [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    std::vector<int> cyc;
    for (const auto& [dir, h] : around) cyc.push_back(h);
    d.sigma.push_back(cyc);
  }
  d.crossings = points;
  for (const auto& e : edges) d.edge_paths.push_back(e.path);
  auto map = CombinatorialMap::from_cycles(d.sigma, true);
  for (const auto& orbit : map.faces()) {
    std::vector<Point> poly;
    for (int h : orbit) {
      const auto& path = d.edge_paths[std::abs(h) - 1];
      // walk v(h) -> v(-h)
      if (h > 0)
        for (std::size_t i = path.size() - 1; i > 0; --i) poly.push_back(path[i]);
      else
        for (std::size_t i = 0; i + 1 < path.size(); ++i) poly.push_back(path[i]);
    }
    d.region_polygons.push_back(std::move(poly));
  }
  return d;
}

}  // namespace pinloop
