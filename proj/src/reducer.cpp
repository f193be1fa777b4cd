#include "pinloop/reducer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "pinloop/error.hpp"
#include "pinloop/mobidisc.hpp"

namespace pinloop {

namespace {

using Pt = std::pair<int, int>;  // template coordinates, in quarters of epsilon

// Window templates: x is the outward offset from the boundary (negative
// outside for the left end, positive outside for the right end), t the
// offset across the edge line. Core half-width is 4.
constexpr int kWindow = 16;

const std::vector<Pt> kLeftBefore = {{0, -kWindow}, {0, -10}, {-3, -10}, {-11, -6}, {-15, -6}, {-15, -10},
                                     {-11, -10},    {-3, -6}, {0, -6},   {0, -2},   {-5, -2},  {-13, 2},
                                     {-17, 2},      {-29, -4}};
const std::vector<Pt> kLeftAfter = {{-29, 4}, {-17, -2}, {-13, -2}, {-5, 2},  {0, 2},   {0, 6},
                                    {-2, 6},  {-4, 5},   {-19, 5},  {-9, 10}, {-5, 10}, {-5, 6},
                                    {-9, 6},  {-19, 11}, {-4, 11},  {-2, 10}, {0, 10},  {0, kWindow}};
const std::vector<Pt> kRight = {{0, kWindow}, {0, 10},  {5, 10},  {13, 6},  {17, 6},  {17, 10},
                                {13, 10},     {5, 6},   {0, 6},   {0, -6},  {3, -6},  {5, -5},
                                {20, -5},     {10, -10}, {6, -10}, {6, -6},  {10, -6}, {20, -11},
                                {5, -11},     {3, -10}, {0, -10}, {0, -kWindow}};
constexpr int kUturn = 12;
// p1 p2 q1 on the left, p3 p4 q2 on the right
const std::vector<Pt> kLeftProbes = {{-7, 8}, {-13, -8}, {-15, 0}};
const std::vector<Pt> kRightProbes = {{15, 8}, {8, -8}, {6, 0}};

mpq_class cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
mpq_class l1(const Point& p) { return abs(p.x) + abs(p.y); }
mpq_class norm2(const Point& p) { return p.x * p.x + p.y * p.y; }

// Largest power of two whose square is at most d (d > 0).
mpq_class sqrt_lower(const mpq_class& d) {
  mpq_class r = 1;
  while (r * r > d) r /= 2;
  while (4 * r * r <= d) r *= 2;
  return r;
}

bool segments_touch(const Point& p, const Point& q, const Point& r, const Point& s) {
  auto orient = [](const Point& a, const Point& b, const Point& c) {
    mpq_class v = cross(sub(b, a), sub(c, a));
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };
  auto within = [](const Point& a, const Point& b, const Point& c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
           c.y <= std::max(a.y, b.y);
  };
  int o1 = orient(p, q, r), o2 = orient(p, q, s), o3 = orient(r, s, p), o4 = orient(r, s, q);
  if (o1 != o2 && o3 != o4) return true;
  return (o1 == 0 && within(p, q, r)) || (o2 == 0 && within(p, q, s)) || (o3 == 0 && within(r, s, p)) ||
         (o4 == 0 && within(r, s, q));
}

struct Frame {
  Point origin, a, n;  // a = d / |d|_1, n = a rotated a quarter turn
  mpq_class length;    // |d|_1; the edge spans sigma in [0, length]
  Point at(const mpq_class& sigma, const mpq_class& t) const {
    return {origin.x + sigma * a.x + t * n.x, origin.y + sigma * a.y + t * n.y};
  }
};

Frame frame_of(const PlaneGraph& g, int e) {
  auto [i, j] = g.edges[e];
  if (i > j) std::swap(i, j);
  Frame f;
  f.origin = g.vertices[i];
  Point d = sub(g.vertices[j], g.vertices[i]);
  f.length = l1(d);
  f.a = {d.x / f.length, d.y / f.length};
  f.n = {-f.a.y, f.a.x};
  return f;
}

struct Exit {
  int edge;
  bool left;
  Point where;
};

// Strictly clockwise-later first: sort by decreasing angle around c.
bool cw_before(const Point& p, const Point& q) {
  auto half = [](const Point& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
  int hp = half(p), hq = half(q);
  if (hp != hq) return hp > hq;
  return cross(p, q) < 0;
}

struct Geometry {
  std::vector<Frame> frames;
  mpq_class reach;     // K: exits sit at sigma = -K and length + K
  mpq_class kappa;     // bound on 1 / sin of the angle between adjacent edges
  mpq_class epsilon0;  // starting epsilon
};

Geometry analyse(const PlaneGraph& g) {
  Geometry geo;
  int m = static_cast<int>(g.edges.size());
  for (int e = 0; e < m; ++e) geo.frames.push_back(frame_of(g, e));
  Point c{0, 0};
  for (const auto& v : g.vertices) {
    c.x += v.x;
    c.y += v.y;
  }
  c.x /= static_cast<long>(g.vertices.size());
  c.y /= static_cast<long>(g.vertices.size());
  mpq_class spread = 0;
  for (const auto& v : g.vertices) spread = std::max(spread, l1(sub(v, c)));
  geo.kappa = 1;
  mpq_class feature2 = -1;
  auto feature = [&](const mpq_class& d2) {
    if (feature2 < 0 || d2 < feature2) feature2 = d2;
  };
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      const Frame& A = geo.frames[e];
      const Frame& B = geo.frames[f];
      Point da{A.a.x * A.length, A.a.y * A.length}, db{B.a.x * B.length, B.a.y * B.length};
      mpq_class den = cross(da, db);
      // intersection of the two lines
      mpq_class s = cross(sub(B.origin, A.origin), db) / den;
      Point x{A.origin.x + s * da.x, A.origin.y + s * da.y};
      spread = std::max(spread, l1(sub(x, c)));
      auto [a1, a2] = g.edges[e];
      auto [b1, b2] = g.edges[f];
      if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2)
        geo.kappa = std::max(geo.kappa, mpq_class(A.length * B.length / abs(den)));
    }
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) feature(norm2(sub(g.vertices[i], g.vertices[j])));
  for (int e = 0; e < m; ++e) {
    const Frame& F = geo.frames[e];
    Point d{F.a.x * F.length, F.a.y * F.length};
    for (int w = 0; w < static_cast<int>(g.vertices.size()); ++w) {
      if (w == g.edges[e].first || w == g.edges[e].second) continue;
      mpq_class cr = cross(d, sub(g.vertices[w], F.origin));
      feature(cr * cr / norm2(d));
    }
  }
  if (feature2 == 0)
    throw Error("EpsilonUnderflow", "a vertex lies on the line of a non-incident edge");
  geo.reach = 16 * (spread + 1);
  geo.epsilon0 = std::min(mpq_class(1), mpq_class(sqrt_lower(feature2) / 8));
  return geo;
}

GadgetArrangement build(const PlaneGraph& g, const Geometry& geo, const mpq_class& eps) {
  GadgetArrangement arr;
  arr.epsilon = eps;
  int m = static_cast<int>(g.edges.size());
  mpq_class u = eps / 4, tau = eps, mu = 4 * geo.kappa * eps;
  std::vector<std::vector<Point>> left_paths(m), right_paths(m);
  std::vector<Exit> exits;
  for (int e = 0; e < m; ++e) {
    const Frame& F = geo.frames[e];
    mpq_class sl = -geo.reach, sr = F.length + geo.reach;
    mpq_class z1 = -mu - tau, z2 = F.length + mu + tau;
    auto L = [&](const Pt& p) { return F.at(sl + p.first * u, p.second * u); };
    auto R = [&](const Pt& p) { return F.at(sr + p.first * u, p.second * u); };
    auto& lp = left_paths[e];
    for (const auto& p : kLeftBefore) lp.push_back(L(p));
    const std::vector<std::pair<mpq_class, int>> core = {
        {z1 - tau, -4},       {z1 + tau, 4}, {z2 - tau, 4},  {z2 + tau, -4}, {sr + kUturn * u, -4},
        {sr + kUturn * u, 4}, {z2 + tau, 4}, {z2 - tau, -4}, {z1 + tau, -4}, {z1 - tau, 4}};
    for (const auto& [s, t] : core) lp.push_back(F.at(s, t * u));
    for (const auto& p : kLeftAfter) lp.push_back(L(p));
    for (const auto& p : kRight) right_paths[e].push_back(R(p));
    std::vector<Point> probes;
    for (const auto& p : kLeftProbes) probes.push_back(L(p));
    for (const auto& p : kRightProbes) probes.push_back(R(p));
    probes.push_back(F.at(F.length / 2, 0));
    arr.probes.push_back(probes);
    exits.push_back({e, true, F.at(sl, 0)});
    exits.push_back({e, false, F.at(sr, 0)});
    std::vector<Point> all = lp;
    all.insert(all.end(), right_paths[e].begin(), right_paths[e].end());
    arr.gadget_paths.push_back(all);
  }
  Point c{0, 0};
  for (const auto& v : g.vertices) {
    c.x += v.x;
    c.y += v.y;
  }
  c.x /= static_cast<long>(g.vertices.size());
  c.y /= static_cast<long>(g.vertices.size());
  std::sort(exits.begin(), exits.end(),
            [&](const Exit& p, const Exit& q) { return cw_before(sub(p.where, c), sub(q.where, c)); });
  for (const auto& x : exits) {
    arr.boundary_windows.push_back(x.where);
    const auto& path = x.left ? left_paths[x.edge] : right_paths[x.edge];
    arr.loop.insert(arr.loop.end(), path.begin(), path.end());
  }
  return arr;
}

}  // namespace

void validate_plane_graph(const PlaneGraph& g) {
  int nv = static_cast<int>(g.vertices.size());
  if (g.edges.empty()) throw Error("BadGraph", "the graph has no edge");
  std::vector<std::pair<int, int>> seen;
  for (auto [i, j] : g.edges) {
    if (i < 0 || j < 0 || i >= nv || j >= nv) throw Error("BadGraph", "edge endpoint out of range");
    if (i == j) throw Error("BadGraph", "self-loop at vertex " + std::to_string(i));
    seen.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw Error("BadGraph", "repeated edge");
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (g.vertices[i] == g.vertices[j]) throw Error("BadGraph", "two vertices share a position");
  int m = static_cast<int>(g.edges.size());
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      auto [a1, a2] = g.edges[e];
      auto [b1, b2] = g.edges[f];
      const Point &p = g.vertices[a1], &q = g.vertices[a2], &r = g.vertices[b1], &s = g.vertices[b2];
      if (cross(sub(q, p), sub(s, r)) == 0)
        throw Error("ParallelEdges", "edges " + std::to_string(e) + " and " + std::to_string(f) + " are parallel");
      int shared = (a1 == b1 || a1 == b2) ? a1 : ((a2 == b1 || a2 == b2) ? a2 : -1);
      if (shared == -1 && segments_touch(p, q, r, s))
        throw Error("BadGraph", "edges " + std::to_string(e) + " and " + std::to_string(f) + " cross");
    }
  for (int e = 0; e < m; ++e)
    for (int w = 0; w < nv; ++w) {
      auto [i, j] = g.edges[e];
      if (w == i || w == j) continue;
      const Point &p = g.vertices[i], &q = g.vertices[j], &x = g.vertices[w];
      if (segments_touch(p, q, x, x)) throw Error("BadGraph", "vertex " + std::to_string(w) + " lies on an edge");
    }
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [i, j] : g.edges) parent[find(i)] = find(j);
  for (int v = 0; v < nv; ++v)
    if (find(v) != find(0)) throw Error("BadGraph", "the graph is not connected");
}

int min_vertex_cover(const PlaneGraph& g) {
  int nv = static_cast<int>(g.vertices.size());
  if (nv > 24) throw Error("BudgetExceeded", "brute-force vertex cover is limited to 24 vertices");
  int best = nv;
  for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool ok = std::all_of(g.edges.begin(), g.edges.end(),
                          [&](const auto& e) { return ((mask >> e.first) & 1u) || ((mask >> e.second) & 1u); });
    if (ok) best = size;
  }
  return best;
}

Reduction vc_to_loop(const PlaneGraph& g) {
  validate_plane_graph(g);
  Geometry geo = analyse(g);
  int m = static_cast<int>(g.edges.size());
  int expected = 12 * m + 2 * m * (m - 1);
  mpq_class eps = geo.epsilon0;
  for (int attempt = 0; attempt < 40; ++attempt, eps /= 2) {
    GadgetArrangement arr = build(g, geo, eps);
    Drawing d;
    try {
      d = trace_polylines({arr.loop});
    } catch (const Error& err) {
      if (err.kind() == "DegenerateCrossing") continue;
      throw;
    }
    if (static_cast<int>(d.crossings.size()) != expected) continue;
    Reduction r;
    try {
      std::vector<int> vreg;
      for (const auto& v : g.vertices) vreg.push_back(d.locate(v));
      std::vector<std::vector<int>> forced;
      std::vector<int> bigon;
      for (const auto& probes : arr.probes) {
        std::vector<int> f;
        for (int i = 0; i < 6; ++i) f.push_back(d.locate(probes[i]));
        forced.push_back(f);
        bigon.push_back(d.locate(probes[6]));
      }
      r.vertex_region = vreg;
      r.edge_forced = forced;
      r.edge_bigon = bigon;
    } catch (const Error& err) {
      if (err.kind() == "OnCurve") continue;
      throw;
    }
    std::vector<int> all_forced;
    for (const auto& f : r.edge_forced) all_forced.insert(all_forced.end(), f.begin(), f.end());
    std::vector<int> sorted = all_forced;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    std::map<int, std::string> labels;
    auto add = [&](int region, const std::string& name) {
      auto& s = labels[region];
      s += s.empty() ? name : "/" + name;
    };
    const char* names[6] = {"p1", "p2", "q1", "p3", "p4", "q2"};
    for (int e = 0; e < m; ++e)
      for (int i = 0; i < 6; ++i) add(r.edge_forced[e][i], std::string(names[i]) + ".e" + std::to_string(e));
    for (std::size_t v = 0; v < g.vertices.size(); ++v) add(r.vertex_region[v], "v" + std::to_string(v));
    r.loop = d.multiloop(labels);
    if (r.loop.n_strands() != 1 || r.loop.genus() != 0) continue;
    r.forced_pins = RegionSet(r.loop.n_regions(), all_forced);
    r.graph = g;
    r.arrangement = std::move(arr);
    r.expected_crossings = expected;
    return r;
  }
  throw Error("EpsilonUnderflow", "no epsilon down to " + to_string(eps) + " gives a generic gadget arrangement");
}

int reduction_pinning_number(const Reduction& r, const SearchOptions& opt) {
  MobidiscFormula f = mobidisc_formula(r.loop);
  return solve_hitting(f, HittingMode::Minimum, opt).pinning_number;
}

bool verify_correspondence(const PlaneGraph& g, int k, const SearchOptions& opt) {
  int cover = min_vertex_cover(g);
  if (cover != k) return false;
  Reduction r = vc_to_loop(g);
  return reduction_pinning_number(r, opt) == 6 * static_cast<int>(g.edges.size()) + k;
}

}  // namespace pinloop
