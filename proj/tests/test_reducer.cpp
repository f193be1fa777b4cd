#include "doctest.h"

#include <functional>
#include <random>

#include "pinloop/arrangement.hpp"
#include "pinloop/reducer.hpp"
#include "support.hpp"

using namespace pinloop;

namespace {

Point pt(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }

PlaneGraph graph(std::vector<Point> v, std::vector<std::pair<int, int>> e) { return {std::move(v), std::move(e)}; }

std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "ok";
}

// Proper crossings between non-adjacent pieces, in floating point.
int naive_crossings(const std::vector<std::vector<Point>>& loops) {
  struct Seg {
    double ax, ay, bx, by;
    int loop, idx;
  };
  std::vector<Seg> segs;
  for (int l = 0; l < static_cast<int>(loops.size()); ++l)
    for (std::size_t i = 0; i < loops[l].size(); ++i) {
      const auto& p = loops[l][i];
      const auto& q = loops[l][(i + 1) % loops[l].size()];
      segs.push_back({p.x.get_d(), p.y.get_d(), q.x.get_d(), q.y.get_d(), l, static_cast<int>(i)});
    }
  auto side = [](double ax, double ay, double bx, double by, double cx, double cy) {
    double v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return (v > 0) - (v < 0);
  };
  int count = 0;
  for (std::size_t a = 0; a < segs.size(); ++a)
    for (std::size_t b = a + 1; b < segs.size(); ++b) {
      const auto& s = segs[a];
      const auto& t = segs[b];
      if (side(s.ax, s.ay, s.bx, s.by, t.ax, t.ay) * side(s.ax, s.ay, s.bx, s.by, t.bx, t.by) < 0 &&
          side(t.ax, t.ay, t.bx, t.by, s.ax, s.ay) * side(t.ax, t.ay, t.bx, t.by, s.bx, s.by) < 0)
        ++count;
    }
  return count;
}

int brute_cover(const PlaneGraph& g) {
  int n = static_cast<int>(g.vertices.size()), best = n;
  for (int mask = 0; mask < (1 << n); ++mask) {
    bool ok = true;
    for (auto [a, b] : g.edges) ok &= ((mask >> a) & 1) || ((mask >> b) & 1);
    if (ok) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

const PlaneGraph kK2 = graph({pt("0", "0"), pt("1", "0")}, {{0, 1}});
const PlaneGraph kPath = graph({pt("0", "0"), pt("1", "0"), pt("1/2", "1")}, {{0, 1}, {1, 2}});

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/2") == mpq_class(1, 2));
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("4/6") == mpq_class(2, 3));
  CHECK(parse_rational("0.25") == mpq_class(1, 4));
  CHECK(parse_rational("-0.125") == mpq_class(-1, 8));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(error_kind([] { parse_rational("1/0"); }) == "BadNumber");
  CHECK(error_kind([] { parse_rational("abc"); }) == "BadNumber");
  CHECK(error_kind([] { parse_rational("1."); }) == "BadNumber");
}

TEST_CASE("tracing a figure eight") {
  auto d = trace_polylines({{pt("0", "0"), pt("2", "2"), pt("2", "0"), pt("0", "2")}});
  CHECK(d.sigma.size() == 1);
  CHECK(d.crossings.size() == 1);
  CHECK(d.crossings[0] == pt("1", "1"));
  auto m = d.multiloop();
  CHECK(m.n_regions() == 3);
  int left = d.locate(pt("1/4", "1"));
  int right = d.locate(pt("7/4", "1"));
  int outer = d.locate(pt("5", "5"));
  CHECK(left != right);
  CHECK(left != outer);
  CHECK(m.degree(left) == 1);
  CHECK(m.degree(right) == 1);
  CHECK(m.degree(outer) == 2);
  CHECK(error_kind([&] { d.locate(pt("1/2", "1/2")); }) == "OnCurve");
}

TEST_CASE("degenerate drawings") {
  CHECK(error_kind([] { trace_polylines({{pt("0", "0"), pt("1", "0"), pt("0", "1")}}); }) == "NoCrossing");
  // a corner on another piece
  CHECK(error_kind([] {
          trace_polylines({{pt("0", "0"), pt("2", "0"), pt("2", "2"), pt("1", "0"), pt("0", "2")}});
        }) == "DegenerateCrossing");
  CHECK(error_kind([] { trace_polylines({{pt("0", "0"), pt("2", "0"), pt("1", "0")}}); }) == "DegenerateCrossing");
  // three pieces through one point
  CHECK(error_kind([] {
          trace_polylines({{pt("0", "0"), pt("2", "2"), pt("2", "0"), pt("0", "2"), pt("1", "3"), pt("1", "-1")}});
        }) == "DegenerateCrossing");
}

TEST_CASE("random drawings match a floating point count") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> c(0, 30), k(3, 9);
  int traced = 0;
  while (traced < 100) {
    std::vector<std::vector<Point>> loops(1 + traced % 2);
    for (auto& l : loops)
      for (int i = k(rng); i > 0; --i) l.push_back({c(rng), c(rng)});
    Drawing d;
    try {
      d = trace_polylines(loops);
    } catch (const Error&) {
      continue;
    }
    ++traced;
    CHECK(static_cast<int>(d.crossings.size()) == naive_crossings(loops));
    auto map = CombinatorialMap::from_cycles(d.sigma, true);
    if (map.connected()) CHECK(map.euler_characteristic() == 2);
    CHECK(d.region_polygons.size() == static_cast<std::size_t>(map.n_faces()));
  }
}

TEST_CASE("plane graph validation") {
  CHECK(error_kind([] { validate_plane_graph(kPath); }) == "ok");
  CHECK(error_kind([] { validate_plane_graph(graph({pt("0", "0"), pt("1", "0")}, {{0, 0}})); }) == "BadGraph");
  CHECK(error_kind([] { validate_plane_graph(graph({pt("0", "0"), pt("1", "0")}, {{0, 1}, {1, 0}})); }) != "ok");
  CHECK(error_kind([] {
          validate_plane_graph(
              graph({pt("0", "0"), pt("2", "2"), pt("2", "0"), pt("0", "2")}, {{0, 1}, {2, 3}, {1, 2}}));
        }) == "BadGraph");
  CHECK(error_kind([] {
          validate_plane_graph(graph({pt("0", "0"), pt("2", "0"), pt("1", "0"), pt("1", "1")}, {{0, 1}, {2, 3}}));
        }) == "BadGraph");
  CHECK(error_kind([] {
          validate_plane_graph(
              graph({pt("0", "0"), pt("1", "0"), pt("5", "5"), pt("5", "6")}, {{0, 1}, {2, 3}}));
        }) == "BadGraph");
  CHECK(error_kind([] { validate_plane_graph(graph({pt("0", "0")}, {})); }) == "BadGraph");
}

TEST_CASE("vertex cover by brute force") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 30; ++i) {
    // random subgraphs of a convex polygon's sides and a fan: always plane
    int n = 3 + i % 6;
    PlaneGraph g;
    for (int v = 0; v < n; ++v) g.vertices.push_back({v, v * v});
    std::bernoulli_distribution coin(0.6);
    for (int v = 1; v < n; ++v)
      if (coin(rng) || v == 1) g.edges.emplace_back(0, v);
    for (int v = 1; v + 1 < n; ++v)
      if (coin(rng)) g.edges.emplace_back(v, v + 1);
    CHECK(min_vertex_cover(g) == brute_cover(g));
  }
}

TEST_CASE("one edge") {
  auto r = vc_to_loop(kK2);
  CHECK(r.expected_crossings == 12);
  CHECK(r.loop.n_vertices() == 12);
  CHECK(r.loop.n_strands() == 1);
  CHECK(r.loop.genus() == 0);
  for (int v : r.vertex_region) CHECK_FALSE(r.forced_pins.contains(v));
  CHECK(r.forced_pins.size() == 6);
  CHECK(r.edge_forced[0].size() == 6);
  CHECK(reduction_pinning_number(r) == 7);
  CHECK(verify_correspondence(kK2, 1));
  CHECK_FALSE(verify_correspondence(kK2, 0));
  // the same loop from any rational placement
  auto moved = vc_to_loop(graph({pt("-3/7", "5/11"), pt("2/3", "-1/5")}, {{0, 1}}));
  CHECK(moved.loop.n_vertices() == 12);
  CHECK(reduction_pinning_number(moved) == 7);
}

TEST_CASE("path and triangle") {
  auto r = vc_to_loop(kPath);
  CHECK(r.expected_crossings == 28);
  CHECK(r.loop.n_vertices() == 28);
  CHECK(r.vertex_region[0] != r.vertex_region[1]);
  CHECK(r.vertex_region[1] != r.vertex_region[2]);
  CHECK(r.vertex_region[0] != r.vertex_region[2]);
  CHECK(reduction_pinning_number(r) == 13);
  CHECK(verify_correspondence(kPath, 1));
  auto tri = graph({pt("0", "0"), pt("1", "0"), pt("1/2", "1")}, {{0, 1}, {1, 2}, {2, 0}});
  auto t = vc_to_loop(tri);
  CHECK(t.loop.n_vertices() == 48);
  CHECK(reduction_pinning_number(t) == 20);
}

TEST_CASE("reduction failures") {
  // the last vertex lies on the line of the first edge
  auto collinear = graph({pt("0", "0"), pt("1", "0"), pt("1", "1"), pt("2", "0")}, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(error_kind([&] { vc_to_loop(collinear); }) == "EpsilonUnderflow");
  auto straight = graph({pt("0", "0"), pt("1", "0"), pt("2", "0")}, {{0, 1}, {1, 2}});
  CHECK(error_kind([&] { vc_to_loop(straight); }) == "ParallelEdges");
}
