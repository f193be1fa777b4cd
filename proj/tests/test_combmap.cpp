#include "doctest.h"

#include <map>
#include <set>

#include "pinloop/combmap.hpp"
#include "support.hpp"

using namespace pinloop;
using testing::load;

namespace {

const std::vector<std::vector<int>> kWorked = {{9, 8, -10, -1}, {5, 2, -6, -3},   {3, 12, -4, -13},
                                               {13, 4, -14, -5}, {14, 7, -15, -8}, {10, 15, -11, -16},
                                               {1, 16, -2, -9},  {6, 11, -7, -12}};

// Faces traced from the raw cycles, without the map class.
std::vector<int> raw_face_degrees(const std::vector<std::vector<int>>& cycles) {
  std::map<int, int> next;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) next[c[i]] = c[(i + 1) % c.size()];
  std::map<int, int> prev;
  for (auto [a, b] : next) prev[b] = a;
  std::set<int> seen;
  std::vector<int> degrees;
  for (auto [h, unused] : next) {
    if (seen.count(h)) continue;
    int d = 0;
    for (int x = h; !seen.count(x); x = prev[-x]) {
      seen.insert(x);
      ++d;
    }
    degrees.push_back(d);
  }
  return degrees;
}

// Two opposite corners of some vertex in one region.
bool has_nugatory_vertex(const Multiloop& m) {
  for (const auto& v : m.map().vertices())
    if (m.region_of(v[0]) == m.region_of(v[2]) || m.region_of(v[1]) == m.region_of(v[3])) return true;
  return false;
}

}  // namespace

TEST_CASE("permutations of the worked multiloop") {
  auto map = CombinatorialMap::from_cycles(kWorked, true);
  CHECK(map.phi(-1) == -9);
  CHECK(map.delta(1) == 2);
  CHECK(map.n_vertices() == 8);
  CHECK(map.n_edges() == 16);
  CHECK(map.n_faces() == 10);
  CHECK(map.euler_characteristic() == 2);
  CHECK(map.genus() == 0);
  for (int h : map.half_edges()) {
    CHECK(map.sigma_inv(map.sigma(h)) == h);
    CHECK(map.phi(h) == map.sigma_inv(-h));
    CHECK(map.vertex_of(h) == map.vertex_of(map.sigma(h)));
    CHECK(map.face_of(h) == map.face_of(map.phi(h)));
  }
}

TEST_CASE("regions are indexed by their smallest half-edge") {
  auto map = CombinatorialMap::from_cycles(kWorked, true);
  int last = 0;
  for (const auto& f : map.faces()) {
    int best = *std::min_element(f.begin(), f.end(), [](int a, int b) {
      return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a > b;
    });
    CHECK(f.front() == best);
    int key = 2 * std::abs(best) + (best < 0 ? 1 : 0);
    CHECK(key > last);
    last = key;
  }
}

TEST_CASE("strands follow delta and honour the orientation") {
  auto m = Multiloop::from_map(CombinatorialMap::from_cycles(kWorked, true), {1, 14});
  REQUIRE(m.n_strands() == 2);
  CHECK(m.strands()[0].front() == 1);
  CHECK(m.strands()[1].front() == 14);
  std::size_t total = 0;
  for (const auto& s : m.strands()) {
    total += s.size();
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(m.map().delta(s[i]) == s[(i + 1) % s.size()]);
  }
  CHECK(total == 16);
  auto flipped = Multiloop::from_map(CombinatorialMap::from_cycles(kWorked, true), {-1, 14});
  CHECK(flipped.strands()[0].front() == -1);
  CHECK_THROWS_AS(Multiloop::from_map(CombinatorialMap::from_cycles(kWorked, true), {1, 2}), Error);
  CHECK_THROWS_AS(Multiloop::from_map(CombinatorialMap::from_cycles(kWorked, true), {1}), Error);
}

TEST_CASE("malformed inputs are rejected with their kind") {
  auto kind = [](const std::vector<std::vector<int>>& c) {
    try {
      auto m = CombinatorialMap::from_cycles(c, true);
      Multiloop::from_map(m);
    } catch (const Error& e) {
      return e.kind();
    }
    return std::string("ok");
  };
  CHECK(kind({{1, 2, -1, -2}}) == "ok");
  CHECK(kind({{1, 2, -1, 2}}) == "MalformedPermutation");
  CHECK(kind({{1, 2, -1, 0}}) == "MalformedPermutation");
  CHECK(kind({{1, 2, -1}}) == "MalformedPermutation");
  CHECK(kind({{1, 2, 3}, {-1, -2, -3}}) == "NotFourRegular");
  CHECK(kind({{1, 2, -1, -2}, {3, 4, -3, -4}}) == "Disconnected");
  CHECK(kind({}) != "ok");
  CHECK(CombinatorialMap::diagnose({{1, 2, 3}, {-1, -2, -3}}, true).size() == 2);
}

TEST_CASE("degree identity and orbit counts against raw tracing") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto map = testing::random_map(rng, 2 * (1 + trial % 8));
    std::vector<std::vector<int>> cycles = map.vertices();
    auto degrees = raw_face_degrees(cycles);
    CHECK(static_cast<int>(degrees.size()) == map.n_faces());
    int chi = map.n_vertices() - map.n_edges() + static_cast<int>(degrees.size());
    CHECK(chi % 2 == 0);
    CHECK(degree_identity_check(degrees, chi));
    auto m = Multiloop::from_map(map);
    CHECK(degree_identity_check(m));
    CHECK(m.genus() == (2 - chi) / 2);
  }
  CHECK_FALSE(degree_identity_check({2, 3, 4}, 2));
}

TEST_CASE("subsurface profiles") {
  auto m = load("worked16");
  auto whole = subsurface_profile(m, m.all_regions());
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].euler_characteristic == 2);
  CHECK(whole[0].boundary_components == 0);
  CHECK(whole[0].genus == 0);
  for (int r = 0; r < m.n_regions(); ++r) {
    auto one = subsurface_profile(m, RegionSet(m.n_regions(), {r}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].euler_characteristic == 1);
    CHECK(one[0].boundary_components == 1);
  }
  // complement of one region is a disc as well
  auto rest = subsurface_profile(m, m.all_regions() - RegionSet(m.n_regions(), {0}));
  REQUIRE(rest.size() == 1);
  CHECK(rest[0].euler_characteristic == 1);
}

TEST_CASE("irreducibility matches the nugatory-vertex test") {
  for (const auto& f : fixture_catalog())
    CHECK(connectivity_flags(f.loop).irreducible == !has_nugatory_vertex(f.loop));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    auto m = testing::random_plane_multiloop(rng, 1, 9);
    CHECK(connectivity_flags(m).irreducible == !has_nugatory_vertex(m));
  }
  CHECK_FALSE(connectivity_flags(load("milnor")).indecomposible);
  CHECK(connectivity_flags(load("9_1_5")).indecomposible);
}

TEST_CASE("genus above zero") {
  auto map = CombinatorialMap::from_cycles({{2, 1, -1, -2}}, true);
  CHECK(map.genus() == 0);
  // one vertex, two edges, a single face
  auto torus = CombinatorialMap::from_cycles({{1, -2, -1, 2}}, true);
  CHECK(torus.n_faces() == 1);
  CHECK(torus.genus() == 1);
  CHECK_THROWS_AS(connectivity_flags(Multiloop::from_map(torus)), Error);
}
