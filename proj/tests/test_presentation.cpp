#include "doctest.h"

#include <random>

#include "pinloop/mobidisc.hpp"
#include "pinloop/presentation.hpp"
#include "support.hpp"

using namespace pinloop;
using testing::load;

namespace {

RegionSet named(const Multiloop& m, std::initializer_list<const char*> names) {
  RegionSet s(m.n_regions());
  for (const char* n : names) s.insert(*m.find_region(n));
  return s;
}

}  // namespace

TEST_CASE("worked multiloop with three pins") {
  auto m = load("worked16");
  auto p = named(m, {"r", "p1", "p2"});
  CHECK(self_intersection(m, p) == 4);
  CHECK(self_intersection(m, m.all_regions()) == 8);
  std::mt19937_64 rng(2);
  for (int root : p.elements())
    for (int k = 0; k < 5; ++k) {
      auto full = full_presentation(m, build_random_tree(m, root, rng));
      CHECK(self_intersection(m, pin_presentation(m, full, p)) == 4);
    }
}

TEST_CASE("every region pinned leaves the multiloop taut") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 80; ++i) {
    auto m = testing::random_plane_multiloop(rng, 1, 10, 1 + i % 2);
    CHECK(self_intersection(m, m.all_regions()) == m.n_vertices());
  }
  for (int i = 0; i < 30; ++i) {
    auto map = testing::random_map(rng, 2 + 2 * (i % 4));
    auto m = Multiloop::from_map(map);
    CHECK(self_intersection(m, m.all_regions()) == m.n_vertices());
  }
}

TEST_CASE("one pin is a disc, two pins an annulus") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    auto m = testing::random_plane_multiloop(rng, 1, 9, 1 + i % 2);
    std::uniform_int_distribution<int> pick(0, m.n_regions() - 1);
    int p = pick(rng), q = pick(rng);
    CHECK(self_intersection(m, RegionSet(m.n_regions(), {p})) == 0);
    if (p == q) continue;
    std::int64_t expected = 0;
    for (const auto& s : m.strands()) {
      int k = std::abs(winding_numbers(m, s, q)[p]);
      if (k > 1) expected += k - 1;
    }
    CHECK(self_intersection(m, RegionSet(m.n_regions(), {p, q})) == expected);
  }
}

TEST_CASE("more pins never lower the count") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    auto m = testing::random_plane_multiloop(rng, 2, 9);
    std::bernoulli_distribution coin(0.5);
    RegionSet p(m.n_regions());
    for (int r = 0; r < m.n_regions(); ++r)
      if (coin(rng)) p.insert(r);
    if (p.empty()) p.insert(0);
    auto s = self_intersection(m, p);
    CHECK(s <= m.n_vertices());
    for (int r = 0; r < m.n_regions(); ++r) {
      if (p.contains(r)) continue;
      RegionSet q = p;
      q.insert(r);
      CHECK(self_intersection(m, q) >= s);
    }
  }
}

TEST_CASE("tree structure and relators") {
  auto m = load("worked16");
  auto tree = build_tree(m, 3);
  CHECK(tree.root == 3);
  CHECK(tree.parent[3] == -1);
  CHECK(tree.preorder.size() == static_cast<std::size_t>(m.n_regions()));
  CHECK(tree.leftover_edges.empty());
  int cut = 0;
  for (int e = 1; e <= m.n_edges(); ++e) cut += tree.is_cut(e) ? 1 : 0;
  CHECK(cut == m.n_regions() - 1);
  for (int r = 0; r < m.n_regions(); ++r) {
    if (r == 3) continue;
    int tree_degree = 0;
    for (int h : m.region_orbit(r))
      if (tree.is_cut(std::abs(h))) ++tree_degree;
    auto rel = region_relator(m, tree, r);
    CHECK(static_cast<int>(rel.size()) == tree_degree);
    CHECK(rel.front().gen == r);
  }
  CHECK_THROWS_AS(region_relator(m, tree, 3), Error);
  CHECK_THROWS_AS(build_tree(m, 99), Error);
}

TEST_CASE("pinned presentations only keep live generators") {
  auto m = load("worked16");
  auto p = named(m, {"r", "p1", "p2"});
  auto pinned = pin_presentation(m, p);
  CHECK(pinned.generators.size() == 2);
  CHECK(pinned.order.sequence().size() == 4);
  CHECK(pinned.rules.size() == static_cast<std::size_t>(m.n_regions() - 3));
  for (const auto& w : pinned.strand_words) {
    CHECK(is_cyclically_reduced(w));
    for (const auto& x : w) CHECK(p.contains(x.gen));
  }
  auto table = winding_table(pinned);
  CHECK(table.punctures.size() == 2);
  for (std::size_t g = 0; g < table.generators.size(); ++g)
    for (std::size_t j = 0; j < table.punctures.size(); ++j)
      CHECK(table.entries[g][j] == (table.generators[g] == table.punctures[j] ? 1 : 0));
}

TEST_CASE("strand words of the full presentation") {
  auto m = load("worked16");
  auto full = full_presentation(m, build_tree(m, 3));
  REQUIRE(full.strand_words.size() == 2);
  CHECK(full.order.sequence().size() == static_cast<std::size_t>(2 * (m.n_regions() - 1)));
  std::size_t crossings = 0;
  for (const auto& w : full.strand_words) crossings += w.size();
  // every tree edge is crossed once by some strand
  CHECK(crossings == static_cast<std::size_t>(m.n_regions() - 1));
}

TEST_CASE("surfaces of higher genus") {
  std::mt19937_64 rng(24);
  int seen = 0;
  while (seen < 10) {
    auto m = Multiloop::from_map(testing::random_map(rng, 6));
    if (m.genus() == 0) continue;
    ++seen;
    CHECK_THROWS_AS(self_intersection(m, RegionSet(m.n_regions())), Error);
    CHECK(self_intersection(m, RegionSet(m.n_regions(), {0})) <= m.n_vertices());
  }
}
