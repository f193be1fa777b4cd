#include "doctest.h"

#include <random>
#include <set>

#include "pinloop/mobidisc.hpp"
#include "pinloop/presentation.hpp"
#include "support.hpp"

using namespace pinloop;
using testing::load;
using testing::reversed_walk;

namespace {

std::set<std::set<std::string>> named_clauses(const Multiloop& m, const MobidiscFormula& f) {
  std::set<std::set<std::string>> out;
  for (const auto& c : f.clauses) {
    std::set<std::string> names;
    for (int r : c.elements()) names.insert(m.region_name(r));
    out.insert(names);
  }
  return out;
}

// Disc search in both orientations.
bool oracle_bounds(const Multiloop& m, const std::vector<int>& walk, int infinity) {
  return count_disc_extensions(m, walk, infinity, 1) > 0 ||
         count_disc_extensions(m, reversed_walk(walk), infinity, 1) > 0;
}

MobidiscFormula random_formula(std::mt19937_64& rng, int vars, int clauses) {
  std::uniform_int_distribution<int> var(0, vars - 1), len(1, 3);
  std::vector<RegionSet> cs;
  for (int i = 0; i < clauses; ++i) {
    RegionSet c(vars);
    for (int k = len(rng); k > 0; --k) c.insert(var(rng));
    cs.push_back(c);
  }
  return prune_clauses(vars, cs);
}

}  // namespace

TEST_CASE("figure-eight monorbigons") {
  auto m = load("fig8");
  auto outer = *m.find_region("outer");
  auto bs = singular_monorbigons(m);
  REQUIRE(bs.size() == 2);
  for (const auto& b : bs) {
    CHECK(b.kind == Monorbigon::Kind::Monogon);
    // each lobe is an embedded circle
    CHECK(bounds_immersed_disc(m, b, outer));
    auto disc = mobidisc_of(m, b, outer);
    CHECK(disc.size() == 1);
  }
  const auto& whole = m.strands()[0];
  CHECK(turning_number(m, whole, outer) == 0);
  CHECK_FALSE(bounds_immersed_disc(m, whole, outer));
  CHECK_FALSE(bounds_immersed_disc(m, reversed_walk(whole), outer));
}

TEST_CASE("Milnor doodle bounds two immersed discs") {
  auto m = load("milnor");
  int inf = *m.find_region("inf");
  int kink = *m.find_region("kink");
  REQUIRE(m.degree(kink) == 1);
  int vertex = m.map().vertex_of(m.region_orbit(kink)[0]);
  int found = 0;
  for (const auto& b : singular_monorbigons(m)) {
    if (b.kind != Monorbigon::Kind::Monogon || b.marked_points != std::vector<int>{vertex} || b.subloop.size() < 2)
      continue;
    ++found;
    CHECK(bounds_immersed_disc(m, b, inf));
    auto walk = turning_number(m, b.subloop, inf) == 1 ? b.subloop : reversed_walk(b.subloop);
    CHECK(count_disc_extensions(m, walk, inf, 5) == 2);
  }
  CHECK(found == 1);
}

TEST_CASE("Blank grouping agrees with the disc search") {
  std::vector<Multiloop> loops;
  for (const char* f : {"fig8", "trefoil", "weak_bigon", "9_1_5", "milnor", "11_1_97"}) loops.push_back(load(f));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) loops.push_back(testing::random_plane_multiloop(rng, 2, 9));
  int cases = 0;
  for (const auto& m : loops) {
    auto bs = singular_monorbigons(m);
    for (int inf = 0; inf < m.n_regions(); ++inf)
      for (const auto& b : bs) {
        ++cases;
        CHECK(bounds_immersed_disc(m, b, inf) == oracle_bounds(m, b.subloop, inf));
      }
  }
  CHECK(cases > 500);
}

TEST_CASE("winding numbers") {
  auto m = load("9_1_5");
  const auto& walk = m.strands()[0];
  for (int inf = 0; inf < m.n_regions(); ++inf) {
    auto w = winding_numbers(m, walk, inf);
    CHECK(w[inf] == 0);
    // crossing one edge of the walk changes the winding by one
    for (int h : walk) CHECK(std::abs(w[m.region_of(h)] - w[m.region_of(-h)]) == 1);
  }
}

TEST_CASE("printed mobidisc formulas") {
  auto m = load("9_1_5");
  auto f = mobidisc_formula(m);
  CHECK(f.variables == 9);
  std::set<std::set<std::string>> printed = {{"1"}, {"4"}, {"2", "3"}, {"3", "8"}, {"2", "6", "7"}, {"5", "6", "8"}};
  CHECK(named_clauses(m, f) == printed);
  auto r = solve_hitting(f, HittingMode::AllMinimal);
  CHECK(r.pinning_number == 4);
  CHECK(r.optimal_sets.size() == 2);
  CHECK(r.minimal_sets.size() == 5);

  auto k = load("11_1_97");
  auto g = mobidisc_formula(k);
  CHECK(g.clauses.size() == 15);
  auto expected = fixture("11_1_97").expected;
  for (const auto& e : *expected.formula) {
    std::set<std::string> c(e.begin(), e.end());
    CHECK(named_clauses(k, g).count(c) == 1);
  }
  auto s = solve_hitting(g, HittingMode::AllMinimal);
  CHECK(s.minimal_sets.size() == 13);
  RegionSet a(k.n_regions());
  for (const char* n : {"2", "4", "7", "8"}) a.insert(*k.find_region(n));
  CHECK(std::find(s.optimal_sets.begin(), s.optimal_sets.end(), a) != s.optimal_sets.end());
}

TEST_CASE("pinning sets are the solutions of the formula") {
  std::vector<Multiloop> loops;
  for (const char* f : {"fig8", "trefoil", "weak_bigon", "9_1_5", "milnor", "11_1_97"}) loops.push_back(load(f));
  std::mt19937_64 rng(42);
  for (int i = 0; i < 15; ++i) loops.push_back(testing::random_plane_multiloop(rng, 2, 8));
  for (const auto& m : loops) {
    auto f = mobidisc_formula(m);
    int n = m.n_regions();
    int bad = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      auto p = RegionSet::from_mask(n, mask);
      bad += is_pinning(m, p) != satisfies(f, p);
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("mobidisc sets over every infinity") {
  auto m = load("weak_bigon");
  auto discs = mobidisc_set(m);
  CHECK(std::is_sorted(discs.begin(), discs.end()));
  int lens = *m.find_region("lens");
  CHECK(std::find(discs.begin(), discs.end(), RegionSet(m.n_regions(), {lens})) != discs.end());
  for (const auto& d : discs) CHECK(d != m.all_regions());
  MobidiscOptions four;
  four.jobs = 4;
  CHECK(mobidisc_set(m, four) == discs);
  auto k = load("11_1_97");
  CHECK(mobidisc_set(k, four) == mobidisc_set(k));
  CHECK_THROWS_AS(mobidisc_set(load("worked16")), Error);
}

TEST_CASE("weak bigon and the trefoil petals") {
  auto m = load("weak_bigon");
  RegionSet ends(m.n_regions(), {*m.find_region("left"), *m.find_region("right")});
  CHECK_FALSE(is_pinning(m, ends));
  RegionSet more = ends;
  more.insert(*m.find_region("lens"));
  CHECK(is_pinning(m, more));
  CHECK(linking_obstruction(m, ends).has_value());

  auto t = load("trefoil");
  RegionSet petals(t.n_regions(), {*t.find_region("0"), *t.find_region("1"), *t.find_region("inf")});
  CHECK(is_pinning(t, petals));
  CHECK_FALSE(linking_obstruction(t, petals).has_value());
  CHECK_THROWS_AS(linking_obstruction(t, RegionSet(t.n_regions())), Error);
}

TEST_CASE("hitting sets against exhaustive search") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    int vars = 3 + i % 8;
    auto f = random_formula(rng, vars, 2 + i % 7);
    std::vector<RegionSet> minimal;
    int best = vars + 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars); ++mask) {
      auto s = RegionSet::from_mask(vars, mask);
      if (!satisfies(f, s)) continue;
      bool min = true;
      for (int v : s.elements()) {
        auto t = s;
        t.erase(v);
        if (satisfies(f, t)) min = false;
      }
      if (!min) continue;
      minimal.push_back(s);
      best = std::min(best, s.size());
    }
    std::sort(minimal.begin(), minimal.end());
    auto r = solve_hitting(f, HittingMode::AllMinimal);
    auto got = r.minimal_sets;
    std::sort(got.begin(), got.end());
    CHECK(got == minimal);
    CHECK(r.pinning_number == best);
    CHECK(solve_hitting(f, HittingMode::Minimum).pinning_number == best);
  }
}

TEST_CASE("clause pruning") {
  auto f = prune_clauses(4, {RegionSet(4, {0, 1}), RegionSet(4, {0}), RegionSet(4, {1, 2}), RegionSet(4, {1, 2, 3}),
                             RegionSet(4, {0})});
  CHECK(f.clauses.size() == 2);
  CHECK(satisfies(f, RegionSet(4, {0, 1})));
  CHECK_FALSE(satisfies(f, RegionSet(4, {0, 3})));
}

TEST_CASE("DIMACS round trip") {
  auto m = load("11_1_97");
  auto f = mobidisc_formula(m);
  auto text = to_dimacs(f);
  CHECK(text.rfind("p cnf 11 15\n", 0) == 0);
  auto g = parse_dimacs(text);
  CHECK(g.variables == f.variables);
  CHECK(g.clauses == f.clauses);
  auto a = solve_hitting(f, HittingMode::AllMinimal);
  auto b = solve_hitting(g, HittingMode::AllMinimal);
  CHECK(a.minimal_sets == b.minimal_sets);
  CHECK(a.optimal_sets == b.optimal_sets);

  CHECK(parse_dimacs("c note\np cnf 3 2\n1 2 0\n3 0\n").clauses.size() == 2);
  CHECK(parse_dimacs("p cnf 3 1\n1\n2 0\n").clauses.size() == 1);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 -2 0\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n4 0\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 0\n"), Error);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\nx 0\n"), Error);
}
