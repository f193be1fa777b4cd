#include "doctest.h"

#include <functional>
#include <set>

#include "pinloop/error.hpp"
#include "pinloop/fixtures.hpp"
#include "pinloop/io.hpp"
#include "pinloop/mobidisc.hpp"
#include "pinloop/pinning.hpp"

using namespace pinloop;

namespace {

std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "ok";
}

}  // namespace

TEST_CASE("fixtures survive a round trip") {
  for (const auto& f : fixture_catalog()) {
    CAPTURE(f.expected.name);
    auto j = multiloop_to_json(f.loop);
    auto back = multiloop_from_json(j);
    CHECK(back.map().vertices() == f.loop.map().vertices());
    CHECK(back.orientation() == f.loop.orientation());
    CHECK(back.labels() == f.loop.labels());
    CHECK(back.strands() == f.loop.strands());
    CHECK(multiloop_to_json(back) == j);
    CHECK(multiloop_from_text(j.dump()).map().faces() == f.loop.map().faces());
    CHECK(j["regions"].size() == static_cast<std::size_t>(f.loop.n_regions()));
    CHECK(j["chi"] == f.loop.euler_characteristic());
  }
}

TEST_CASE("fixtures match their recorded invariants") {
  CHECK(fixture_catalog().size() == 8);
  for (const auto& f : fixture_catalog()) {
    CAPTURE(f.expected.name);
    const auto& e = f.expected;
    const auto& m = f.loop;
    CHECK(m.n_regions() == e.regions);
    CHECK(m.n_vertices() == e.vertices);
    CHECK(m.n_strands() == e.strands);
    CHECK(m.euler_characteristic() == e.chi);
    if (e.pinning_number) {
      auto r = pinning_report(m);
      CHECK(r.pinning_number == *e.pinning_number);
      if (e.optimal_sets) CHECK(r.optimal_sets.size() == static_cast<std::size_t>(*e.optimal_sets));
      if (e.minimal_sets) CHECK(r.minimal_sets.size() == static_cast<std::size_t>(*e.minimal_sets));
    }
    if (e.formula) {
      std::set<std::set<std::string>> want, got;
      for (const auto& c : *e.formula) want.insert({c.begin(), c.end()});
      for (const auto& c : mobidisc_formula(m).clauses) {
        std::set<std::string> names;
        for (int r : c.elements()) names.insert(m.region_name(r));
        got.insert(names);
      }
      CHECK(got == want);
    }
  }
  CHECK(error_kind([] { fixture("nope"); }) == "UnknownFixture");
}

TEST_CASE("malformed map JSON") {
  CHECK(error_kind([] { multiloop_from_text("{"); }) == "BadJson");
  CHECK(error_kind([] { multiloop_from_text("[]"); }) == "BadJson");
  CHECK(error_kind([] { multiloop_from_text(R"({"sigma": [[1, 2, "x", -2]]})"); }) == "BadJson");
  CHECK(error_kind([] { multiloop_from_text(R"({"sigma": [[2, 1, -1, -2]], "labels": {"a": "x"}})"); }) == "BadJson");
  CHECK(error_kind([] { multiloop_from_text(R"({"sigma": [[2, 1, -1, -2]], "labels": {"7": "x"}})"); }) ==
        "BadLabel");
  CHECK(error_kind([] { multiloop_from_text(R"({"sigma": [[2, 1, -1]]})"); }) == "MalformedPermutation");
  CHECK(error_kind([] { multiloop_from_text(R"({"sigma": [[2, 1, -1, -2]], "orientation": [5]})"); }) ==
        "BadOrientation");
  auto m = multiloop_from_text(R"({"sigma": [[2, 1, -1, -2]]})");
  CHECK(m.n_regions() == 3);
  CHECK_FALSE(m.has_labels());
}

TEST_CASE("region lists") {
  auto m = fixture("worked16").loop;
  auto s = parse_region_list(m, "r, p1,p2");
  CHECK(s.size() == 3);
  CHECK(s.contains(*m.find_region("p1")));
  CHECK(parse_region_list(m, "0,3").elements() == std::vector<int>{0, 3});
  CHECK(parse_region_list(m, "").empty());
  CHECK(parse_index_list(m, "p2,r") == std::vector<int>{*m.find_region("p2"), *m.find_region("r")});
  CHECK(error_kind([&] { parse_region_list(m, "r,zz"); }) == "BadRegion");
  CHECK(error_kind([&] { parse_region_list(m, "r,r"); }) == "BadRegion");
  CHECK(error_kind([&] { parse_region_list(m, "r,,p1"); }) == "BadRegion");
  CHECK(error_kind([&] { parse_region_list(m, "10"); }) == "BadRegion");
  CHECK(region_set_to_json(&m, s) == Json::array({"r", "p2", "p1"}));
}

TEST_CASE("reports as JSON") {
  auto m = fixture("9_1_5").loop;
  auto j = report_to_json(&m, pinning_report(m));
  CHECK(j["pinning_number"] == 4);
  CHECK(j["optimal"].size() == 2);
  CHECK(j["minimal"].size() == 5);
  CHECK(j["forced"].is_array());
  for (const auto& s : j["optimal"]) CHECK(s.size() == 4);
}

TEST_CASE("plane graphs as JSON") {
  auto g = plane_graph_from_json(Json::parse(R"({"vertices": [["0","0"], [1, "1/2"], ["-0.5", "3"]], "edges": [[0,1],[1,2]]})"));
  REQUIRE(g.vertices.size() == 3);
  CHECK(g.vertices[1].y == mpq_class(1, 2));
  CHECK(g.vertices[2].x == mpq_class(-1, 2));
  auto j = plane_graph_to_json(g);
  CHECK(j["vertices"][2] == Json::array({"-1/2", "3"}));
  auto back = plane_graph_from_json(j);
  CHECK(back.edges == g.edges);
  CHECK(error_kind([] { plane_graph_from_json(Json::parse(R"({"vertices": [["0","0"]], "edges": [[0,1]]})")); }) ==
        "BadGraph");
  CHECK(error_kind([] { plane_graph_from_json(Json::parse(R"({"vertices": [["0"]], "edges": []})")); }) == "BadJson");
  CHECK(error_kind([] { plane_graph_from_json(Json::parse(R"({"vertices": [["a","0"]], "edges": []})")); }) ==
        "BadNumber");
}

TEST_CASE("missing files") { CHECK(error_kind([] { read_file("/nonexistent/file.json"); }) == "FileNotFound"); }
