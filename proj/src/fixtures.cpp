#include "pinloop/fixtures.hpp"

#include "pinloop/error.hpp"
#include "pinloop/io.hpp"

namespace pinloop {

const std::vector<FixtureExpectation>& fixture_expectations() {
  using Clauses = std::vector<std::vector<std::string>>;
  static const std::vector<FixtureExpectation> e = {
      {"10_2_16", 10, 8, 2, 2, {}, {}, {}, {}},
      {"11_1_97", 11, 9, 1, 2, 4, 2, 13,
       Clauses{{"1", "2"}, {"2", "3"}, {"2", "10"}, {"4", "6"}, {"6", "7"}, {"6", "8"},
               {"1", "4", "5"}, {"1", "8", "9"}, {"3", "5", "7"}, {"3", "8", "11"},
               {"4", "10", "11"}, {"7", "9", "10"}, {"1", "5", "7", "9"},
               {"3", "4", "5", "11"}, {"8", "9", "10", "11"}}},
      {"9_1_5", 9, 7, 1, 2, 4, 2, 5,
       Clauses{{"1"}, {"4"}, {"2", "3"}, {"3", "8"}, {"2", "6", "7"}, {"5", "6", "8"}}},
      {"fig8", 3, 1, 1, 2, 2, {}, {}, {}},
      {"milnor", 9, 7, 1, 2, {}, {}, {}, {}},
      {"trefoil", 5, 3, 1, 2, {}, {}, {}, {}},
      {"weak_bigon", 4, 2, 1, 2, {}, {}, {}, {}},
      {"worked16", 10, 8, 2, 2, {}, {}, {}, {}},
  };
  return e;
}

Fixture fixture(const std::string& name) {
  for (const auto& [n, text] : fixture_sources()) {
    if (n != name) continue;
    FixtureExpectation exp;
    exp.name = name;
    for (const auto& x : fixture_expectations())
      if (x.name == name) exp = x;
    return {exp, multiloop_from_text(text)};
  }
  throw Error("UnknownFixture", "no fixture named '" + name + "'");
}

std::vector<Fixture> fixture_catalog() {
  std::vector<Fixture> out;
  for (const auto& [n, text] : fixture_sources()) out.push_back(fixture(n));
  return out;
}

}  // namespace pinloop
