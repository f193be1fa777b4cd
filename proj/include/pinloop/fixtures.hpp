#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pinloop/combmap.hpp"

namespace pinloop {

// Raw JSON of the shipped fixtures, by name, sorted.
const std::vector<std::pair<std::string, std::string>>& fixture_sources();

struct FixtureExpectation {
  std::string name;
  int regions = 0;
  int vertices = 0;
  int strands = 0;
  int chi = 2;
  std::optional<int> pinning_number;
  std::optional<int> optimal_sets;
  std::optional<int> minimal_sets;
  // Mobidisc formula, clauses as label lists.
  std::optional<std::vector<std::vector<std::string>>> formula;
};

struct Fixture {
  FixtureExpectation expected;
  Multiloop loop;
};

const std::vector<FixtureExpectation>& fixture_expectations();
// Throws Error("UnknownFixture").
Fixture fixture(const std::string& name);
std::vector<Fixture> fixture_catalog();

}  // namespace pinloop
