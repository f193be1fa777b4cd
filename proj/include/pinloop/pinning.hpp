#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pinloop/combmap.hpp"
#include "pinloop/region_set.hpp"

namespace pinloop {

// Upward-closed predicate on region sets (pinning, or hitting every clause).
using MonotonePredicate = std::function<bool(const RegionSet&)>;

struct SearchOptions {
  int max_regions = 24;                 // exhaustive bound
  std::optional<std::int64_t> budget;   // maximal number of predicate evaluations
};

// Caches sigma_P == #gamma per pin set.
class PinningOracle {
 public:
  explicit PinningOracle(const Multiloop& m) : m_(&m) {}
  bool operator()(const RegionSet& pins);
  std::int64_t evaluations() const { return evaluations_; }

 private:
  const Multiloop* m_;
  std::unordered_map<RegionSet, bool, RegionSetHash> cache_;
  std::int64_t evaluations_ = 0;
};

bool is_pinning(const Multiloop& m, const RegionSet& pins);

// Tries each region of `order` once for removal. Throws Error("NotPinning")
// when the predicate fails on `start`, Error("BadOrder") unless order is a
// permutation of start.
RegionSet minimal_true_subset(const MonotonePredicate& pred, const RegionSet& start,
                              const std::vector<int>& order);
RegionSet minimal_pinning_from(const Multiloop& m, const RegionSet& pins, const std::vector<int>& order);

struct PinningReport {
  int pinning_number = 0;
  std::vector<RegionSet> optimal_sets;
  std::vector<RegionSet> minimal_sets;
  RegionSet forced_regions;
};

// Generic searches over subsets of {0..universe-1}. `weight` guides branching
// (largest first, ties by index). Throw Error("BudgetExceeded").
RegionSet forced_true(const MonotonePredicate& pred, int universe, const SearchOptions& opt = {});
RegionSet minimum_true_set(const MonotonePredicate& pred, int universe, const std::vector<int>& weight,
                           const SearchOptions& opt = {});
std::vector<RegionSet> minimal_true_sets(const MonotonePredicate& pred, int universe,
                                         const std::vector<int>& weight, const SearchOptions& opt = {});
PinningReport report_from_minimal_sets(std::vector<RegionSet> minimal_sets, int universe);

// Report with the number and one witness (optimal_sets has one element).
PinningReport pinning_number_exact(const Multiloop& m, const SearchOptions& opt = {});
std::vector<RegionSet> enumerate_minimal_pinning_sets(const Multiloop& m, const SearchOptions& opt = {});
RegionSet forced_regions(const Multiloop& m, const SearchOptions& opt = {});
PinningReport pinning_report(const Multiloop& m, const SearchOptions& opt = {});

struct SemiLattice {
  enum class Kind { Union, Optimal, Minimal };
  std::vector<RegionSet> nodes;             // sorted by cardinality, then members
  std::vector<Kind> kinds;
  std::vector<std::pair<int, int>> edges;   // covering relations (lower, upper)
};

SemiLattice semilattice(const std::vector<RegionSet>& minimal_sets, int universe);
// Nodes labelled by cardinality, one rank per cardinality; red optimal and
// green other minimal generators.
std::string semilattice_dot(const SemiLattice& lattice, const Multiloop* names = nullptr);

}  // namespace pinloop
