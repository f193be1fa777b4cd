#include "pinloop/pinning.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pinloop/error.hpp"
#include "pinloop/presentation.hpp"

namespace pinloop {

namespace {

class CountingPredicate {
 public:
  CountingPredicate(const MonotonePredicate& pred, const SearchOptions& opt) : pred_(pred), opt_(opt) {}

  bool operator()(const RegionSet& s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    if (opt_.budget && calls_ >= *opt_.budget)
      throw Error("BudgetExceeded", "search budget of " + std::to_string(*opt_.budget) + " evaluations exhausted");
    ++calls_;
    bool v = pred_(s);
    cache_.emplace(s, v);
    return v;
  }

 private:
  const MonotonePredicate& pred_;
  const SearchOptions& opt_;
  std::unordered_map<RegionSet, bool, RegionSetHash> cache_;
  std::int64_t calls_ = 0;
};

void check_size(int universe, const SearchOptions& opt) {
  if (universe > opt.max_regions)
    throw Error("BudgetExceeded", std::to_string(universe) + " regions exceed the exhaustive bound of " +
                                      std::to_string(opt.max_regions));
}

int pick(const RegionSet& undecided, const std::vector<int>& weight) {
  int best = -1;
  for (int r : undecided.elements())
    if (best == -1 || weight[r] > weight[best]) best = r;
  return best;
}

std::vector<int> degrees(const Multiloop& m) {
  std::vector<int> w;
  for (int r = 0; r < m.n_regions(); ++r) w.push_back(m.degree(r));
  return w;
}

MonotonePredicate oracle_predicate(const Multiloop& m) {
  return [&m](const RegionSet& s) { return is_pinning(m, s); };
}

}  // namespace

bool PinningOracle::operator()(const RegionSet& pins) {
  auto it = cache_.find(pins);
  if (it != cache_.end()) return it->second;
  ++evaluations_;
  bool v = is_pinning(*m_, pins);
  cache_.emplace(pins, v);
  return v;
}

bool is_pinning(const Multiloop& m, const RegionSet& pins) {
  return self_intersection(m, pins) == m.n_vertices();
}

RegionSet minimal_true_subset(const MonotonePredicate& pred, const RegionSet& start,
                              const std::vector<int>& order) {
  std::vector<int> a = order, b = start.elements();
  std::sort(a.begin(), a.end());
  if (a != b) throw Error("BadOrder", "order must list every region of the start set exactly once");
  if (!pred(start)) throw Error("NotPinning", "the start set is not pinning");
  RegionSet cur = start;
  for (int r : order) {
    RegionSet next = cur;
    next.erase(r);
    if (pred(next)) cur = next;
  }
  return cur;
}

RegionSet minimal_pinning_from(const Multiloop& m, const RegionSet& pins, const std::vector<int>& order) {
  PinningOracle oracle(m);
  return minimal_true_subset([&](const RegionSet& s) { return oracle(s); }, pins, order);
}

RegionSet forced_true(const MonotonePredicate& pred, int universe, const SearchOptions& opt) {
  check_size(universe, opt);
  CountingPredicate p(pred, opt);
  RegionSet full = RegionSet::full(universe), forced(universe);
  for (int r = 0; r < universe; ++r) {
    RegionSet s = full;
    s.erase(r);
    if (!p(s)) forced.insert(r);
  }
  return forced;
}

RegionSet minimum_true_set(const MonotonePredicate& pred, int universe, const std::vector<int>& weight,
                           const SearchOptions& opt) {
  check_size(universe, opt);
  CountingPredicate p(pred, opt);
  RegionSet full = RegionSet::full(universe);
  if (!p(full)) throw Error("NotPinning", "the full region set does not satisfy the predicate");
  RegionSet forced(universe);
  for (int r = 0; r < universe; ++r) {
    RegionSet s = full;
    s.erase(r);
    if (!p(s)) forced.insert(r);
  }
  RegionSet best = full;
  std::function<void(const RegionSet&, const RegionSet&)> rec = [&](const RegionSet& inc, const RegionSet& und) {
    if (inc.size() >= best.size()) return;
    if (p(inc)) {
      best = inc;
      return;
    }
    if (und.empty() || inc.size() + 1 >= best.size()) return;
    if (!p(inc | und)) return;
    int r = pick(und, weight);
    RegionSet inc2 = inc, und2 = und;
    inc2.insert(r);
    und2.erase(r);
    rec(inc2, und2);
    rec(inc, und2);
  };
  rec(forced, full - forced);
  return best;
}

std::vector<RegionSet> minimal_true_sets(const MonotonePredicate& pred, int universe,
                                         const std::vector<int>& weight, const SearchOptions& opt) {
  check_size(universe, opt);
  CountingPredicate p(pred, opt);
  RegionSet full = RegionSet::full(universe);
  if (!p(full)) return {};
  RegionSet forced(universe);
  for (int r = 0; r < universe; ++r) {
    RegionSet s = full;
    s.erase(r);
    if (!p(s)) forced.insert(r);
  }
  std::vector<RegionSet> out;
  std::function<void(const RegionSet&, const RegionSet&)> rec = [&](const RegionSet& inc, const RegionSet& und) {
    if (!p(inc | und)) return;
    if (p(inc)) {
      for (int x : inc.elements()) {
        RegionSet s = inc;
        s.erase(x);
        if (p(s)) return;
      }
      out.push_back(inc);
      return;
    }
    if (und.empty()) return;
    int r = pick(und, weight);
    RegionSet inc2 = inc, und2 = und;
    inc2.insert(r);
    und2.erase(r);
    rec(inc2, und2);
    rec(inc, und2);
  };
  rec(forced, full - forced);
  std::sort(out.begin(), out.end());
  return out;
}

PinningReport report_from_minimal_sets(std::vector<RegionSet> minimal_sets, int universe) {
  PinningReport rep;
  std::sort(minimal_sets.begin(), minimal_sets.end());
  rep.minimal_sets = minimal_sets;
  rep.forced_regions = RegionSet::full(universe);
  if (minimal_sets.empty()) {
    rep.forced_regions = RegionSet(universe);
    return rep;
  }
  rep.pinning_number = minimal_sets.front().size();
  for (const auto& s : minimal_sets) {
    if (s.size() == rep.pinning_number) rep.optimal_sets.push_back(s);
    rep.forced_regions = rep.forced_regions & s;
  }
  return rep;
}

PinningReport pinning_number_exact(const Multiloop& m, const SearchOptions& opt) {
  PinningOracle oracle(m);
  auto best = minimum_true_set([&](const RegionSet& s) { return oracle(s); }, m.n_regions(), degrees(m), opt);
  PinningReport rep;
  rep.pinning_number = best.size();
  rep.optimal_sets = {best};
  return rep;
}

std::vector<RegionSet> enumerate_minimal_pinning_sets(const Multiloop& m, const SearchOptions& opt) {
  return minimal_true_sets(oracle_predicate(m), m.n_regions(), degrees(m), opt);
}

RegionSet forced_regions(const Multiloop& m, const SearchOptions& opt) {
  return forced_true(oracle_predicate(m), m.n_regions(), opt);
}

PinningReport pinning_report(const Multiloop& m, const SearchOptions& opt) {
  return report_from_minimal_sets(enumerate_minimal_pinning_sets(m, opt), m.n_regions());
}

SemiLattice semilattice(const std::vector<RegionSet>& minimal_sets, int universe) {
  std::set<RegionSet> closure(minimal_sets.begin(), minimal_sets.end());
  closure.insert(RegionSet::full(universe));
  std::vector<RegionSet> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<RegionSet> next;
    for (const auto& a : frontier)
      for (const auto& g : minimal_sets) {
        RegionSet u = a | g;
        if (closure.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  SemiLattice lat;
  lat.nodes.assign(closure.begin(), closure.end());
  int best = minimal_sets.empty() ? -1 : std::min_element(minimal_sets.begin(), minimal_sets.end())->size();
  std::set<RegionSet> gens(minimal_sets.begin(), minimal_sets.end());
  for (const auto& n : lat.nodes) {
    if (!gens.count(n))
      lat.kinds.push_back(SemiLattice::Kind::Union);
    else
      lat.kinds.push_back(n.size() == best ? SemiLattice::Kind::Optimal : SemiLattice::Kind::Minimal);
  }
  int n = static_cast<int>(lat.nodes.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !lat.nodes[i].subset_of(lat.nodes[j]) || lat.nodes[i] == lat.nodes[j]) continue;
      bool covers = true;
      for (int k = 0; k < n && covers; ++k) {
        if (k == i || k == j) continue;
        if (lat.nodes[i].subset_of(lat.nodes[k]) && lat.nodes[k].subset_of(lat.nodes[j])) covers = false;
      }
      if (covers) lat.edges.emplace_back(i, j);
    }
  return lat;
}

std::string semilattice_dot(const SemiLattice& lat, const Multiloop* names) {
  std::ostringstream os;
  os << "digraph pinning_semilattice {\n  rankdir=BT;\n  node [shape=circle, style=filled, fillcolor=white];\n";
  std::map<int, std::vector<int>> ranks;
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    const auto& s = lat.nodes[i];
    std::string members;
    for (int r : s.elements()) {
      if (!members.empty()) members += ",";
      members += names ? names->region_name(r) : std::to_string(r);
    }
    os << "  n" << i << " [label=\"" << s.size() << "\", tooltip=\"{" << members << "}\"";
    if (lat.kinds[i] == SemiLattice::Kind::Optimal) os << ", fillcolor=red";
    if (lat.kinds[i] == SemiLattice::Kind::Minimal) os << ", fillcolor=green";
    os << "];\n";
    ranks[s.size()].push_back(static_cast<int>(i));
  }
  for (const auto& [card, ids] : ranks) {
    os << "  { rank=same;";
    for (int i : ids) os << " n" << i << ";";
    os << " }\n";
  }
  for (const auto& [a, b] : lat.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pinloop
