#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pinloop/error.hpp"
#include "pinloop/fixtures.hpp"
#include "pinloop/io.hpp"
#include "pinloop/mobidisc.hpp"
#include "pinloop/pinning.hpp"
#include "pinloop/presentation.hpp"
#include "pinloop/reducer.hpp"

using namespace pinloop;

namespace {

constexpr const char* kFormat = "pinloop/1";

struct Options {
  std::string map, graph, pins, order, dimacs, dot, out, manifest;
  bool all_minimal = false, verify = false;
  std::optional<std::int64_t> budget;
  int jobs = 1;
};

// "fixture:NAME" selects an embedded fixture.
Multiloop load_map(const std::string& where) {
  if (where.rfind("fixture:", 0) == 0) return fixture(where.substr(8)).loop;
  return multiloop_from_text(read_file(where));
}

SearchOptions search(const Options& o) {
  SearchOptions s;
  s.budget = o.budget;
  return s;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("FileNotWritable", "cannot write '" + path + "'");
  out << text;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json tagged(Json j) {
  j["format"] = kFormat;
  return j;
}

Json sets_to_json(const Multiloop* m, const std::vector<RegionSet>& sets) {
  Json a = Json::array();
  for (const auto& s : sets) a.push_back(region_set_to_json(m, s));
  return a;
}

// Variables of a bare formula are reported with their 1-based DIMACS numbers.
Json dimacs_sets(const std::vector<RegionSet>& sets) {
  Json a = Json::array();
  for (const auto& s : sets) {
    Json x = Json::array();
    for (int v : s.elements()) x.push_back(v + 1);
    a.push_back(x);
  }
  return a;
}

std::string cnf_text(const Multiloop& m, const MobidiscFormula& f) {
  std::string head;
  for (int r = 0; r < m.n_regions(); ++r)
    head += "c " + std::to_string(r + 1) + " " + m.region_name(r) + "\n";
  return head + to_dimacs(f);
}

int cmd_validate(const Options& o) {
  Json j = Json::parse(read_file(o.map));
  std::vector<std::vector<int>> cycles;
  if (j.is_object() && j.contains("sigma") && j["sigma"].is_array())
    for (const auto& c : j["sigma"])
      if (c.is_array()) cycles.push_back(c.get<std::vector<int>>());
  auto problems = CombinatorialMap::diagnose(cycles, true);
  if (!problems.empty()) {
    print(tagged({{"valid", false}, {"problems", problems}}));
    return 1;
  }
  auto m = multiloop_from_json(j);
  Json out = {{"valid", true},         {"vertices", m.n_vertices()}, {"edges", m.n_edges()},
              {"regions", m.n_regions()}, {"strands", m.n_strands()},  {"chi", m.euler_characteristic()},
              {"genus", m.genus()},     {"degree_identity", degree_identity_check(m)}};
  if (m.genus() == 0) {
    auto f = connectivity_flags(m);
    out["irreducible"] = f.irreducible;
    out["indecomposible"] = f.indecomposible;
  }
  print(tagged(out));
  return 0;
}

int cmd_regions(const Options& o) {
  print(tagged(multiloop_to_json(load_map(o.map))));
  return 0;
}

int cmd_si(const Options& o) {
  auto m = load_map(o.map);
  std::cout << self_intersection(m, parse_region_list(m, o.pins)) << "\n";
  return 0;
}

int cmd_pin_check(const Options& o) {
  auto m = load_map(o.map);
  auto pins = parse_region_list(m, o.pins);
  auto s = self_intersection(m, pins);
  print(tagged({{"pins", region_set_to_json(&m, pins)},
                {"self_intersection", s},
                {"double_points", m.n_vertices()},
                {"pinning", s == m.n_vertices()}}));
  return 0;
}

int cmd_pin_min(const Options& o) {
  auto m = load_map(o.map);
  RegionSet start = o.pins.empty() ? m.all_regions() : parse_region_list(m, o.pins);
  std::vector<int> order = o.order.empty() ? start.elements() : parse_index_list(m, o.order);
  auto result = minimal_pinning_from(m, start, order);
  print(tagged({{"minimal", region_set_to_json(&m, result)}, {"size", result.size()}}));
  return 0;
}

int cmd_pin_number(const Options& o) {
  auto m = load_map(o.map);
  std::cout << pinning_number_exact(m, search(o)).pinning_number << "\n";
  return 0;
}

int cmd_pin_ideal(const Options& o) {
  auto m = load_map(o.map);
  auto r = pinning_report(m, search(o));
  if (!o.dot.empty()) emit(o.dot, semilattice_dot(semilattice(r.minimal_sets, m.n_regions()), &m));
  if (o.dot != "-") print(tagged(report_to_json(&m, r)));
  return 0;
}

int cmd_mobidiscs(const Options& o) {
  auto m = load_map(o.map);
  print(sets_to_json(&m, mobidisc_set(m, {o.jobs})));
  return 0;
}

int cmd_cnf(const Options& o) {
  auto m = load_map(o.map);
  auto f = mobidisc_formula(m, {o.jobs});
  if (o.dimacs.empty()) {
    print(tagged({{"variables", f.variables}, {"clauses", sets_to_json(&m, f.clauses)}}));
    return 0;
  }
  emit(o.dimacs, cnf_text(m, f));
  return 0;
}

int cmd_solve(const Options& o) {
  auto f = parse_dimacs(read_file(o.dimacs));
  auto r = solve_hitting(f, o.all_minimal ? HittingMode::AllMinimal : HittingMode::Minimum, search(o));
  Json j = {{"pinning_number", r.pinning_number}, {"optimal", dimacs_sets(r.optimal_sets)}};
  if (o.all_minimal) {
    j["minimal"] = dimacs_sets(r.minimal_sets);
    j["forced"] = dimacs_sets({r.forced_regions}).at(0);
  }
  print(tagged(j));
  return 0;
}

int cmd_semilattice_dot(const Options& o) {
  if (!o.map.empty()) {
    auto m = load_map(o.map);
    auto r = pinning_report(m, search(o));
    emit(o.dot, semilattice_dot(semilattice(r.minimal_sets, m.n_regions()), &m));
    return 0;
  }
  auto f = parse_dimacs(read_file(o.dimacs));
  auto r = solve_hitting(f, HittingMode::AllMinimal, search(o));
  emit(o.dot, semilattice_dot(semilattice(r.minimal_sets, f.variables)));
  return 0;
}

int cmd_reduce_vc(const Options& o) {
  auto g = plane_graph_from_json(Json::parse(read_file(o.graph)));
  auto r = vc_to_loop(g);
  if (!o.out.empty()) emit(o.out, reduction_to_json(r).dump(2) + "\n");
  Json j = {{"vertices", g.vertices.size()},
            {"edges", g.edges.size()},
            {"double_points", r.loop.n_vertices()},
            {"regions", r.loop.n_regions()},
            {"epsilon", to_string(r.arrangement.epsilon)}};
  Json table = Json::array();
  for (std::size_t v = 0; v < r.vertex_region.size(); ++v) table.push_back(r.loop.region_name(r.vertex_region[v]));
  j["vertex_regions"] = table;
  if (o.verify) {
    int k = min_vertex_cover(g);
    int pn = reduction_pinning_number(r, search(o));
    j["min_vertex_cover"] = k;
    j["pinning_number"] = pn;
    j["correspondence"] = pn == 6 * static_cast<int>(g.edges.size()) + k;
  }
  print(tagged(j));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pinning numbers, mobidiscs and self-intersections of multiloops"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--manifest", o.manifest, "Write the run manifest (JSON) to this file");

  auto map_opt = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--map", o.map, "Map JSON file, or fixture:NAME");
    if (required) opt->required();
  };
  auto budget = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "Maximal number of predicate evaluations");
    c->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    auto* c = app.add_subcommand(name, help);
    commands.emplace_back(c, fn);
    budget(c);
    return c;
  };

  auto* c = add("validate", "Check a map and print its invariants", cmd_validate);
  c->add_option("--map", o.map, "Map JSON file")->required()->check(CLI::ExistingFile);
  map_opt(add("regions", "Print the canonical JSON with derived tables", cmd_regions));
  c = add("si", "Self-intersection number relative to a pin set", cmd_si);
  map_opt(c);
  c->add_option("--pins", o.pins, "Comma-separated region names or indices")->required();
  c = add("pin-check", "Test whether a set pins the multiloop", cmd_pin_check);
  map_opt(c);
  c->add_option("--pins", o.pins, "Comma-separated region names or indices")->required();
  c = add("pin-min", "Greedy minimal pinning subset", cmd_pin_min);
  map_opt(c);
  c->add_option("--pins", o.pins, "Starting pin set (default: all regions)");
  c->add_option("--order", o.order, "Removal order");
  map_opt(add("pin-number", "Pinning number", cmd_pin_number));
  c = add("pin-ideal", "Optimal and minimal pinning sets", cmd_pin_ideal);
  map_opt(c);
  c->add_option("--dot", o.dot, "Write the semi-lattice as DOT (- for stdout)");
  map_opt(add("mobidiscs", "Proper mobidiscs of a loop", cmd_mobidiscs));
  c = add("cnf", "Pruned mobidisc formula", cmd_cnf);
  map_opt(c);
  c->add_option("--dimacs", o.dimacs, "Write DIMACS cnf (- for stdout)");
  c = add("solve", "Minimum (or all minimal) solutions of a positive cnf", cmd_solve);
  c->add_option("--dimacs", o.dimacs, "DIMACS cnf file")->required()->check(CLI::ExistingFile);
  c->add_flag("--all-minimal", o.all_minimal, "Enumerate every minimal solution");
  c = add("semilattice-dot", "DOT of the pinning semi-lattice", cmd_semilattice_dot);
  auto* m = c->add_option("--map", o.map, "Map JSON file, or fixture:NAME");
  auto* d = c->add_option("--dimacs", o.dimacs, "DIMACS cnf file instead of a map");
  m->excludes(d);
  c->add_option("--dot", o.dot, "Output file (default: stdout)");
  c = add("reduce-vc", "Loop whose pinning number encodes a vertex cover", cmd_reduce_vc);
  c->add_option("--graph", o.graph, "Plane graph JSON")->required()->check(CLI::ExistingFile);
  c->add_option("--out", o.out, "Write the loop JSON here");
  c->add_flag("--verify", o.verify, "Also compute the cover and pinning numbers");

  try {
    app.parse(argc, argv);
    for (auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      if (sub->get_name() == "semilattice-dot" && o.map.empty() && o.dimacs.empty())
        throw CLI::RequiredError("--map or --dimacs");
      if (!o.manifest.empty()) {
        Json man = {{"format", kFormat},
                    {"subcommand", sub->get_name()},
                    {"inputs", Json::object()},
                    {"options", Json::object()},
                    {"seed", 0}};
        for (const auto* opt : sub->get_options()) {
          if (opt->count() == 0 || opt->get_name() == "--help") continue;
          std::string key = opt->get_name().substr(2);
          bool input = key == "map" || key == "graph" || (key == "dimacs" && sub->get_name() != "cnf");
          man[input ? "inputs" : "options"][key] = opt->as<std::string>();
        }
        emit(o.manifest, man.dump(2) + "\n");
      }
      return fn(o);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << Json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << Json{{"error", "BadJson"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}
