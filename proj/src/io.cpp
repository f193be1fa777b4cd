#include "pinloop/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pinloop/error.hpp"

namespace pinloop {

namespace {

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error("BadJson", std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error("BadJson", std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

mpq_class rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  throw Error("BadJson", "coordinates must be \"p/q\" strings or integers");
}

Json point_to_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error("BadRegion", "empty item in '" + text + "'");
    out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

Multiloop multiloop_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sigma")) throw Error("BadJson", "expected an object with a \"sigma\" field");
  const Json& s = j.at("sigma");
  if (!s.is_array()) throw Error("BadJson", "sigma must be a list of cycles");
  std::vector<std::vector<int>> cycles;
  for (const auto& c : s) cycles.push_back(int_list(c, "sigma cycles"));
  std::vector<int> orientation;
  if (j.contains("orientation") && !j.at("orientation").is_null())
    orientation = int_list(j.at("orientation"), "orientation");
  std::map<int, std::string> labels;
  if (j.contains("labels") && !j.at("labels").is_null()) {
    const Json& l = j.at("labels");
    if (!l.is_object()) throw Error("BadJson", "labels must be an object");
    for (const auto& [k, v] : l.items()) {
      if (!v.is_string()) throw Error("BadJson", "labels must map to strings");
      int r = 0;
      try {
        std::size_t used = 0;
        r = std::stoi(k, &used);
        if (used != k.size()) throw std::invalid_argument(k);
      } catch (const std::exception&) {
        throw Error("BadJson", "label key '" + k + "' is not a region index");
      }
      labels[r] = v.get<std::string>();
    }
  }
  return Multiloop::from_map(CombinatorialMap::from_cycles(cycles, true), orientation, labels);
}

Multiloop multiloop_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error("BadJson", e.what());
  }
  return multiloop_from_json(j);
}

Json multiloop_to_json(const Multiloop& m) {
  Json j;
  j["sigma"] = m.map().vertices();
  j["orientation"] = m.orientation();
  Json labels = Json::object();
  for (const auto& [r, name] : m.labels()) labels[std::to_string(r)] = name;
  j["labels"] = labels;
  Json regions = Json::array();
  for (int r = 0; r < m.n_regions(); ++r)
    regions.push_back({{"index", r}, {"name", m.region_name(r)}, {"degree", m.degree(r)}, {"orbit", m.region_orbit(r)}});
  j["regions"] = regions;
  j["strands"] = m.strands();
  j["vertices"] = m.n_vertices();
  j["edges"] = m.n_edges();
  j["chi"] = m.euler_characteristic();
  j["genus"] = m.genus();
  return j;
}

RegionSet parse_region_list(const Multiloop& m, const std::string& text) {
  return RegionSet(m.n_regions(), parse_index_list(m, text));
}

std::vector<int> parse_index_list(const Multiloop& m, const std::string& text) {
  std::vector<int> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  for (const auto& item : split_commas(text)) {
    auto r = m.find_region(item);
    if (!r) throw Error("BadRegion", "no region named '" + item + "'");
    if (std::find(out.begin(), out.end(), *r) != out.end()) throw Error("BadRegion", "region '" + item + "' repeated");
    out.push_back(*r);
  }
  return out;
}

Json region_set_to_json(const Multiloop* m, const RegionSet& s) {
  Json j = Json::array();
  for (int r : s.elements()) {
    if (m)
      j.push_back(m->region_name(r));
    else
      j.push_back(r);
  }
  return j;
}

Json report_to_json(const Multiloop* m, const PinningReport& r) {
  Json j;
  j["pinning_number"] = r.pinning_number;
  auto list = [&](const std::vector<RegionSet>& sets) {
    Json a = Json::array();
    for (const auto& s : sets) a.push_back(region_set_to_json(m, s));
    return a;
  };
  j["optimal"] = list(r.optimal_sets);
  j["minimal"] = list(r.minimal_sets);
  j["forced"] = region_set_to_json(m, r.forced_regions);
  return j;
}

PlaneGraph plane_graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw Error("BadJson", "expected an object with \"vertices\" and \"edges\"");
  PlaneGraph g;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_array() || v.size() != 2) throw Error("BadJson", "a vertex is a pair of coordinates");
    g.vertices.push_back({rational_from_json(v[0]), rational_from_json(v[1])});
  }
  for (const auto& e : j.at("edges")) {
    auto ends = int_list(e, "edges");
    if (ends.size() != 2) throw Error("BadJson", "an edge is a pair of vertex indices");
    int n = static_cast<int>(g.vertices.size());
    if (ends[0] < 0 || ends[0] >= n || ends[1] < 0 || ends[1] >= n)
      throw Error("BadGraph", "edge endpoint out of range");
    g.edges.emplace_back(ends[0], ends[1]);
  }
  return g;
}

Json plane_graph_to_json(const PlaneGraph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& p : g.vertices) j["vertices"].push_back(point_to_json(p));
  j["edges"] = Json::array();
  for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
  return j;
}

Json reduction_to_json(const Reduction& r) {
  Json j = multiloop_to_json(r.loop);
  j["graph"] = plane_graph_to_json(r.graph);
  j["epsilon"] = to_string(r.arrangement.epsilon);
  Json table = Json::array();
  for (std::size_t v = 0; v < r.vertex_region.size(); ++v)
    table.push_back({{"vertex", v}, {"region", r.vertex_region[v]}, {"name", r.loop.region_name(r.vertex_region[v])}});
  j["vertex_regions"] = table;
  Json edges = Json::array();
  for (std::size_t e = 0; e < r.edge_forced.size(); ++e)
    edges.push_back({{"edge", e}, {"forced", r.edge_forced[e]}, {"bigon", r.edge_bigon[e]}});
  j["edge_regions"] = edges;
  j["forced_pins"] = r.forced_pins.elements();
  j["expected_crossings"] = r.expected_crossings;
  Json poly = Json::array();
  for (const auto& p : r.arrangement.loop) poly.push_back(point_to_json(p));
  j["polyline"] = poly;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("FileNotFound", "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace pinloop
