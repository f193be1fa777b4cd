#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pinloop/combmap.hpp"
#include "pinloop/mobidisc.hpp"
#include "pinloop/pinning.hpp"
#include "pinloop/reducer.hpp"

namespace pinloop {

using Json = nlohmann::json;

// {"sigma": [[...], ...], "orientation": [...], "labels": {"0": "A", ...}}.
// Throws Error("BadJson"), or the map validation errors.
Multiloop multiloop_from_json(const Json& j);
Multiloop multiloop_from_text(const std::string& text);
// Input fields plus derived tables (regions, strands, chi, genus, vertices).
Json multiloop_to_json(const Multiloop& m);

// Comma-separated region labels or indices; "" is the empty set.
// Throws Error("BadRegion").
RegionSet parse_region_list(const Multiloop& m, const std::string& text);
std::vector<int> parse_index_list(const Multiloop& m, const std::string& text);
Json region_set_to_json(const Multiloop* m, const RegionSet& s);
Json report_to_json(const Multiloop* m, const PinningReport& r);

// {"vertices": [["0","0"], ...], "edges": [[0,1], ...]}; coordinates are
// "p/q" strings, decimal strings or integers.
PlaneGraph plane_graph_from_json(const Json& j);
Json plane_graph_to_json(const PlaneGraph& g);
Json reduction_to_json(const Reduction& r);

std::string read_file(const std::string& path);  // Throws Error("FileNotFound")

}  // namespace pinloop
