#pragma once

#include "icolor/coloring.hpp"
#include "icolor/graph.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace icolor {

// Graph JSON:
//   {"vertices":[...], "edges":[["u","v"],...],
//    "roles":{"u":"v_l",...}, "edge_tags":{"u--v":"pendant",...}}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Coloring JSON: {"colors": {"u--v": 9, ...}} keyed by sorted endpoints.
nlohmann::json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const nlohmann::json& j, const Graph& g);

// DOT export. Named role vertices are boxes, set members circles, everything
// else ellipses; pendant-tagged edges dashed. Colors become edge labels.
std::string to_dot(const Graph& g,
                   const std::optional<EdgeColoring>& c = std::nullopt);

nlohmann::json load_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Splits "u--v" back into an edge of g.
Edge edge_from_key(const std::string& key, const Graph& g);

} // namespace icolor

#include "icolor/spectrum_types.hpp"
#include "icolor/thickness.hpp"

namespace icolor {

nlohmann::json spectrum_report_to_json(const SpectrumReport& report);
nlohmann::json decomposition_to_json(const Decomposition& d);

} // namespace icolor
