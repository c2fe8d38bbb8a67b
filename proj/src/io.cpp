#include "icolor/io.hpp"

#include <fstream>
#include <sstream>

namespace icolor {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    auto& edges = j["edges"] = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.a, e.b});
    j["roles"] = json::object();
    for (const auto& [v, role] : g.roles())
        j["roles"][v] = role;
    j["edge_tags"] = json::object();
    for (const auto& [e, tag] : g.edge_tags())
        j["edge_tags"][e.key()] = tag;
    return j;
}

Edge edge_from_key(const std::string& key, const Graph& g) {
    auto pos = key.find("--");
    if (pos == std::string::npos)
        throw IoError("malformed edge key '" + key + "' (expected \"u--v\")");
    Edge e(key.substr(0, pos), key.substr(pos + 2));
    if (!g.has_edge(e))
        throw IoError("edge key '" + key + "' names an edge not in the graph");
    return e;
}

Graph graph_from_json(const json& j) {
    try {
        std::vector<VertexId> vertices = j.at("vertices").get<std::vector<VertexId>>();
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const auto& pair : j.at("edges")) {
            if (!pair.is_array() || pair.size() != 2)
                throw IoError("each edge must be a two-element array");
            edges.emplace_back(pair[0].get<VertexId>(), pair[1].get<VertexId>());
        }
        std::map<VertexId, std::string> roles;
        if (j.contains("roles"))
            for (const auto& [v, role] : j.at("roles").items())
                roles[v] = role.get<std::string>();

        // Tags need the vertex set to resolve "u--v" keys; build first.
        Graph bare = Graph::build(vertices, edges, roles, {});
        std::map<Edge, std::string> tags;
        if (j.contains("edge_tags"))
            for (const auto& [key, tag] : j.at("edge_tags").items())
                tags[edge_from_key(key, bare)] = tag.get<std::string>();
        return Graph::build(std::move(vertices), std::move(edges),
                            std::move(roles), std::move(tags));
    } catch (const json::exception& e) {
        throw IoError(std::string("bad graph JSON: ") + e.what());
    }
}

json coloring_to_json(const EdgeColoring& c) {
    json colors = json::object();
    for (const auto& [e, col] : c.colors)
        colors[e.key()] = col;
    return json{{"colors", colors}};
}

EdgeColoring coloring_from_json(const json& j, const Graph& g) {
    EdgeColoring c;
    try {
        for (const auto& [key, col] : j.at("colors").items())
            c.colors[edge_from_key(key, g)] = col.get<int>();
    } catch (const json::exception& e) {
        throw IoError(std::string("bad coloring JSON: ") + e.what());
    }
    return c;
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out + "\"";
}

std::string shape_for_role(const std::string& role) {
    // Named gadget vertices are boxes; set membership tags like "V0" are
    // circles. A role containing '.' or known set names counts as a member.
    static const char* members[] = {"V0", "Vl", "Vr", "Ur", "Ud"};
    for (const char* m : members)
        if (role == m || role.find(std::string(m) + ".") != std::string::npos)
            return "circle";
    return "box";
}

} // namespace

std::string to_dot(const Graph& g, const std::optional<EdgeColoring>& c) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const VertexId& v : g.vertices()) {
        out << "  " << dot_quote(v);
        auto it = g.roles().find(v);
        if (it != g.roles().end())
            out << " [shape=" << shape_for_role(it->second)
                << ", label=" << dot_quote(it->second) << "]";
        out << ";\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << dot_quote(e.a) << " -- " << dot_quote(e.b);
        std::vector<std::string> attrs;
        auto tag = g.edge_tags().find(e);
        if (tag != g.edge_tags().end() &&
            tag->second.find("pendant") != std::string::npos)
            attrs.push_back("style=dashed");
        if (c)
            attrs.push_back("label=\"" + std::to_string(c->at(e)) + "\"");
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i)
                out << (i ? ", " : "") << attrs[i];
            out << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw IoError("cannot parse " + path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write " + path.string());
    out << text;
}

json spectrum_report_to_json(const SpectrumReport& report) {
    json j;
    j["achievable"] = report.achievable;
    j["searched_range"] = {report.searched_range.first, report.searched_range.second};
    auto& gaps = j["gaps"] = json::array();
    for (const Gap& g : report.gaps)
        gaps.push_back({{"first", g.first}, {"last", g.last}, {"size", g.size()}});
    auto& witnesses = j["witnesses"] = json::object();
    for (const auto& [t, c] : report.witnesses)
        witnesses[std::to_string(t)] = coloring_to_json(c);
    j["undecided"] = report.undecided;
    j["partial"] = report.partial;
    return j;
}

json decomposition_to_json(const Decomposition& d) {
    json parts = json::array();
    for (const auto& part : d.parts) {
        json edges = json::array();
        for (const Edge& e : part.edges)
            edges.push_back({e.a, e.b});
        parts.push_back({{"edges", edges}, {"coloring", coloring_to_json(part.coloring)}});
    }
    return json{{"parts", parts}};
}

} // namespace icolor
