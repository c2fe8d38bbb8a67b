#pragma once

#include "icolor/errors.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace icolor {

// Vertices are identified by stable strings ("a", "F0.v", "F2.V0.0007").
// Identifier order drives every iteration order in the library, so all
// outputs are deterministic.
using VertexId = std::string;

// Unordered pair of distinct vertices, stored sorted.
struct Edge {
    VertexId a;
    VertexId b;

    Edge() = default;
    Edge(VertexId u, VertexId v);

    auto operator<=>(const Edge&) const = default;

    // "u--v" with sorted endpoints; used as the edge key in JSON artifacts.
    std::string key() const { return a + "--" + b; }
};

struct Bipartition {
    bool bipartite = false;
    // side: vertex -> 0/1 when bipartite.
    std::map<VertexId, int> side;
    // A closed odd walk witnessing non-bipartiteness (first == last).
    std::vector<VertexId> odd_cycle;
};

// Simple undirected graph, immutable after construction. Vertices may carry a
// role tag (gadget part names) and edges a tag ("pendant").
class Graph {
public:
    Graph() = default;

    static Graph build(std::vector<VertexId> vertices,
                       std::vector<std::pair<VertexId, VertexId>> edges,
                       std::map<VertexId, std::string> roles = {},
                       std::map<Edge, std::string> edge_tags = {});

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::map<VertexId, std::string>& roles() const { return roles_; }
    const std::map<Edge, std::string>& edge_tags() const { return edge_tags_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(const VertexId& v) const;
    bool has_edge(const Edge& e) const;

    int degree(const VertexId& v) const;
    int max_degree() const;

    // Edges incident to v, sorted.
    const std::vector<Edge>& incident(const VertexId& v) const;

    bool is_connected() const;
    Bipartition bipartition() const;

    // Connected components as vertex lists, each sorted, ordered by their
    // smallest vertex.
    std::vector<std::vector<VertexId>> components() const;

    // Subgraph spanned by the given edges (vertices are exactly their
    // endpoints); roles/tags restricted accordingly.
    Graph edge_subgraph(const std::vector<Edge>& edges) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::map<VertexId, std::string> roles_;
    std::map<Edge, std::string> edge_tags_;
    std::map<VertexId, std::vector<Edge>> incident_;
};

struct GlueResult {
    Graph graph;
    // Where each vertex of g2 ended up in the glued graph.
    std::map<VertexId, VertexId> g2_vertex_map;
};

// Identify edge e1 of g1 with edge e2 of g2 so that they become a single
// edge: `onto.first` (an endpoint of e2) merges into `onto.second` (an
// endpoint of e1), and the two remaining endpoints merge with each other.
// Merged vertices keep g1's identifiers; role/tag maps are merged, joining
// conflicting values with "+".
GlueResult glue_edges(const Graph& g1, const Edge& e1,
                      const Graph& g2, const Edge& e2,
                      const std::pair<VertexId, VertexId>& onto);

} // namespace icolor
