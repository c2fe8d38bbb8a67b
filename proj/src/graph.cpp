#include "icolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace icolor {

Edge::Edge(VertexId u, VertexId v) {
    if (u == v)
        throw GraphError("self-loop at vertex '" + u + "'");
    if (u < v) {
        a = std::move(u);
        b = std::move(v);
    } else {
        a = std::move(v);
        b = std::move(u);
    }
}

Graph Graph::build(std::vector<VertexId> vertices,
                   std::vector<std::pair<VertexId, VertexId>> edge_pairs,
                   std::map<VertexId, std::string> roles,
                   std::map<Edge, std::string> edge_tags) {
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 1])
            throw GraphError("duplicate vertex '" + vertices[i] + "'");
    g.vertices_ = std::move(vertices);

    std::set<Edge> seen;
    for (auto& [u, v] : edge_pairs) {
        Edge e(u, v); // rejects self-loops
        if (!std::binary_search(g.vertices_.begin(), g.vertices_.end(), e.a))
            throw GraphError("edge endpoint '" + e.a + "' is not a vertex");
        if (!std::binary_search(g.vertices_.begin(), g.vertices_.end(), e.b))
            throw GraphError("edge endpoint '" + e.b + "' is not a vertex");
        if (!seen.insert(e).second)
            throw GraphError("duplicate edge " + e.key());
    }
    g.edges_.assign(seen.begin(), seen.end());

    for (const auto& [v, role] : roles)
        if (!g.has_vertex(v))
            throw GraphError("role for unknown vertex '" + v + "'");
    for (const auto& [e, tag] : edge_tags)
        if (!seen.count(e))
            throw GraphError("tag for unknown edge " + e.key());
    g.roles_ = std::move(roles);
    g.edge_tags_ = std::move(edge_tags);

    for (const auto& e : g.edges_) {
        g.incident_[e.a].push_back(e);
        g.incident_[e.b].push_back(e);
    }
    return g;
}

bool Graph::has_vertex(const VertexId& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::degree(const VertexId& v) const {
    if (!has_vertex(v))
        throw GraphError("degree of unknown vertex '" + v + "'");
    auto it = incident_.find(v);
    return it == incident_.end() ? 0 : static_cast<int>(it->second.size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& [v, inc] : incident_)
        d = std::max(d, static_cast<int>(inc.size()));
    return d;
}

const std::vector<Edge>& Graph::incident(const VertexId& v) const {
    static const std::vector<Edge> none;
    if (!has_vertex(v))
        throw GraphError("incident edges of unknown vertex '" + v + "'");
    auto it = incident_.find(v);
    return it == incident_.end() ? none : it->second;
}

bool Graph::is_connected() const {
    return components().size() <= 1;
}

std::vector<std::vector<VertexId>> Graph::components() const {
    std::vector<std::vector<VertexId>> out;
    std::set<VertexId> visited;
    for (const auto& start : vertices_) {
        if (visited.count(start))
            continue;
        std::vector<VertexId> comp;
        std::deque<VertexId> queue{start};
        visited.insert(start);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            auto it = incident_.find(v);
            if (it == incident_.end())
                continue;
            for (const Edge& e : it->second) {
                const VertexId& w = (e.a == v) ? e.b : e.a;
                if (visited.insert(w).second)
                    queue.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Bipartition Graph::bipartition() const {
    Bipartition result;
    std::map<VertexId, VertexId> parent;
    std::map<VertexId, int> side;

    for (const auto& start : vertices_) {
        if (side.count(start))
            continue;
        side[start] = 0;
        std::deque<VertexId> queue{start};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            auto it = incident_.find(v);
            if (it == incident_.end())
                continue;
            for (const Edge& e : it->second) {
                const VertexId& w = (e.a == v) ? e.b : e.a;
                auto ws = side.find(w);
                if (ws == side.end()) {
                    side[w] = 1 - side[v];
                    parent[w] = v;
                    queue.push_back(w);
                } else if (ws->second == side[v]) {
                    // Odd closed walk: v's root path + w's root path + edge vw.
                    auto path_to_root = [&](VertexId x) {
                        std::vector<VertexId> p{x};
                        while (parent.count(p.back()))
                            p.push_back(parent.at(p.back()));
                        return p;
                    };
                    std::vector<VertexId> pv = path_to_root(v);
                    std::vector<VertexId> pw = path_to_root(w);
                    // Trim to the lowest common ancestor.
                    while (pv.size() >= 2 && pw.size() >= 2 &&
                           pv[pv.size() - 1] == pw[pw.size() - 1] &&
                           pv[pv.size() - 2] == pw[pw.size() - 2]) {
                        pv.pop_back();
                        pw.pop_back();
                    }
                    result.bipartite = false;
                    result.odd_cycle.assign(pv.begin(), pv.end());
                    result.odd_cycle.insert(result.odd_cycle.end(),
                                            pw.rbegin() + 1, pw.rend());
                    result.odd_cycle.push_back(v);
                    return result;
                }
            }
        }
    }
    result.bipartite = true;
    result.side = std::move(side);
    return result;
}

Graph Graph::edge_subgraph(const std::vector<Edge>& edges) const {
    std::set<VertexId> verts;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::map<Edge, std::string> tags;
    for (const Edge& e : edges) {
        if (!has_edge(e))
            throw GraphError("subgraph edge " + e.key() + " not in graph");
        verts.insert(e.a);
        verts.insert(e.b);
        pairs.emplace_back(e.a, e.b);
        auto it = edge_tags_.find(e);
        if (it != edge_tags_.end())
            tags.emplace(*it);
    }
    std::map<VertexId, std::string> roles;
    for (const auto& v : verts) {
        auto it = roles_.find(v);
        if (it != roles_.end())
            roles.emplace(*it);
    }
    return build(std::vector<VertexId>(verts.begin(), verts.end()),
                 std::move(pairs), std::move(roles), std::move(tags));
}

namespace {

std::string merge_tags(const std::string& x, const std::string& y) {
    if (x == y || y.empty())
        return x;
    if (x.empty())
        return y;
    return std::min(x, y) + "+" + std::max(x, y);
}

} // namespace

GlueResult glue_edges(const Graph& g1, const Edge& e1,
                      const Graph& g2, const Edge& e2,
                      const std::pair<VertexId, VertexId>& onto) {
    if (!g1.has_edge(e1))
        throw GraphError("glue: edge " + e1.key() + " not in first graph");
    if (!g2.has_edge(e2))
        throw GraphError("glue: edge " + e2.key() + " not in second graph");
    for (const auto& v : g2.vertices())
        if (g1.has_vertex(v))
            throw GraphError("glue: graphs share vertex '" + v + "'");

    const auto& [from2, to1] = onto;
    if (from2 != e2.a && from2 != e2.b)
        throw GraphError("glue: '" + from2 + "' is not an endpoint of " + e2.key());
    if (to1 != e1.a && to1 != e1.b)
        throw GraphError("glue: '" + to1 + "' is not an endpoint of " + e1.key());
    const VertexId& other2 = (from2 == e2.a) ? e2.b : e2.a;
    const VertexId& other1 = (to1 == e1.a) ? e1.b : e1.a;

    std::map<VertexId, VertexId> vmap;
    for (const auto& v : g2.vertices())
        vmap[v] = v;
    vmap[from2] = to1;
    vmap[other2] = other1;

    std::vector<VertexId> vertices = g1.vertices();
    for (const auto& v : g2.vertices())
        if (v != from2 && v != other2)
            vertices.push_back(v);

    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const Edge& e : g1.edges())
        pairs.emplace_back(e.a, e.b);
    for (const Edge& e : g2.edges())
        if (e != e2)
            pairs.emplace_back(vmap.at(e.a), vmap.at(e.b));

    std::map<VertexId, std::string> roles = g1.roles();
    for (const auto& [v, role] : g2.roles()) {
        auto& slot = roles[vmap.at(v)];
        slot = merge_tags(slot, role);
    }

    std::map<Edge, std::string> tags = g1.edge_tags();
    for (const auto& [e, tag] : g2.edge_tags()) {
        Edge mapped(vmap.at(e.a), vmap.at(e.b));
        auto& slot = tags[mapped];
        slot = merge_tags(slot, tag);
    }

    GlueResult result;
    result.graph = Graph::build(std::move(vertices), std::move(pairs),
                                std::move(roles), std::move(tags));
    result.g2_vertex_map = std::move(vmap);
    return result;
}

} // namespace icolor
