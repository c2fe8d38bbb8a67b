#include "icolor/thickness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace icolor {

namespace {

// Neighbors of v in sorted order, paired with the connecting edge.
std::vector<std::pair<VertexId, Edge>> sorted_neighbors(const Graph& g, const VertexId& v) {
    std::vector<std::pair<VertexId, Edge>> out;
    for (const Edge& e : g.incident(v))
        out.emplace_back(e.a == v ? e.b : e.a, e);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

EdgeColoring color_forest(const Graph& g) {
    if (g.edge_count() + g.components().size() != g.vertex_count())
        throw GraphError("color_forest: input graph has a cycle");

    EdgeColoring c;
    std::set<VertexId> visited;
    for (const VertexId& root : g.vertices()) {
        if (visited.count(root))
            continue;
        // BFS from the smallest identifier of each component.
        visited.insert(root);
        std::deque<std::pair<VertexId, int>> queue; // (vertex, parent edge color)
        int next = 1;
        for (const auto& [w, e] : sorted_neighbors(g, root)) {
            c.colors.emplace(e, next++);
            visited.insert(w);
            queue.emplace_back(w, next - 1);
        }
        while (!queue.empty()) {
            auto [v, parent_color] = queue.front();
            queue.pop_front();
            int child_color = parent_color + 1;
            for (const auto& [w, e] : sorted_neighbors(g, v)) {
                if (visited.count(w))
                    continue; // the parent (forests have no cross edges)
                visited.insert(w);
                c.colors.emplace(e, child_color++);
                queue.emplace_back(w, child_color - 1);
            }
        }
    }
    return c;
}

namespace {

// Maximum bipartite matching by augmenting paths, restricted to alive edges.
struct Matcher {
    const std::vector<std::vector<std::pair<int, int>>>& adj; // left -> (right, edge)
    const std::vector<bool>& alive;
    std::vector<int> match_left, match_right; // partner indices, -1 free
    std::vector<int> match_edge_right;        // edge used at the right vertex
    std::vector<bool> seen;

    Matcher(const std::vector<std::vector<std::pair<int, int>>>& adj_,
            const std::vector<bool>& alive_, int n_left, int n_right)
        : adj(adj_), alive(alive_), match_left(n_left, -1),
          match_right(n_right, -1), match_edge_right(n_right, -1),
          seen(n_right, false) {}

    bool augment(int l) {
        for (const auto& [r, e] : adj[l]) {
            if (!alive[e] || seen[r])
                continue;
            seen[r] = true;
            if (match_right[r] < 0 || augment(match_right[r])) {
                match_left[l] = r;
                match_right[r] = l;
                match_edge_right[r] = e;
                return true;
            }
        }
        return false;
    }

    int solve() {
        int size = 0;
        for (int l = 0; l < static_cast<int>(match_left.size()); ++l) {
            std::fill(seen.begin(), seen.end(), false);
            if (augment(l))
                ++size;
        }
        return size;
    }
};

} // namespace

EdgeColoring color_regular_bipartite(const Graph& g) {
    Bipartition bip = g.bipartition();
    if (!bip.bipartite)
        throw GraphError("color_regular_bipartite: graph is not bipartite");
    const int delta = g.max_degree();
    for (const VertexId& v : g.vertices())
        if (g.degree(v) != delta)
            throw GraphError("color_regular_bipartite: graph is not regular "
                             "(vertex '" + v + "' has degree " +
                             std::to_string(g.degree(v)) + ", expected " +
                             std::to_string(delta) + ")");

    // Index left/right sides and edges.
    std::map<VertexId, int> left_id, right_id;
    for (const VertexId& v : g.vertices())
        (bip.side.at(v) == 0 ? left_id : right_id).emplace(v, 0);
    int nl = 0, nr = 0;
    for (auto& [v, id] : left_id)
        id = nl++;
    for (auto& [v, id] : right_id)
        id = nr++;

    std::vector<std::vector<std::pair<int, int>>> adj(nl);
    const auto& edges = g.edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const VertexId& l = bip.side.at(edges[e].a) == 0 ? edges[e].a : edges[e].b;
        const VertexId& r = bip.side.at(edges[e].a) == 0 ? edges[e].b : edges[e].a;
        adj[left_id.at(l)].emplace_back(right_id.at(r), e);
    }

    EdgeColoring c;
    std::vector<bool> alive(edges.size(), true);
    for (int round = 1; round <= delta; ++round) {
        Matcher matcher(adj, alive, nl, nr);
        int size = matcher.solve();
        if (size != nl || size != nr)
            throw GraphError("color_regular_bipartite: no perfect matching on "
                             "the remaining graph (round " + std::to_string(round) + ")");
        for (int r = 0; r < nr; ++r) {
            int e = matcher.match_edge_right[r];
            c.colors.emplace(edges[e], round);
            alive[e] = false;
        }
    }
    return c;
}

EdgeColoring union_coloring(const Graph& g,
                            const std::vector<EdgeColoring>& per_component) {
    auto comps = g.components();
    if (comps.size() != per_component.size())
        throw GraphError("union_coloring: expected one coloring per component");
    EdgeColoring total;
    for (const auto& part : per_component) {
        EdgeColoring norm = normalized(part);
        for (const auto& [e, col] : norm.colors)
            if (!total.colors.emplace(e, col).second)
                throw GraphError("union_coloring: components overlap on edge " + e.key());
    }
    return total;
}

DegeneracyResult degeneracy_order(const Graph& g) {
    DegeneracyResult result;
    std::map<VertexId, int> deg;
    std::set<std::pair<int, VertexId>> queue;
    for (const VertexId& v : g.vertices()) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::set<VertexId> removed;
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        result.degeneracy = std::max(result.degeneracy, d);
        result.order.push_back(v);
        removed.insert(v);
        for (const Edge& e : g.incident(v)) {
            const VertexId& w = (e.a == v) ? e.b : e.a;
            if (removed.count(w))
                continue;
            queue.erase({deg[w], w});
            --deg[w];
            queue.emplace(deg[w], w);
        }
    }
    return result;
}

namespace {

enum class Certify { Yes, No, Unknown };

// Is this (possibly disconnected) graph interval colorable? Searches each
// component exactly, within the budget.
std::pair<Certify, EdgeColoring> certify_colorable(const Graph& g,
                                                   const SearchOptions& opt) {
    std::vector<EdgeColoring> per_component;
    for (const auto& comp_vertices : g.components()) {
        std::set<VertexId> in(comp_vertices.begin(), comp_vertices.end());
        std::vector<Edge> comp_edges;
        for (const Edge& e : g.edges())
            if (in.count(e.a))
                comp_edges.push_back(e);
        if (comp_edges.empty()) {
            per_component.push_back({});
            continue;
        }
        Graph comp = g.edge_subgraph(comp_edges);
        bool undecided = false;
        bool found = false;
        for (int t = comp.max_degree();
             t <= static_cast<int>(comp.edge_count()) && !found; ++t) {
            SolveResult r = find_coloring(comp, t, opt);
            if (r.status == SolveStatus::Found) {
                per_component.push_back(std::move(*r.coloring));
                found = true;
            } else if (r.status == SolveStatus::Timeout) {
                undecided = true;
            }
        }
        if (!found)
            return {undecided ? Certify::Unknown : Certify::No, {}};
    }
    return {Certify::Yes, union_coloring(g, per_component)};
}

bool is_forest(const Graph& g) {
    return g.edge_count() + g.components().size() == g.vertex_count();
}

bool is_regular(const Graph& g) {
    if (g.vertex_count() == 0)
        return true;
    int d = g.max_degree();
    for (const VertexId& v : g.vertices())
        if (g.degree(v) != d)
            return false;
    return true;
}

void check_partition(const Graph& g, const Decomposition& d) {
    std::set<Edge> covered;
    for (const auto& part : d.parts) {
        for (const Edge& e : part.edges)
            if (!covered.insert(e).second)
                throw GraphError("decompose: parts overlap on " + e.key());
        Graph sub = g.edge_subgraph(part.edges);
        if (!verify_interval(sub, part.coloring).empty())
            throw GraphError("decompose: a part failed interval verification");
    }
    if (covered.size() != g.edge_count())
        throw GraphError("decompose: parts do not cover the edge set");
}

} // namespace

Decomposition decompose(const Graph& g, const SearchOptions& opt) {
    Decomposition result;
    if (g.edge_count() == 0)
        return result;

    auto single_part = [&](EdgeColoring c) {
        result.parts.push_back({g.edges(), std::move(c)});
        check_partition(g, result);
        return result;
    };

    if (is_forest(g))
        return single_part(color_forest(g));
    if (is_regular(g) && g.bipartition().bipartite)
        return single_part(color_regular_bipartite(g));
    if (g.edge_count() <= 16) {
        SearchOptions capped = opt;
        if (!capped.budget.max_nodes)
            capped.budget.max_nodes = 200000;
        auto [certified, coloring] = certify_colorable(g, capped);
        if (certified == Certify::Yes)
            return single_part(std::move(coloring));
    }

    // Degeneracy pipeline: orient edges along the removal order, split each
    // vertex's outgoing edges into degeneracy many pseudoforest classes, then
    // evict one edge per cycle into a per-class extra forest.
    DegeneracyResult degen = degeneracy_order(g);
    std::map<VertexId, int> position;
    for (std::size_t i = 0; i < degen.order.size(); ++i)
        position[degen.order[i]] = static_cast<int>(i);

    const int classes = std::max(1, degen.degeneracy);
    std::vector<std::vector<Edge>> class_edges(classes);
    for (const VertexId& v : g.vertices()) {
        int slot = 0;
        for (const auto& [w, e] : sorted_neighbors(g, v))
            if (position.at(v) < position.at(w))
                class_edges[slot++].push_back(e);
    }

    std::vector<std::vector<Edge>> parts_edges;
    for (auto& edges : class_edges) {
        if (edges.empty())
            continue;
        // Strip leaves; whatever remains is a disjoint union of cycles.
        std::map<VertexId, int> deg;
        for (const Edge& e : edges) {
            ++deg[e.a];
            ++deg[e.b];
        }
        std::set<Edge> remaining(edges.begin(), edges.end());
        std::deque<VertexId> leaves;
        for (const auto& [v, d] : deg)
            if (d == 1)
                leaves.push_back(v);
        std::map<VertexId, std::vector<Edge>> inc;
        for (const Edge& e : edges) {
            inc[e.a].push_back(e);
            inc[e.b].push_back(e);
        }
        while (!leaves.empty()) {
            VertexId v = leaves.front();
            leaves.pop_front();
            for (const Edge& e : inc[v]) {
                if (!remaining.count(e))
                    continue;
                remaining.erase(e);
                const VertexId& w = (e.a == v) ? e.b : e.a;
                if (--deg[w] == 1)
                    leaves.push_back(w);
                --deg[v];
            }
        }
        // One eviction per cycle: the smallest edge of each remaining cycle.
        std::vector<Edge> evicted;
        std::set<VertexId> seen_cycle;
        for (const Edge& start : remaining) {
            if (seen_cycle.count(start.a))
                continue;
            Edge smallest = start;
            VertexId v = start.a;
            seen_cycle.insert(v);
            Edge prev = start;
            VertexId cur = start.b;
            while (cur != start.a) {
                seen_cycle.insert(cur);
                for (const Edge& e : inc[cur]) {
                    if (e == prev || !remaining.count(e))
                        continue;
                    smallest = std::min(smallest, e);
                    prev = e;
                    cur = (e.a == cur) ? e.b : e.a;
                    break;
                }
            }
            evicted.push_back(smallest);
        }
        std::vector<Edge> kept;
        std::set<Edge> evicted_set(evicted.begin(), evicted.end());
        for (const Edge& e : edges)
            if (!evicted_set.count(e))
                kept.push_back(e);
        if (!kept.empty())
            parts_edges.push_back(std::move(kept));
        if (!evicted.empty())
            parts_edges.push_back(std::move(evicted));
    }

    for (auto& edges : parts_edges) {
        Graph sub = g.edge_subgraph(edges);
        result.parts.push_back({std::move(edges), color_forest(sub)});
    }
    check_partition(g, result);
    return result;
}

ThetaResult exact_theta_small(const Graph& g, int k_max, const SearchOptions& opt) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m == 0)
        return {ThetaStatus::Exact, 0};
    if (m > 20)
        throw GraphError("exact_theta_small is meant for graphs with few edges");

    // Tri-state memo per edge subset.
    std::map<std::uint32_t, Certify> memo;
    auto colorable = [&](std::uint32_t subset) {
        auto it = memo.find(subset);
        if (it != memo.end())
            return it->second;
        std::vector<Edge> part;
        for (int i = 0; i < m; ++i)
            if (subset >> i & 1)
                part.push_back(edges[i]);
        auto [certified, coloring] = certify_colorable(g.edge_subgraph(part), opt);
        memo.emplace(subset, certified);
        return certified;
    };

    for (int k = 1; k <= k_max; ++k) {
        bool any_unknown = false;
        // Assign each edge a block in 0..k-1; edge 0 pinned to block 0 and
        // blocks introduced in order (restricted growth), so each partition
        // appears once.
        std::vector<std::uint32_t> blocks(k, 0);
        std::function<bool(int, int)> place = [&](int e, int used_blocks) {
            if (e == m) {
                bool unknown = false;
                for (int b = 0; b < used_blocks; ++b) {
                    Certify c = colorable(blocks[b]);
                    if (c == Certify::No)
                        return false;
                    if (c == Certify::Unknown)
                        unknown = true;
                }
                if (unknown) {
                    any_unknown = true;
                    return false;
                }
                return true;
            }
            int limit = std::min(used_blocks + 1, k);
            for (int b = 0; b < limit; ++b) {
                blocks[b] |= std::uint32_t(1) << e;
                if (place(e + 1, std::max(used_blocks, b + 1)))
                    return true;
                blocks[b] &= ~(std::uint32_t(1) << e);
            }
            return false;
        };
        if (place(0, 0))
            return {ThetaStatus::Exact, k};
        if (any_unknown)
            return {ThetaStatus::Undecided, 0};
    }
    return {ThetaStatus::AboveKMax, 0};
}

} // namespace icolor
