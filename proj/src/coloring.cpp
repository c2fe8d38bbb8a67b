#include "icolor/coloring.hpp"

#include <algorithm>
#include <limits>

namespace icolor {

int EdgeColoring::at(const Edge& e) const {
    auto it = colors.find(e);
    if (it == colors.end())
        throw ColoringError("no color for edge " + e.key());
    return it->second;
}

namespace {

void require_total(const Graph& g, const EdgeColoring& c) {
    for (const Edge& e : g.edges())
        if (!c.colors.count(e))
            throw ColoringError("partial coloring: edge " + e.key() + " is uncolored");
    if (c.colors.size() != g.edge_count())
        for (const auto& [e, col] : c.colors)
            if (!g.has_edge(e))
                throw ColoringError("coloring mentions unknown edge " + e.key());
}

} // namespace

std::vector<IntervalViolation> verify_interval(const Graph& g, const EdgeColoring& c) {
    require_total(g, c);
    std::vector<IntervalViolation> out;
    for (const VertexId& v : g.vertices()) {
        const auto& inc = g.incident(v);
        if (inc.empty())
            continue;
        std::vector<std::pair<int, Edge>> star;
        star.reserve(inc.size());
        for (const Edge& e : inc)
            star.emplace_back(c.at(e), e);
        std::sort(star.begin(), star.end());

        bool distinct = true;
        for (std::size_t i = 1; i < star.size(); ++i) {
            if (star[i].first == star[i - 1].first) {
                distinct = false;
                IntervalViolation viol;
                viol.kind = ViolationKind::ImproperPair;
                viol.vertex = v;
                viol.edges = {star[i - 1].second, star[i].second};
                viol.colors = {star[i].first, star[i].first};
                out.push_back(std::move(viol));
            }
        }
        if (distinct && star.back().first - star.front().first + 1 !=
                            static_cast<int>(star.size())) {
            IntervalViolation viol;
            viol.kind = ViolationKind::NonIntervalVertex;
            viol.vertex = v;
            for (const auto& [col, e] : star)
                viol.colors.push_back(col);
            out.push_back(std::move(viol));
        }
    }
    return out;
}

bool is_interval(const Graph& g, const EdgeColoring& c) {
    return verify_interval(g, c).empty();
}

Palette palette(const Graph& g, const EdgeColoring& c) {
    require_total(g, c);
    Palette p;
    for (const Edge& e : g.edges())
        p.colors.insert(c.at(e));
    if (!p.colors.empty()) {
        p.min = *p.colors.begin();
        p.max = *p.colors.rbegin();
    }
    return p;
}

EdgeColoring shift(const EdgeColoring& c, int q) {
    EdgeColoring out;
    for (const auto& [e, col] : c.colors)
        out.colors.emplace(e, col + q);
    return out;
}

EdgeColoring mirror(const EdgeColoring& c) {
    if (c.colors.empty())
        return c;
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const auto& [e, col] : c.colors) {
        lo = std::min(lo, col);
        hi = std::max(hi, col);
    }
    EdgeColoring out;
    for (const auto& [e, col] : c.colors)
        out.colors.emplace(e, lo + hi - col);
    return out;
}

EdgeColoring normalized(const EdgeColoring& c) {
    if (c.colors.empty())
        return c;
    int lo = std::numeric_limits<int>::max();
    for (const auto& [e, col] : c.colors)
        lo = std::min(lo, col);
    return shift(c, 1 - lo);
}

} // namespace icolor
