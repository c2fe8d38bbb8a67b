#pragma once

// Test-only reference implementations, kept independent of the library's
// verification and search code on purpose.

#include "icolor/coloring.hpp"
#include "icolor/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace testsupport {

// Interval check written from the definition, sharing nothing with
// icolor::verify_interval.
inline bool naive_is_interval(const icolor::Graph&, const std::map<icolor::Edge, int>& colors) {
    std::map<icolor::VertexId, std::vector<int>> at;
    for (const auto& [e, c] : colors) {
        at[e.a].push_back(c);
        at[e.b].push_back(c);
    }
    for (auto& [v, cs] : at) {
        std::sort(cs.begin(), cs.end());
        for (std::size_t i = 1; i < cs.size(); ++i)
            if (cs[i] != cs[i - 1] + 1)
                return false;
    }
    return true;
}

// Brute-force interval spectrum: tries every map E -> [1, |E|], pruning
// branches as soon as two incident edges collide (such maps cannot become
// interval colorings).
inline std::set<int> naive_spectrum(const icolor::Graph& g) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::set<int> achievable;
    std::vector<int> colors(m, 0);

    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            std::map<icolor::Edge, int> c;
            for (int j = 0; j < m; ++j)
                c[edges[j]] = colors[j];
            if (naive_is_interval(g, c)) {
                std::set<int> used(colors.begin(), colors.end());
                achievable.insert(static_cast<int>(used.size()));
            }
            return;
        }
        for (int col = 1; col <= m; ++col) {
            bool clash = false;
            for (int j = 0; j < i && !clash; ++j)
                if (colors[j] == col &&
                    (edges[j].a == edges[i].a || edges[j].a == edges[i].b ||
                     edges[j].b == edges[i].a || edges[j].b == edges[i].b))
                    clash = true;
            if (clash)
                continue;
            colors[i] = col;
            rec(i + 1);
        }
    };
    if (m > 0)
        rec(0);
    return achievable;
}

// No-wait validity straight from the timetable definition: per participant,
// distinct and consecutive slots.
inline bool naive_no_wait(const std::vector<std::pair<std::string, std::string>>& meetings,
                          const std::vector<int>& slots) {
    std::map<std::string, std::vector<int>> busy;
    for (std::size_t i = 0; i < meetings.size(); ++i) {
        busy[meetings[i].first].push_back(slots[i]);
        busy[meetings[i].second].push_back(slots[i]);
    }
    for (auto& [who, s] : busy) {
        std::sort(s.begin(), s.end());
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i] != s[i - 1] + 1)
                return false;
    }
    return true;
}

} // namespace testsupport
