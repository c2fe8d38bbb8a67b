#pragma once

#include "icolor/graph.hpp"

#include <map>
#include <set>
#include <vector>

namespace icolor {

// Total map edge -> integer color. Colors live in Z; negative values occur
// while composing gadget colorings and are normalized away at the end.
struct EdgeColoring {
    std::map<Edge, int> colors;

    int at(const Edge& e) const;
    bool operator==(const EdgeColoring&) const = default;
};

enum class ViolationKind {
    ImproperPair,      // two incident edges share a color
    NonIntervalVertex, // incident colors distinct but not consecutive
};

struct IntervalViolation {
    ViolationKind kind;
    VertexId vertex;
    std::vector<Edge> edges;  // the offending edge pair (ImproperPair)
    std::vector<int> colors;  // the incident color multiset, sorted
};

// Empty result iff c is an interval coloring of g: at every vertex the
// incident colors are pairwise distinct and consecutive. All violations are
// collected, not just the first. A coloring that is not total on g (or colors
// unknown edges) throws ColoringError instead.
std::vector<IntervalViolation> verify_interval(const Graph& g, const EdgeColoring& c);

bool is_interval(const Graph& g, const EdgeColoring& c);

struct Palette {
    std::set<int> colors;
    int min = 0;
    int max = 0;

    bool spans_range() const {
        return colors.empty() ||
               static_cast<int>(colors.size()) == max - min + 1;
    }
};

// The set of colors used on g, with its span. Throws on partial colorings.
Palette palette(const Graph& g, const EdgeColoring& c);

// c + q on every edge.
EdgeColoring shift(const EdgeColoring& c, int q);

// e -> (min c + max c) - c(e); involution, preserves the interval property.
EdgeColoring mirror(const EdgeColoring& c);

// Shift so the minimum color is 1. Empty colorings pass through.
EdgeColoring normalized(const EdgeColoring& c);

} // namespace icolor
