#pragma once

#include "icolor/coloring.hpp"
#include "icolor/graph.hpp"
#include "icolor/spectrum.hpp"

#include <optional>
#include <vector>

namespace icolor {

// Interval coloring of a forest: per component, the root's edges take
// 1..deg(root) and each child edge under a parent edge colored c takes
// c+1..c+deg-1. Throws on cyclic input.
EdgeColoring color_forest(const Graph& g);

// Interval coloring of a regular bipartite graph with exactly max_degree
// colors, by repeated perfect matching extraction. Throws when the graph is
// not bipartite or not regular.
EdgeColoring color_regular_bipartite(const Graph& g);

// Interval coloring of a graph whose components are independently interval
// colored: each part keeps its own normalization (colorings of vertex-
// disjoint unions compose freely).
EdgeColoring union_coloring(const Graph& g, const std::vector<EdgeColoring>& per_component);

struct DecompositionPart {
    std::vector<Edge> edges;
    EdgeColoring coloring;
};

// Edge partition into interval-colored parts.
struct Decomposition {
    std::vector<DecompositionPart> parts;
};

// Degeneracy (max over subgraphs of the minimum degree) plus a removal order
// in which every vertex has at most `degeneracy` neighbors later on.
struct DegeneracyResult {
    int degeneracy = 0;
    std::vector<VertexId> order;
};

DegeneracyResult degeneracy_order(const Graph& g);

// Constructive interval-thickness upper bound. Tries to certify the whole
// graph interval colorable first (forest / regular bipartite shortcuts, then
// a budgeted exact search on small graphs); otherwise splits into at most
// 2 * degeneracy forests via pseudoforest classes and colors each part.
// Every returned part is certified by the verifier.
Decomposition decompose(const Graph& g, const SearchOptions& opt = {});

enum class ThetaStatus { Exact, AboveKMax, Undecided };

struct ThetaResult {
    ThetaStatus status = ThetaStatus::Undecided;
    int value = 0; // set when status == Exact
};

// Exhaustive interval thickness for small graphs: tries every partition of
// the edge set into at most k parts for k = 1..k_max. Budget exhaustion
// yields Undecided.
ThetaResult exact_theta_small(const Graph& g, int k_max, const SearchOptions& opt = {});

} // namespace icolor
