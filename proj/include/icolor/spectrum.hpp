#pragma once

#include "icolor/coloring.hpp"
#include "icolor/graph.hpp"
#include "icolor/spectrum_types.hpp"

#include <chrono>
#include <cstdint>
#include <optional>

namespace icolor {

// Resource budget for exact searches. Unset fields mean unlimited. Node
// budgets give bit-reproducible cutoffs; wall budgets are for interactive
// use.
struct SearchBudget {
    std::optional<std::chrono::milliseconds> wall;
    std::optional<std::uint64_t> max_nodes;
};

enum class SolveStatus { Found, None, Timeout };

struct SolveResult {
    SolveStatus status = SolveStatus::None;
    std::optional<EdgeColoring> coloring; // set iff Found, normalized
    std::uint64_t nodes = 0;
};

// Variable order for the backtracking search. MinDomain picks the uncolored
// edge with the fewest feasible colors (ties by the static rank); Static
// follows the rank outright: vertices by decreasing degree, edges within a
// star by decreasing neighbor degree.
enum class SearchOrder { MinDomain, Static };

struct SearchOptions {
    SearchBudget budget;
    SearchOrder order = SearchOrder::MinDomain;
};

// Decides t-interval colorability exactly. Returns a normalized witness
// using exactly t colors, None when no such coloring exists, or Timeout when
// the budget ran out first. Throws on disconnected graphs and t < 1.
SolveResult find_coloring(const Graph& g, int t, const SearchOptions& opt = {});

// Exact spectrum over [max(degree,1), t_hi] (default t_hi = edge count; no
// color can appear on zero edges). Budget applies per t; exhausted budgets
// mark the report partial and list the undecided t.
SpectrumReport compute_spectrum(const Graph& g, std::optional<int> t_hi = {},
                                const SearchOptions& opt = {});

struct EnumerateResult {
    std::vector<EdgeColoring> colorings;
    bool exhaustive = false; // full search space covered (limit not hit, no timeout)
    bool timed_out = false;
    std::uint64_t nodes = 0;
};

// Up to `limit` distinct normalized t-interval colorings, in deterministic
// search order.
EnumerateResult enumerate_colorings(const Graph& g, int t, int limit,
                                    const SearchOptions& opt = {});

} // namespace icolor
