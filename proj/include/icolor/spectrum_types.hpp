#pragma once

#include "icolor/coloring.hpp"

#include <map>
#include <utility>
#include <vector>

namespace icolor {

// Maximal run of consecutive integers missing from an achievable set,
// strictly between its min and max.
struct Gap {
    int first = 0;
    int last = 0;

    int size() const { return last - first + 1; }
    bool operator==(const Gap&) const = default;
};

std::vector<Gap> gaps_of(const std::vector<int>& achievable);

struct SpectrumReport {
    std::vector<int> achievable;        // sorted
    std::pair<int, int> searched_range{0, 0};
    std::vector<Gap> gaps;
    std::map<int, EdgeColoring> witnesses;
    std::vector<int> undecided;         // budget ran out at these t
    bool partial = false;
};

} // namespace icolor
