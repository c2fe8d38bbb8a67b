#pragma once

#include "icolor/coloring.hpp"
#include "icolor/graph.hpp"
#include "icolor/spectrum_types.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace icolor {

// Parameters of the pendant gadget F(b, T): T = D + 25 with D even,
// 1 <= b <= D. The graph has 2D+37 vertices and 4D-b+63 edges, is bipartite,
// and every interval coloring of it uses exactly T+1 colors.
struct FParams {
    int b = 0;
    int T = 0;

    int D() const { return T - 25; }
};

struct FBlueprint {
    FParams params;
    std::string prefix; // namespace of all vertex ids, e.g. "F0."

    VertexId v, v_prime, v_l, v_r, u, u_r, w_l, w_r, x, y;
    std::vector<VertexId> V0, Vl, Vr, Ur, Ud; // y == Ur.front()
    std::vector<Edge> pendant_edges;          // (u, Ud[i]), in Ud order
};

std::pair<Graph, FBlueprint> build_F(int b, int T, const std::string& prefix = "F.");

// The hand construction certifying F interval colorable: palette {1..T+1},
// pendant edges colored {13..12+b}. `pendant_colors`, when given, routes
// those b colors to the pendant edges in a chosen order (any bijection works,
// the pendant endpoints all have degree 1).
EdgeColoring explicit_coloring_F(const FBlueprint& bp);
EdgeColoring explicit_coloring_F(const FBlueprint& bp, std::span<const int> pendant_colors);

enum class PendantSide { Low, High };

struct PendantLawReport {
    PendantSide side;
    int c1 = 0;                     // min color used on F
    std::vector<int> pendant_colors; // sorted
    int w_l_v_l_color = 0;
};

// Classifies an interval coloring of F against the rigidity law: the pendant
// colors are either c1+{12..11+b} with c(w_l v_l) = c1+8 (low side) or
// c1+T-11-{1..b} with c(w_l v_l) = c1+T-8 (high side). A coloring fitting
// neither law throws GadgetError -- it would contradict the construction.
PendantLawReport pendant_color_law(const Graph& f, const FBlueprint& bp,
                                   const EdgeColoring& c);

// Composite gadget built from F_0 = F(k, 3k^2 d + 1) and F_j = F(1, 2jdk + 1)
// by identifying the j-th pendant edge of F_0 with the pendant edge of F_j
// (degree-1 end of F_0's pendant onto F_j's u, and vice versa).
struct BoldFParams {
    int k = 0;
    int d = 0;

    int T0() const { return 3 * k * k * d + 1; }
    int Tj(int j) const { return 2 * j * d * k + 1; }
};

struct BoldFBlueprint {
    BoldFParams params;
    FBlueprint f0;                  // ids valid in the glued graph
    std::vector<FBlueprint> fj;     // ditto, index j-1 for component j
    std::vector<Edge> glued_edges;  // glued pendant edge of component j
};

std::pair<Graph, BoldFBlueprint> build_boldF(int k, int d);

// The spectrum the construction realizes:
//   S = {T0+1}  u  U_j [T0 + Tj - 22 - k, T0 + Tj - 23]
// Exactly k gaps, each of size >= d. No witnesses are attached; use
// realize_t to materialize one.
SpectrumReport predicted_spectrum(int k, int d);

// An interval coloring of boldF(k,d) using exactly t colors, for any t in the
// predicted spectrum. t = T0+1 keeps every component inside F_0's palette;
// t in piece j mirrors component j (its pendant picks up the 13th color from
// the top) and routes pendant color p = T0 + Tj - 10 - t to it.
EdgeColoring realize_t(const Graph& f, const BoldFBlueprint& bp, int t);

} // namespace icolor
