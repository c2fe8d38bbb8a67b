#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icolor/gadgets.hpp"
#include "icolor/spectrum.hpp"

#include <set>

using namespace icolor;

namespace {

void check_degree_certificate(const Graph& g, const FBlueprint& bp) {
    const int D = bp.params.D();
    CHECK(g.degree(bp.v) == D + 26);
    CHECK(g.degree(bp.u) == D + 3);
    CHECK(g.degree(bp.v_prime) == D + 14);
    CHECK(g.degree(bp.v_l) == 8);
    CHECK(g.degree(bp.v_r) == 8);
    CHECK(g.degree(bp.w_l) == 3);
    CHECK(g.degree(bp.w_r) == 3);
    CHECK(g.degree(bp.y) == 3);
    CHECK(g.degree(bp.x) == 2);
    CHECK(g.degree(bp.u_r) == D - bp.params.b + 2);
    for (const auto* set : {&bp.V0, &bp.Vl, &bp.Vr})
        for (const auto& z : *set)
            CHECK(g.degree(z) == 2);
    for (const auto& z : bp.Ur)
        if (z != bp.y)
            CHECK(g.degree(z) == 2);
    for (const auto& z : bp.Ud)
        CHECK(g.degree(z) == 1);
}

} // namespace

TEST_CASE("F(1,27) has 41 vertices and 70 edges") {
    auto [g, bp] = build_F(1, 27);
    CHECK(g.vertex_count() == 41);
    CHECK(g.edge_count() == 70);
    CHECK(g.degree(bp.v) == 28);  // D + 26 with D = 2
    CHECK(g.degree(bp.u) == 5);   // D + 3
    check_degree_certificate(g, bp);
    CHECK(g.bipartition().bipartite);
    CHECK(g.is_connected());
    CHECK(bp.pendant_edges.size() == 1);
    CHECK(g.edge_tags().at(bp.pendant_edges[0]) == "pendant");
}

TEST_CASE("degree of v is D + 26") {
    auto [g37, bp37] = build_F(2, 37); // D = 12
    CHECK(g37.degree(bp37.v) == 38);
    check_degree_certificate(g37, bp37);

    auto [g39, bp39] = build_F(2, 39); // D = 14
    CHECK(g39.degree(bp39.v) == 40);
    check_degree_certificate(g39, bp39);
}

TEST_CASE("F parameter validation") {
    CHECK_THROWS_AS(build_F(3, 27), GadgetError);  // b > D = 2
    CHECK_THROWS_AS(build_F(1, 28), GadgetError);  // D = 3 odd
    CHECK_THROWS_AS(build_F(0, 27), GadgetError);  // b < 1
    CHECK_THROWS_AS(build_F(1, 25), GadgetError);  // D = 0
}

TEST_CASE("F counts match 2D+37 and 4D-b+63 across the parameter sweep") {
    for (int D = 2; D <= 30; D += 2) {
        for (int b : {1, (D + 1) / 2, D}) {
            auto [g, bp] = build_F(b, D + 25);
            CHECK(static_cast<int>(g.vertex_count()) == 2 * D + 37);
            CHECK(static_cast<int>(g.edge_count()) == 4 * D - b + 63);
            CHECK(g.bipartition().bipartite);
        }
    }
}

TEST_CASE("explicit coloring of F(1,27), hand-expanded") {
    auto [g, bp] = build_F(1, 27);
    EdgeColoring c = explicit_coloring_F(bp);
    CHECK(verify_interval(g, c).empty());

    CHECK(c.at(Edge(bp.v_l, bp.w_l)) == 9);
    CHECK(c.at(Edge(bp.w_l, bp.v_prime)) == 10);
    CHECK(c.at(Edge(bp.w_l, bp.x)) == 11);
    CHECK(c.at(Edge(bp.x, bp.u)) == 12);
    CHECK(c.at(Edge(bp.u, bp.Ud[0])) == 13);
    CHECK(c.at(Edge(bp.u, bp.y)) == 16);
    CHECK(c.at(Edge(bp.y, bp.u_r)) == 17);
    CHECK(c.at(Edge(bp.y, bp.w_r)) == 18);
    CHECK(c.at(Edge(bp.v_prime, bp.w_r)) == 19);
    CHECK(c.at(Edge(bp.v_r, bp.w_r)) == 20);

    for (int i = 1; i <= 7; ++i) {
        CHECK(c.at(Edge(bp.v, bp.Vl[i - 1])) == i);
        CHECK(c.at(Edge(bp.v_l, bp.Vl[i - 1])) == i + 1);
        CHECK(c.at(Edge(bp.v, bp.Vr[i - 1])) == 29 - i);
        CHECK(c.at(Edge(bp.v_r, bp.Vr[i - 1])) == 28 - i);
    }
    // U_r beyond y climbs from 13+b.
    CHECK(c.at(Edge(bp.u, bp.Ur[1])) == 14);
    CHECK(c.at(Edge(bp.u_r, bp.Ur[1])) == 15);
    CHECK(c.at(Edge(bp.u, bp.Ur[2])) == 15);
    CHECK(c.at(Edge(bp.u_r, bp.Ur[2])) == 16);

    const std::vector<std::pair<int, int>> staircase = {
        {8, 7},   {9, 8},   {10, 9},  {11, 12}, {12, 11}, {13, 14}, {14, 13},
        {15, 16}, {16, 15}, {17, 18}, {18, 17}, {19, 20}, {20, 21}, {21, 22}};
    REQUIRE(bp.V0.size() == staircase.size());
    for (std::size_t i = 0; i < staircase.size(); ++i) {
        CHECK(c.at(Edge(bp.v, bp.V0[i])) == staircase[i].first);
        CHECK(c.at(Edge(bp.v_prime, bp.V0[i])) == staircase[i].second);
    }
}

TEST_CASE("explicit coloring verifies with palette 1..T+1 across parameters") {
    for (auto [b, T] : {std::pair{1, 27}, {2, 29}, {2, 37}, {4, 33}, {7, 39}, {12, 37}}) {
        auto [g, bp] = build_F(b, T);
        EdgeColoring c = explicit_coloring_F(bp);
        CHECK(verify_interval(g, c).empty());
        Palette p = palette(g, c);
        CHECK(p.min == 1);
        CHECK(p.max == T + 1);
        CHECK(static_cast<int>(p.colors.size()) == T + 1);

        std::set<int> pendant;
        for (const Edge& e : bp.pendant_edges)
            pendant.insert(c.at(e));
        std::set<int> expected;
        for (int i = 0; i < b; ++i)
            expected.insert(13 + i);
        CHECK(pendant == expected);
    }
}

TEST_CASE("explicit coloring accepts a pendant permutation") {
    auto [g, bp] = build_F(3, 29);
    std::vector<int> order{15, 13, 14};
    EdgeColoring c = explicit_coloring_F(bp, order);
    CHECK(verify_interval(g, c).empty());
    CHECK(c.at(bp.pendant_edges[0]) == 15);
    CHECK(c.at(bp.pendant_edges[1]) == 13);
    CHECK(c.at(bp.pendant_edges[2]) == 14);

    CHECK_THROWS_AS(explicit_coloring_F(bp, std::vector<int>{13, 14}), GadgetError);
    CHECK_THROWS_AS(explicit_coloring_F(bp, std::vector<int>{13, 14, 17}), GadgetError);
}

TEST_CASE("remark reproduction on F(2,37)") {
    auto [g, bp] = build_F(2, 37);
    EdgeColoring c = explicit_coloring_F(bp);

    // Shift so the palette starts at 3: pendants sit at {15, 16}.
    EdgeColoring shifted = shift(c, 2);
    CHECK(palette(g, shifted).min == 3);
    CHECK(palette(g, shifted).max == 40);
    std::set<int> pendant{shifted.at(bp.pendant_edges[0]), shifted.at(bp.pendant_edges[1])};
    CHECK(pendant == std::set<int>{15, 16});

    // The mirror occupies the other admissible configuration {27, 28}.
    EdgeColoring mirrored = mirror(shifted);
    std::set<int> mpendant{mirrored.at(bp.pendant_edges[0]), mirrored.at(bp.pendant_edges[1])};
    CHECK(mpendant == std::set<int>{27, 28});
}

TEST_CASE("pendant color law classifies low, high, and shifted colorings") {
    auto [g, bp] = build_F(1, 27);
    EdgeColoring c = explicit_coloring_F(bp);

    PendantLawReport low = pendant_color_law(g, bp, c);
    CHECK(low.side == PendantSide::Low);
    CHECK(low.c1 == 1);
    CHECK(low.pendant_colors == std::vector<int>{13});
    CHECK(low.w_l_v_l_color == 9);

    PendantLawReport high = pendant_color_law(g, bp, mirror(c));
    CHECK(high.side == PendantSide::High);
    CHECK(high.pendant_colors == std::vector<int>{16}); // c1 + T - 11 - 1
    CHECK(high.w_l_v_l_color == 20);                    // c1 + T - 8

    PendantLawReport moved = pendant_color_law(g, bp, shift(c, 10));
    CHECK(moved.side == PendantSide::Low);
    CHECK(moved.c1 == 11);
    CHECK(moved.pendant_colors == std::vector<int>{23});

    EdgeColoring bad = c;
    bad.colors[bp.pendant_edges[0]] = 1;
    CHECK_THROWS_AS(pendant_color_law(g, bp, bad), GadgetError);
}

TEST_CASE("sampled solver colorings of F(1,27) obey the law") {
    auto [g, bp] = build_F(1, 27);
    EnumerateResult en = enumerate_colorings(g, 28, 5);
    REQUIRE(en.colorings.size() == 5);
    for (const auto& c : en.colorings) {
        PendantLawReport law = pendant_color_law(g, bp, c);
        CHECK((law.w_l_v_l_color == 9 || law.w_l_v_l_color == 20));
    }
}

TEST_CASE("boldF(1,24) composition") {
    auto [g, bp] = build_boldF(1, 24);
    // F(1,73): 133 vertices, 254 edges; F(1,49): 85 vertices, 158 edges.
    CHECK(g.vertex_count() == 133 + 85 - 2);
    CHECK(g.edge_count() == 254 + 158 - 1);
    CHECK(g.is_connected());
    CHECK(g.bipartition().bipartite);

    REQUIRE(bp.glued_edges.size() == 1);
    const Edge& glued = bp.glued_edges[0];
    // Degree-1 end of F_0's pendant became F_1's u (degree D_1 + 3 = 27);
    // F_0's u (degree D_0 + 3 = 51) absorbed F_1's pendant end.
    std::set<int> degs{g.degree(glued.a), g.degree(glued.b)};
    CHECK(degs == std::set<int>{27, 51});
    CHECK(bp.fj[0].u == bp.f0.Ud[0]);
    CHECK(bp.fj[0].Ud[0] == bp.f0.u);
}

TEST_CASE("boldF parameter validation") {
    CHECK_THROWS_AS(build_boldF(1, 23), GadgetError); // odd
    CHECK_THROWS_AS(build_boldF(1, 22), GadgetError); // < 24
    CHECK_THROWS_AS(build_boldF(0, 24), GadgetError);
}

TEST_CASE("predicted spectrum of boldF(1,24)") {
    SpectrumReport s = predicted_spectrum(1, 24);
    CHECK(s.achievable == std::vector<int>{74, 99});
    REQUIRE(s.gaps.size() == 1);
    CHECK(s.gaps[0].first == 75);
    CHECK(s.gaps[0].last == 98);
    CHECK(s.gaps[0].size() == 24);            // = 2dk - k - 23
    CHECK(s.gaps[0].size() == 2 * 24 - 1 - 23);
}

TEST_CASE("predicted spectrum shape for k=2 and k=3") {
    for (auto [k, d] : {std::pair{2, 24}, {3, 26}}) {
        SpectrumReport s = predicted_spectrum(k, d);
        const int T0 = 3 * k * k * d + 1;
        CHECK(s.achievable.front() == T0 + 1);
        REQUIRE(static_cast<int>(s.gaps.size()) == k);
        CHECK(s.gaps[0].size() == 2 * d * k - k - 23);
        for (const Gap& gap : s.gaps)
            CHECK(gap.size() >= d);
        // One singleton plus k interval pieces of length k.
        CHECK(static_cast<int>(s.achievable.size()) == 1 + k * k);
        for (int j = 1; j <= k; ++j) {
            const int Tj = 2 * j * d * k + 1;
            for (int t = T0 + Tj - 22 - k; t <= T0 + Tj - 23; ++t)
                CHECK(std::count(s.achievable.begin(), s.achievable.end(), t) == 1);
        }
    }
}

TEST_CASE("realize_t at the all-type-1 point") {
    auto [g, bp] = build_boldF(1, 24);
    EdgeColoring c = realize_t(g, bp, 74);
    CHECK(verify_interval(g, c).empty());
    Palette p = palette(g, c);
    CHECK(p.min == 1);
    CHECK(p.max == 74);
    CHECK(static_cast<int>(p.colors.size()) == 74);

    // Type-1 containment: the component palette stays inside F_0's.
    std::set<int> f0_colors, f1_colors;
    for (const auto& [e, col] : c.colors)
        if (e.a.rfind("F0.", 0) == 0 && e.b.rfind("F0.", 0) == 0)
            f0_colors.insert(col);
    for (const VertexId& v : {bp.fj[0].v, bp.fj[0].v_prime})
        for (const Edge& e : g.incident(v))
            f1_colors.insert(c.at(e));
    for (int col : f1_colors)
        CHECK(f0_colors.count(col) == 1);
}

TEST_CASE("realize_t at the far end of the gap") {
    auto [g, bp] = build_boldF(1, 24);
    EdgeColoring c = realize_t(g, bp, 99); // t = T0 + T1 - 13 - 10
    CHECK(verify_interval(g, c).empty());
    Palette p = palette(g, c);
    CHECK(p.min == 1);
    CHECK(p.max == 99);
    CHECK(static_cast<int>(p.colors.size()) == 99);

    CHECK_THROWS_AS(realize_t(g, bp, 80), GadgetError);
    CHECK_THROWS_AS(realize_t(g, bp, 73), GadgetError);
    CHECK_THROWS_AS(realize_t(g, bp, 100), GadgetError);
}

TEST_CASE("realize_t with two components routes the pendant permutation") {
    auto [g, bp] = build_boldF(2, 24);
    SpectrumReport s = predicted_spectrum(2, 24);
    const int T0 = bp.params.T0();
    const int t = T0 + bp.params.Tj(2) - 23; // F_2 type 2 at p = 13
    EdgeColoring c = realize_t(g, bp, t);
    CHECK(verify_interval(g, c).empty());
    CHECK(static_cast<int>(palette(g, c).colors.size()) == t);

    // F_1 stays type 1: palette inside F_0's.
    std::set<int> f0_colors;
    for (const auto& [e, col] : c.colors)
        if (e.a.rfind("F0.", 0) == 0 && e.b.rfind("F0.", 0) == 0)
            f0_colors.insert(col);
    for (const Edge& e : g.incident(bp.fj[0].v))
        CHECK(f0_colors.count(c.at(e)) == 1);

    // Every predicted t realizes and verifies.
    for (int tt : s.achievable) {
        EdgeColoring w = realize_t(g, bp, tt);
        CHECK(verify_interval(g, w).empty());
        CHECK(static_cast<int>(palette(g, w).colors.size()) == tt);
    }
}
