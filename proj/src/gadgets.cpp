#include "icolor/gadgets.hpp"

#include <algorithm>
#include <set>

namespace icolor {

namespace {

std::string padded(int i) {
    std::string s = std::to_string(i);
    return std::string(4 - std::min<std::size_t>(4, s.size()), '0') + s;
}

std::vector<VertexId> named_set(const std::string& prefix, const std::string& set_name, int count) {
    std::vector<VertexId> out;
    out.reserve(count);
    for (int i = 1; i <= count; ++i)
        out.push_back(prefix + set_name + "." + padded(i));
    return out;
}

void check_F_params(int b, int T) {
    int D = T - 25;
    if (D < 1)
        throw GadgetError("F(b,T): T must be at least 26 (D = T-25 >= 1), got T=" + std::to_string(T));
    if (D % 2 != 0)
        throw GadgetError("F(b,T): D = T-25 must be even, got D=" + std::to_string(D));
    if (b < 1 || b > D)
        throw GadgetError("F(b,T): need 1 <= b <= D, got b=" + std::to_string(b) +
                          ", D=" + std::to_string(D));
}

} // namespace

std::pair<Graph, FBlueprint> build_F(int b, int T, const std::string& prefix) {
    check_F_params(b, T);
    const int D = T - 25;

    FBlueprint bp;
    bp.params = {b, T};
    bp.prefix = prefix;
    bp.v = prefix + "v";
    bp.v_prime = prefix + "v'";
    bp.v_l = prefix + "vl";
    bp.v_r = prefix + "vr";
    bp.u = prefix + "u";
    bp.u_r = prefix + "ur";
    bp.w_l = prefix + "wl";
    bp.w_r = prefix + "wr";
    bp.x = prefix + "x";
    bp.V0 = named_set(prefix, "V0", D + 12);
    bp.Vl = named_set(prefix, "Vl", 7);
    bp.Vr = named_set(prefix, "Vr", 7);
    bp.Ur = named_set(prefix, "Ur", D - b + 2);
    bp.Ud = named_set(prefix, "Ud", b);
    bp.y = bp.Ur.front();

    std::vector<VertexId> vertices{bp.v, bp.v_prime, bp.v_l, bp.v_r, bp.u,
                                   bp.u_r, bp.w_l, bp.w_r, bp.x};
    for (const auto* set : {&bp.V0, &bp.Vl, &bp.Vr, &bp.Ur, &bp.Ud})
        vertices.insert(vertices.end(), set->begin(), set->end());

    std::vector<std::pair<VertexId, VertexId>> edges;
    auto complete_bipartite = [&edges](const std::vector<VertexId>& left,
                                       const std::vector<VertexId>& right) {
        for (const auto& l : left)
            for (const auto& r : right)
                edges.emplace_back(l, r);
    };
    complete_bipartite({bp.v, bp.v_prime}, bp.V0);
    complete_bipartite({bp.v, bp.v_r}, bp.Vr);
    complete_bipartite({bp.v, bp.v_l}, bp.Vl);
    complete_bipartite({bp.u, bp.u_r}, bp.Ur);
    complete_bipartite({bp.u}, bp.Ud);
    edges.emplace_back(bp.w_l, bp.v_prime);
    edges.emplace_back(bp.w_r, bp.v_prime);
    edges.emplace_back(bp.w_l, bp.v_l);
    edges.emplace_back(bp.w_r, bp.v_r);
    edges.emplace_back(bp.w_l, bp.x);
    edges.emplace_back(bp.w_r, bp.y);
    edges.emplace_back(bp.x, bp.u);

    std::map<VertexId, std::string> roles{
        {bp.v, "v"},     {bp.v_prime, "v'"}, {bp.v_l, "v_l"}, {bp.v_r, "v_r"},
        {bp.u, "u"},     {bp.u_r, "u_r"},    {bp.w_l, "w_l"}, {bp.w_r, "w_r"},
        {bp.x, "x"},     {bp.y, "y"},
    };
    auto tag_set = [&roles](const std::vector<VertexId>& set, const std::string& name) {
        for (const auto& m : set)
            if (!roles.count(m))
                roles.emplace(m, name);
    };
    tag_set(bp.V0, "V0");
    tag_set(bp.Vl, "Vl");
    tag_set(bp.Vr, "Vr");
    tag_set(bp.Ur, "Ur");
    tag_set(bp.Ud, "Ud");

    std::map<Edge, std::string> tags;
    for (const auto& pendant_end : bp.Ud) {
        Edge e(bp.u, pendant_end);
        bp.pendant_edges.push_back(e);
        tags.emplace(e, "pendant");
    }

    Graph g = Graph::build(std::move(vertices), std::move(edges),
                           std::move(roles), std::move(tags));
    return {std::move(g), std::move(bp)};
}

EdgeColoring explicit_coloring_F(const FBlueprint& bp) {
    std::vector<int> pendant_colors;
    for (int i = 0; i < bp.params.b; ++i)
        pendant_colors.push_back(13 + i);
    return explicit_coloring_F(bp, pendant_colors);
}

EdgeColoring explicit_coloring_F(const FBlueprint& bp,
                                 std::span<const int> pendant_colors) {
    const int b = bp.params.b;
    const int D = bp.params.D();
    if (static_cast<int>(pendant_colors.size()) != b)
        throw GadgetError("pendant color list must have exactly b entries");
    {
        std::set<int> want(pendant_colors.begin(), pendant_colors.end());
        std::set<int> expect;
        for (int i = 0; i < b; ++i)
            expect.insert(13 + i);
        if (want != expect)
            throw GadgetError("pendant colors must be a permutation of {13..12+b}");
    }

    EdgeColoring c;
    auto put = [&c](const VertexId& p, const VertexId& q, int col) {
        c.colors.emplace(Edge(p, q), col);
    };

    put(bp.v_l, bp.w_l, 9);
    put(bp.w_l, bp.v_prime, 10);
    put(bp.w_l, bp.x, 11);
    put(bp.x, bp.u, 12);
    put(bp.u, bp.y, D + 14);
    put(bp.y, bp.u_r, D + 15);
    put(bp.y, bp.w_r, D + 16);
    put(bp.v_prime, bp.w_r, D + 17);
    put(bp.v_r, bp.w_r, D + 18);

    // Pendant edges: the b colors {13..12+b}, in the requested order.
    for (int i = 0; i < b; ++i)
        put(bp.u, bp.Ud[i], pendant_colors[i]);

    // V_l: pairs (i, i+1) toward (v, v_l); covers {1..7} and {2..8}.
    for (int i = 1; i <= 7; ++i) {
        put(bp.v, bp.Vl[i - 1], i);
        put(bp.v_l, bp.Vl[i - 1], i + 1);
    }
    // V_r mirrors V_l at the top end: (D+27-i, D+26-i) toward (v, v_r).
    for (int i = 1; i <= 7; ++i) {
        put(bp.v, bp.Vr[i - 1], D + 27 - i);
        put(bp.v_r, bp.Vr[i - 1], D + 26 - i);
    }
    // U_r: y takes (D+14, D+15); the rest climb (12+b+i, 13+b+i).
    for (int i = 1; i + 1 <= static_cast<int>(bp.Ur.size()); ++i) {
        put(bp.u, bp.Ur[i], 12 + b + i);
        put(bp.u_r, bp.Ur[i], 13 + b + i);
    }

    // V_0 double staircase of (v, v') color pairs: three ascending pairs with
    // v ahead, a middle block of swapped consecutive pairs (this is where D
    // even is needed), three ascending pairs with v' ahead. Covers
    // {8..D+19} on the v side and {7..D+20} minus {10, D+17} on the v' side.
    std::vector<std::pair<int, int>> staircase;
    staircase.reserve(D + 12);
    for (int i = 0; i < 3; ++i)
        staircase.emplace_back(8 + i, 7 + i);
    for (int p = 0; p < (D + 6) / 2; ++p) {
        staircase.emplace_back(11 + 2 * p, 12 + 2 * p);
        staircase.emplace_back(12 + 2 * p, 11 + 2 * p);
    }
    for (int i = 0; i < 3; ++i)
        staircase.emplace_back(D + 17 + i, D + 18 + i);
    for (int i = 0; i < D + 12; ++i) {
        put(bp.v, bp.V0[i], staircase[i].first);
        put(bp.v_prime, bp.V0[i], staircase[i].second);
    }

    return c;
}

PendantLawReport pendant_color_law(const Graph& f, const FBlueprint& bp,
                                   const EdgeColoring& c) {
    auto violations = verify_interval(f, c);
    if (!violations.empty())
        throw GadgetError("pendant_color_law: coloring is not interval");

    Palette pal = palette(f, c);
    const int c1 = pal.min;
    const int T = bp.params.T;
    const int b = bp.params.b;

    PendantLawReport report;
    report.c1 = c1;
    for (const Edge& e : bp.pendant_edges)
        report.pendant_colors.push_back(c.at(e));
    std::sort(report.pendant_colors.begin(), report.pendant_colors.end());
    report.w_l_v_l_color = c.at(Edge(bp.w_l, bp.v_l));

    auto is_run_from = [&](int start) {
        for (int i = 0; i < b; ++i)
            if (report.pendant_colors[i] != start + i)
                return false;
        return true;
    };
    const bool low = is_run_from(c1 + 12) && report.w_l_v_l_color == c1 + 8;
    const bool high = is_run_from(c1 + T - 11 - b) && report.w_l_v_l_color == c1 + T - 8;
    if (low == high)
        throw GadgetError("pendant_color_law: coloring fits neither pendant "
                          "configuration -- this contradicts the construction");
    report.side = low ? PendantSide::Low : PendantSide::High;
    return report;
}

namespace {

VertexId mapped(const std::map<VertexId, VertexId>& m, const VertexId& v) {
    auto it = m.find(v);
    return it == m.end() ? v : it->second;
}

FBlueprint rename_blueprint(FBlueprint bp, const std::map<VertexId, VertexId>& m) {
    for (VertexId* v : {&bp.v, &bp.v_prime, &bp.v_l, &bp.v_r, &bp.u, &bp.u_r,
                        &bp.w_l, &bp.w_r, &bp.x, &bp.y})
        *v = mapped(m, *v);
    for (auto* set : {&bp.V0, &bp.Vl, &bp.Vr, &bp.Ur, &bp.Ud})
        for (VertexId& v : *set)
            v = mapped(m, v);
    for (Edge& e : bp.pendant_edges)
        e = Edge(mapped(m, e.a), mapped(m, e.b));
    return bp;
}

void check_boldF_params(int k, int d) {
    if (k < 1)
        throw GadgetError("boldF(k,d): k must be >= 1");
    if (d < 24)
        throw GadgetError("boldF(k,d): d must be >= 24, got " + std::to_string(d));
    if (d % 2 != 0)
        throw GadgetError("boldF(k,d): d must be even, got " + std::to_string(d));
}

} // namespace

std::pair<Graph, BoldFBlueprint> build_boldF(int k, int d) {
    check_boldF_params(k, d);
    BoldFBlueprint bp;
    bp.params = {k, d};

    auto [graph, f0] = build_F(k, bp.params.T0(), "F0.");
    bp.f0 = std::move(f0);

    for (int j = 1; j <= k; ++j) {
        auto [fj_graph, fj] = build_F(1, bp.params.Tj(j), "F" + std::to_string(j) + ".");
        // Degree-1 end of F_0's j-th pendant onto F_j's u; F_j's degree-1
        // pendant end onto F_0's u.
        const Edge f0_pendant = bp.f0.pendant_edges[j - 1];
        const Edge fj_pendant = fj.pendant_edges[0];
        GlueResult glued = glue_edges(graph, f0_pendant, fj_graph, fj_pendant,
                                      {fj.u, bp.f0.Ud[j - 1]});
        graph = std::move(glued.graph);
        bp.fj.push_back(rename_blueprint(std::move(fj), glued.g2_vertex_map));
        bp.glued_edges.push_back(f0_pendant);
    }
    return {std::move(graph), std::move(bp)};
}

std::vector<Gap> gaps_of(const std::vector<int>& achievable) {
    std::vector<Gap> gaps;
    for (std::size_t i = 1; i < achievable.size(); ++i)
        if (achievable[i] - achievable[i - 1] > 1)
            gaps.push_back({achievable[i - 1] + 1, achievable[i] - 1});
    return gaps;
}

SpectrumReport predicted_spectrum(int k, int d) {
    check_boldF_params(k, d);
    BoldFParams params{k, d};
    const int T0 = params.T0();

    std::vector<int> achievable{T0 + 1};
    for (int j = 1; j <= k; ++j)
        for (int t = T0 + params.Tj(j) - 22 - k; t <= T0 + params.Tj(j) - 23; ++t)
            achievable.push_back(t);
    std::sort(achievable.begin(), achievable.end());
    achievable.erase(std::unique(achievable.begin(), achievable.end()),
                     achievable.end());

    SpectrumReport report;
    report.achievable = achievable;
    report.searched_range = {achievable.front(), achievable.back()};
    report.gaps = gaps_of(achievable);
    return report;
}

EdgeColoring realize_t(const Graph& f, const BoldFBlueprint& bp, int t) {
    const int k = bp.params.k;
    const int T0 = bp.params.T0();

    // Locate t: the all-type-1 point, or piece j with pendant color p.
    int type2_j = 0;
    int p = 0;
    if (t != T0 + 1) {
        for (int j = 1; j <= k && !type2_j; ++j) {
            const int Tj = bp.params.Tj(j);
            if (t >= T0 + Tj - 22 - k && t <= T0 + Tj - 23) {
                type2_j = j;
                p = T0 + Tj - 10 - t; // in {13..12+k}
            }
        }
        if (!type2_j)
            throw GadgetError("realize_t: t=" + std::to_string(t) +
                              " is not in the predicted spectrum");
    }

    // Pendant permutation on F_0: route p to pendant type2_j, the remaining
    // colors in increasing order to the remaining pendants.
    std::vector<int> pendant_colors(k);
    if (type2_j) {
        int next = 13;
        for (int j = 1; j <= k; ++j) {
            if (j == type2_j) {
                pendant_colors[j - 1] = p;
            } else {
                if (next == p)
                    ++next;
                pendant_colors[j - 1] = next++;
            }
        }
    } else {
        for (int j = 1; j <= k; ++j)
            pendant_colors[j - 1] = 12 + j;
    }

    EdgeColoring total = explicit_coloring_F(bp.f0, pendant_colors);

    for (int j = 1; j <= k; ++j) {
        const FBlueprint& fj = bp.fj[j - 1];
        const int Tj = bp.params.Tj(j);
        const int shared_color = pendant_colors[j - 1];

        EdgeColoring cj = explicit_coloring_F(fj); // palette {1..Tj+1}, pendant 13
        if (j == type2_j) {
            // Type 2: the pendant carries the 13th color from the top.
            cj = shift(mirror(cj), shared_color - (Tj - 11));
        } else {
            cj = shift(cj, shared_color - 13);
        }

        // The glued edge belongs to both components; the shift was chosen so
        // both sides agree on its color.
        const Edge& glued = bp.glued_edges[j - 1];
        if (cj.at(glued) != shared_color)
            throw GadgetError("realize_t: component coloring disagrees on the glued edge");
        for (const auto& [e, col] : cj.colors)
            total.colors.insert_or_assign(e, col);
    }

    if (total.colors.size() != f.edge_count())
        throw GadgetError("realize_t: composed coloring does not cover the graph");
    return normalized(total);
}

} // namespace icolor
