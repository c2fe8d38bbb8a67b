#include "icolor/spectrum.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <functional>
#include <limits>

namespace icolor {

namespace {

constexpr int kMaxColors = 512;
constexpr int kWords = kMaxColors / 64;

// Fixed-capacity bitset over colors 1..t (bit c-1 represents color c).
struct Mask {
    std::array<std::uint64_t, kWords> w{};

    void set(int bit) { w[bit >> 6] |= std::uint64_t(1) << (bit & 63); }
    void reset(int bit) { w[bit >> 6] &= ~(std::uint64_t(1) << (bit & 63)); }

    int count(int nw) const {
        int c = 0;
        for (int i = 0; i < nw; ++i)
            c += std::popcount(w[i]);
        return c;
    }
    bool any(int nw) const {
        for (int i = 0; i < nw; ++i)
            if (w[i])
                return true;
        return false;
    }
    int lowest(int nw) const {
        for (int i = 0; i < nw; ++i)
            if (w[i])
                return (i << 6) + std::countr_zero(w[i]);
        return -1;
    }
    int highest(int nw) const {
        for (int i = nw - 1; i >= 0; --i)
            if (w[i])
                return (i << 6) + 63 - std::countl_zero(w[i]);
        return -1;
    }
};

// Bits [lo, hi] set (0-based, inclusive); empty when lo > hi.
Mask range_mask(int lo, int hi) {
    Mask m;
    if (lo > hi)
        return m;
    for (int word = lo >> 6; word <= hi >> 6; ++word) {
        std::uint64_t bits = ~std::uint64_t(0);
        if (word == lo >> 6)
            bits &= ~std::uint64_t(0) << (lo & 63);
        if (word == hi >> 6)
            bits &= ~std::uint64_t(0) >> (63 - (hi & 63));
        m.w[word] = bits;
    }
    return m;
}

struct CompiledGraph {
    int n = 0;
    int m = 0;
    std::vector<int> eu, ev;                           // edge endpoints
    std::vector<std::vector<std::pair<int, int>>> inc; // vertex -> (edge, other)
    std::vector<int> deg;
    std::vector<Edge> edge_of;
    std::map<VertexId, int> vid;

    explicit CompiledGraph(const Graph& g) {
        n = static_cast<int>(g.vertex_count());
        m = static_cast<int>(g.edge_count());
        for (const auto& v : g.vertices())
            vid.emplace(v, static_cast<int>(vid.size()));
        inc.resize(n);
        deg.assign(n, 0);
        for (const Edge& e : g.edges()) {
            int u = vid.at(e.a), v = vid.at(e.b);
            int idx = static_cast<int>(eu.size());
            eu.push_back(u);
            ev.push_back(v);
            inc[u].emplace_back(idx, v);
            inc[v].emplace_back(idx, u);
            edge_of.push_back(e);
        }
        for (int v = 0; v < n; ++v)
            deg[v] = static_cast<int>(inc[v].size());
    }
};

// Classes of interchangeable vertices usable for symmetry breaking.
// Vertices with identical open neighborhoods can be permuted freely (a graph
// automorphism). A class is kept only when its anchor (the smallest common
// neighbor) is not itself a twin: then distinct class permutations touch
// disjoint edge sets, every solution orbit contains exactly one
// representative whose anchor colors increase along the class, and orbit
// elements are pairwise distinct.
std::vector<std::vector<VertexId>> twin_classes(const Graph& g) {
    std::map<std::vector<VertexId>, std::vector<VertexId>> by_neighborhood;
    for (const VertexId& v : g.vertices()) {
        std::vector<VertexId> nb;
        for (const Edge& e : g.incident(v))
            nb.push_back(e.a == v ? e.b : e.a);
        std::sort(nb.begin(), nb.end());
        if (!nb.empty())
            by_neighborhood[std::move(nb)].push_back(v);
    }
    std::set<VertexId> twins;
    for (const auto& [nb, members] : by_neighborhood)
        if (members.size() >= 2)
            twins.insert(members.begin(), members.end());

    std::vector<std::vector<VertexId>> classes;
    for (auto& [nb, members] : by_neighborhood) {
        if (members.size() < 2 || twins.count(nb.front()))
            continue;
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    return classes;
}

// Rank per the documented static order: vertices by decreasing degree (ties
// by identifier, which is index order), then each vertex's not yet ranked
// edges by decreasing neighbor degree.
std::vector<int> static_rank(const CompiledGraph& cg) {
    std::vector<int> verts(cg.n);
    for (int i = 0; i < cg.n; ++i)
        verts[i] = i;
    std::stable_sort(verts.begin(), verts.end(),
                     [&](int a, int b) { return cg.deg[a] > cg.deg[b]; });
    std::vector<int> rank(cg.m, -1);
    int next = 0;
    for (int v : verts) {
        std::vector<std::pair<int, int>> star = cg.inc[v];
        std::stable_sort(star.begin(), star.end(), [&](const auto& a, const auto& b) {
            return cg.deg[a.second] > cg.deg[b.second];
        });
        for (const auto& [e, other] : star)
            if (rank[e] < 0)
                rank[e] = next++;
    }
    return rank;
}

// Exact t-interval coloring search.
//
// Model: every vertex's incident colors must be exactly a window
// [s_v, s_v + deg(v) - 1]; the solver keeps the feasible range [wlo, whi] of
// each window start and runs an arc-consistency fixpoint between edge color
// hulls and endpoint windows. That fixpoint carries the path bound (two
// edges k steps apart along a path can differ by at most the sum of the
// inner degrees minus one each), which is what prunes the rigid gadget
// instances to searchable size.
class Solver {
public:
    Solver(const Graph& g, int t, const SearchOptions& opt)
        : cg_(g), t_(t), nw_((t + 63) / 64), opt_(opt) {
        full_ = range_mask(0, t - 1);
        rank_ = static_rank(cg_);
        order_of_rank_.assign(cg_.m, 0);
        for (int e = 0; e < cg_.m; ++e)
            order_of_rank_[rank_[e]] = e;
        wlo_.assign(cg_.n, 1);
        whi_.assign(cg_.n, 1);
        used_.assign(cg_.n, Mask{});
        used_cnt_.assign(cg_.n, 0);
        weight_.assign(cg_.n, 1);
        color_.assign(cg_.m, 0);
        pruned_.assign(cg_.m, Mask{});
        color_cnt_.assign(t + 1, 0);
        in_queue_.assign(cg_.n, false);
        dirty_flag_.assign(cg_.n, false);
        feasible_ = t <= cg_.m; // every color must land on some edge
        for (int v = 0; v < cg_.n; ++v) {
            whi_[v] = t - cg_.deg[v] + 1;
            if (cg_.deg[v] > 0 && whi_[v] < wlo_[v])
                feasible_ = false;
        }
        build_twin_chains(g);
        deadline_ = opt.budget.wall
                        ? std::optional(std::chrono::steady_clock::now() + *opt.budget.wall)
                        : std::nullopt;
    }

    // Runs the search, invoking on_solution per complete coloring until it
    // returns false. Returns false iff the budget expired.
    bool run(const std::function<bool(const std::vector<int>&)>& on_solution) {
        on_solution_ = &on_solution;
        stopped_ = false;
        timed_out_ = false;
        if (feasible_) {
            for (int v = 0; v < cg_.n; ++v)
                enqueue(v);
            if (propagate() && shave())
                dfs(cg_.m - colored_);
        }
        return !timed_out_;
    }

    std::uint64_t nodes() const { return nodes_; }

    EdgeColoring to_coloring(const std::vector<int>& colors) const {
        EdgeColoring c;
        for (int e = 0; e < cg_.m; ++e)
            c.colors.emplace(cg_.edge_of[e], colors[e]);
        return c;
    }

private:
    bool out_of_budget() {
        if (opt_.budget.max_nodes && nodes_ > *opt_.budget.max_nodes)
            return true;
        if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
            return true;
        return false;
    }

    // The search explores one representative per twin-class orbit: along
    // each class, the colors toward the anchor increase with vertex
    // identifier. enumerate_colorings expands the orbits afterwards.
    void build_twin_chains(const Graph& g) {
        chain_of_.assign(cg_.m, -1);
        chain_pos_.assign(cg_.m, 0);
        for (const auto& members : twin_classes(g)) {
            // Anchor = smallest common neighbor of the (sorted) members.
            int first = cg_.vid.at(members.front());
            int anchor = cg_.n;
            for (const auto& [e, other] : cg_.inc[first])
                anchor = std::min(anchor, other);
            std::vector<int> chain;
            for (const VertexId& vertex : members)
                for (const auto& [e, other] : cg_.inc[cg_.vid.at(vertex)])
                    if (other == anchor)
                        chain.push_back(e);
            int id = static_cast<int>(chains_.size());
            for (std::size_t i = 0; i < chain.size(); ++i) {
                chain_of_[chain[i]] = id;
                chain_pos_[chain[i]] = static_cast<int>(i);
            }
            chains_.push_back(std::move(chain));
        }
    }

    Mask domain(int e) const {
        int u = cg_.eu[e], v = cg_.ev[e];
        int lo = std::max(wlo_[u], wlo_[v]);
        int hi = std::min(whi_[u] + cg_.deg[u] - 1, whi_[v] + cg_.deg[v] - 1);
        if (chain_of_[e] >= 0) {
            const auto& chain = chains_[chain_of_[e]];
            int pos = chain_pos_[e];
            for (int i = 0; i < pos; ++i)
                if (color_[chain[i]])
                    lo = std::max(lo, color_[chain[i]] + 1);
            for (int i = pos + 1; i < static_cast<int>(chain.size()); ++i)
                if (color_[chain[i]])
                    hi = std::min(hi, color_[chain[i]] - 1);
        }
        Mask m = range_mask(lo - 1, hi - 1);
        for (int i = 0; i < nw_; ++i)
            m.w[i] &= ~used_[u].w[i] & ~used_[v].w[i] & ~pruned_[e].w[i];
        return m;
    }

    // Root-level singleton shaving, iterated to a fixpoint: probe each
    // remaining (edge, color) pair through the propagator and permanently
    // discard the ones that fail; forced edges are committed outright. The
    // rigid gadgets collapse to near-singleton domains here, which is what
    // keeps the search on them feasible.
    bool shave() {
        bool changed = true;
        while (changed && !timed_out_) {
            changed = false;
            for (int e = 0; e < cg_.m && !timed_out_; ++e) {
                if (color_[e])
                    continue;
                Mask d = domain(e);
                std::vector<int> candidates;
                for (int word = 0; word < nw_; ++word) {
                    std::uint64_t bits = d.w[word];
                    while (bits) {
                        int bit = std::countr_zero(bits);
                        bits &= bits - 1;
                        candidates.push_back((word << 6) + bit + 1);
                    }
                }
                if (candidates.empty())
                    return false;
                int survivors = 0;
                for (int c : candidates) {
                    ++nodes_;
                    if (out_of_budget()) {
                        timed_out_ = true;
                        return false;
                    }
                    std::size_t mark = trail_.size();
                    assign(e, c);
                    bool ok = propagate();
                    unassign(e, c);
                    rewind(mark);
                    if (ok) {
                        ++survivors;
                    } else {
                        pruned_[e].set(c - 1);
                        changed = true;
                    }
                }
                if (survivors == 0)
                    return false;
                if (survivors == 1) {
                    Mask rest = domain(e);
                    assign(e, rest.lowest(nw_) + 1);
                    if (!propagate())
                        return false;
                }
            }
        }
        return !timed_out_;
    }

    void enqueue(int v) {
        if (!in_queue_[v]) {
            in_queue_[v] = true;
            queue_.push_back(v);
        }
        mark_dirty(v);
    }

    void mark_dirty(int v) {
        if (!dirty_flag_[v]) {
            dirty_flag_[v] = true;
            dirty_.push_back(v);
        }
    }

    // Window-start shrink with trail recording.
    bool tighten(int r, int lo_color, int hi_color) {
        int nlo = std::max(wlo_[r], lo_color - cg_.deg[r] + 1);
        int nhi = std::min(whi_[r], hi_color);
        if (nlo == wlo_[r] && nhi == whi_[r])
            return true; // no change, still consistent
        trail_.push_back({r, wlo_[r], whi_[r]});
        wlo_[r] = nlo;
        whi_[r] = nhi;
        if (nlo > nhi) {
            ++weight_[r];
            return false;
        }
        enqueue(r);
        return true;
    }

    void rewind(std::size_t mark) {
        while (trail_.size() > mark) {
            auto [r, lo, hi] = trail_.back();
            trail_.pop_back();
            wlo_[r] = lo;
            whi_[r] = hi;
        }
    }

    // Arc-consistency fixpoint plus per-vertex checks on everything touched.
    bool propagate() {
        bool ok = true;
        while (ok && !queue_.empty()) {
            int v = queue_.front();
            queue_.pop_front();
            in_queue_[v] = false;
            for (const auto& [e, other] : cg_.inc[v]) {
                if (color_[e])
                    continue;
                Mask d = domain(e);
                int lo = d.lowest(nw_);
                if (lo < 0) {
                    ++weight_[v];
                    ++weight_[other];
                    ok = false;
                    break;
                }
                int hi = d.highest(nw_);
                if (!tighten(v, lo + 1, hi + 1) || !tighten(other, lo + 1, hi + 1)) {
                    ok = false;
                    break;
                }
                // A shrunk domain matters to the coverage check at both ends
                // even when no window moved.
                mark_dirty(other);
            }
        }
        while (!queue_.empty()) {
            in_queue_[queue_.front()] = false;
            queue_.pop_front();
        }

        if (ok) {
            for (int v : dirty_) {
                if (!vertex_consistent(v)) {
                    ++weight_[v];
                    ok = false;
                    break;
                }
            }
        }
        for (int v : dirty_)
            dirty_flag_[v] = false;
        dirty_.clear();
        return ok;
    }

    // Capacity: enough unused colors in the window range for the uncolored
    // star edges. Coverage: each color certainly inside the final window
    // ([whi, wlo + deg - 1]) is either used here or reachable by an
    // uncolored incident edge.
    bool vertex_consistent(int v) {
        const int deg = cg_.deg[v];
        if (deg == 0)
            return true;
        Mask avail = range_mask(wlo_[v] - 1, whi_[v] + deg - 2);
        for (int i = 0; i < nw_; ++i)
            avail.w[i] &= ~used_[v].w[i];
        if (avail.count(nw_) < deg - used_cnt_[v])
            return false;

        Mask certain = range_mask(whi_[v] - 1, wlo_[v] + deg - 2);
        for (int i = 0; i < nw_; ++i)
            certain.w[i] &= ~used_[v].w[i];
        if (!certain.any(nw_))
            return true;
        for (const auto& [e, other] : cg_.inc[v]) {
            if (color_[e])
                continue;
            Mask d = domain(e);
            for (int i = 0; i < nw_; ++i)
                certain.w[i] &= ~d.w[i];
            if (!certain.any(nw_))
                return true;
        }
        return !certain.any(nw_);
    }

    void assign(int e, int c) {
        int u = cg_.eu[e], v = cg_.ev[e];
        color_[e] = c;
        for (int w : {u, v}) {
            trail_.push_back({w, wlo_[w], whi_[w]});
            wlo_[w] = std::max(wlo_[w], c - cg_.deg[w] + 1);
            whi_[w] = std::min(whi_[w], c);
            used_[w].set(c - 1);
            ++used_cnt_[w];
            enqueue(w);
        }
        if (color_cnt_[c]++ == 0) {
            used_colors_.set(c - 1);
            ++distinct_;
        }
        ++colored_;
    }

    void unassign(int e, int c) {
        int u = cg_.eu[e], v = cg_.ev[e];
        color_[e] = 0;
        for (int w : {u, v}) {
            used_[w].reset(c - 1);
            --used_cnt_[w];
        }
        if (--color_cnt_[c] == 0) {
            used_colors_.reset(c - 1);
            --distinct_;
        }
        --colored_;
    }

    // Pick the next decision edge. MinDomain: fewest feasible colors,
    // weighted toward historically conflicting stars; Static: the fixed
    // rank. Also feeds the global coverage prune (every color in [1..t]
    // must stay reachable by some edge).
    bool select(int uncolored, int& best, Mask& best_mask) {
        best = -1;
        std::uint64_t best_score_num = 0, best_score_den = 1;
        Mask uncovered = full_;
        for (int i = 0; i < nw_; ++i)
            uncovered.w[i] &= ~used_colors_.w[i];
        if (full_.count(nw_) - distinct_ > uncolored)
            return false;

        for (int r = 0; r < cg_.m; ++r) {
            int e = order_of_rank_[r];
            if (color_[e])
                continue;
            Mask d = domain(e);
            int size = d.count(nw_);
            if (size == 0)
                return false;
            for (int i = 0; i < nw_; ++i)
                uncovered.w[i] &= ~d.w[i];
            if (opt_.order == SearchOrder::Static) {
                if (best < 0) {
                    best = e;
                    best_mask = d;
                }
            } else {
                // Compare size/(w_u + w_v) as fractions.
                std::uint64_t den = weight_[cg_.eu[e]] + weight_[cg_.ev[e]];
                std::uint64_t num = static_cast<std::uint64_t>(size);
                if (best < 0 || num * best_score_den < best_score_num * den) {
                    best = e;
                    best_mask = d;
                    best_score_num = num;
                    best_score_den = den;
                }
            }
        }
        return !uncovered.any(nw_);
    }

    void dfs(int uncolored) {
        if (stopped_ || timed_out_)
            return;
        if (uncolored == 0) {
            if (distinct_ == t_)
                if (!(*on_solution_)(color_))
                    stopped_ = true;
            return;
        }

        int best = -1;
        Mask best_mask;
        if (!select(uncolored, best, best_mask))
            return;

        // Middle-out value order: rigid stars pin their extreme colors from
        // the outside in, so central colors survive propagation most often.
        values_.clear();
        for (int word = 0; word < nw_; ++word) {
            std::uint64_t bits = best_mask.w[word];
            while (bits) {
                int bit = std::countr_zero(bits);
                bits &= bits - 1;
                values_.push_back((word << 6) + bit + 1);
            }
        }
        const int mid = (values_.front() + values_.back()) / 2;
        std::stable_sort(values_.begin(), values_.end(), [mid](int a, int b) {
            return std::abs(a - mid) < std::abs(b - mid);
        });

        std::vector<int> values = std::move(values_);
        for (int c : values) {
            ++nodes_;
            if (out_of_budget()) {
                timed_out_ = true;
                break;
            }
            std::size_t mark = trail_.size();
            assign(best, c);
            if (propagate())
                dfs(uncolored - 1);
            unassign(best, c);
            rewind(mark);
            if (stopped_ || timed_out_)
                break;
        }
        values_ = std::move(values);
    }

    CompiledGraph cg_;
    int t_;
    int nw_;
    SearchOptions opt_;
    Mask full_;
    std::vector<int> rank_, order_of_rank_;

    std::vector<int> wlo_, whi_;
    std::vector<Mask> used_;
    std::vector<int> used_cnt_;
    std::vector<std::uint64_t> weight_;
    std::vector<int> color_;
    std::vector<Mask> pruned_;
    std::vector<std::vector<int>> chains_;
    std::vector<int> chain_of_, chain_pos_;
    std::vector<int> color_cnt_;
    Mask used_colors_;
    int distinct_ = 0;
    int colored_ = 0;
    bool feasible_ = true;

    std::vector<std::tuple<int, int, int>> trail_;
    std::vector<int> values_;
    std::deque<int> queue_;
    std::vector<bool> in_queue_;
    std::vector<int> dirty_;
    std::vector<bool> dirty_flag_;

    const std::function<bool(const std::vector<int>&)>* on_solution_ = nullptr;
    bool stopped_ = false;
    bool timed_out_ = false;
    std::uint64_t nodes_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

void require_searchable(const Graph& g, int t) {
    if (t < 1)
        throw Error("find_coloring: t must be >= 1");
    if (t > kMaxColors)
        throw Error("find_coloring: t beyond supported color count (" +
                    std::to_string(kMaxColors) + ")");
    if (!g.is_connected())
        throw GraphError("spectrum search requires a connected graph");
}

// Lazily walks the orbit of a canonical coloring under the twin-class
// automorphisms, invoking emit per coloring until it returns false.
bool expand_orbit(const std::vector<std::vector<VertexId>>& classes,
                  const EdgeColoring& canonical,
                  const std::function<bool(EdgeColoring)>& emit) {
    std::vector<std::vector<int>> perms;
    perms.reserve(classes.size());
    for (const auto& cls : classes) {
        std::vector<int> identity(cls.size());
        for (std::size_t i = 0; i < cls.size(); ++i)
            identity[i] = static_cast<int>(i);
        perms.push_back(std::move(identity));
    }

    while (true) {
        std::map<VertexId, const VertexId*> moved;
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (std::size_t i = 0; i < classes[k].size(); ++i)
                if (perms[k][i] != static_cast<int>(i))
                    moved[classes[k][i]] = &classes[k][perms[k][i]];
        EdgeColoring out;
        if (moved.empty()) {
            out = canonical;
        } else {
            auto pi = [&moved](const VertexId& v) -> const VertexId& {
                auto it = moved.find(v);
                return it == moved.end() ? v : *it->second;
            };
            for (const auto& [e, col] : canonical.colors)
                out.colors.emplace(Edge(pi(e.a), pi(e.b)), col);
        }
        if (!emit(std::move(out)))
            return false;

        // Odometer over per-class permutations, lexicographic.
        int k = static_cast<int>(perms.size()) - 1;
        while (k >= 0 && !std::next_permutation(perms[k].begin(), perms[k].end()))
            --k;
        if (k < 0)
            return true; // orbit exhausted
    }
}

} // namespace

SolveResult find_coloring(const Graph& g, int t, const SearchOptions& opt) {
    require_searchable(g, t);
    Solver solver(g, t, opt);
    SolveResult result;
    std::vector<int> found;
    bool has_found = false;
    bool finished = solver.run([&](const std::vector<int>& colors) {
        found = colors;
        has_found = true;
        return false; // first solution only
    });
    result.nodes = solver.nodes();
    if (has_found) {
        result.status = SolveStatus::Found;
        result.coloring = solver.to_coloring(found);
    } else {
        result.status = finished ? SolveStatus::None : SolveStatus::Timeout;
    }
    return result;
}

SpectrumReport compute_spectrum(const Graph& g, std::optional<int> t_hi,
                                const SearchOptions& opt) {
    int hi = t_hi.value_or(static_cast<int>(g.edge_count()));
    int lo = std::max(1, g.max_degree());
    SpectrumReport report;
    report.searched_range = {lo, hi};
    for (int t = lo; t <= hi; ++t) {
        SolveResult r = find_coloring(g, t, opt);
        switch (r.status) {
        case SolveStatus::Found:
            report.achievable.push_back(t);
            report.witnesses.emplace(t, std::move(*r.coloring));
            break;
        case SolveStatus::None:
            break;
        case SolveStatus::Timeout:
            report.undecided.push_back(t);
            report.partial = true;
            break;
        }
    }
    report.gaps = gaps_of(report.achievable);
    return report;
}

EnumerateResult enumerate_colorings(const Graph& g, int t, int limit,
                                    const SearchOptions& opt) {
    require_searchable(g, t);
    EnumerateResult result;
    if (limit <= 0) {
        result.exhaustive = false;
        return result;
    }
    auto classes = twin_classes(g);
    Solver solver(g, t, opt);
    bool finished = solver.run([&](const std::vector<int>& colors) {
        // The search yields one representative per automorphism orbit;
        // recover the rest of the orbit here.
        return expand_orbit(classes, solver.to_coloring(colors),
                            [&](EdgeColoring c) {
                                result.colorings.push_back(std::move(c));
                                return static_cast<int>(result.colorings.size()) < limit;
                            });
    });
    result.nodes = solver.nodes();
    result.timed_out = !finished;
    result.exhaustive =
        finished && static_cast<int>(result.colorings.size()) < limit;
    return result;
}

} // namespace icolor
