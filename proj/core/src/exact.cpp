#include "strongce/exact.hpp"

#include <algorithm>
#include <numeric>

#include "strongce/errors.hpp"

namespace strongce {

namespace {

class Budget {
public:
    explicit Budget(const SearchConfig& cfg)
        : cfg_(cfg), start_(std::chrono::steady_clock::now()) {}

    void tick() {
        if (++nodes_ > cfg_.node_limit) throw LimitExceeded("search node limit exceeded");
        if ((nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() - start_ > cfg_.time_limit) {
            throw LimitExceeded("search time limit exceeded");
        }
    }

private:
    const SearchConfig& cfg_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

// Forward-checking list coloring over a subset of edges.
class ListSearch {
public:
    ListSearch(PartialColoring& pc, std::span<const EdgeId> free_edges, const SearchConfig& cfg)
        : pc_(pc), free_(free_edges.begin(), free_edges.end()), cfg_(cfg), budget_(cfg) {
        const auto& g = pc.graph();
        index_.assign(g.edge_count(), kNone);
        for (std::size_t i = 0; i < free_.size(); ++i) index_[free_[i]] = i;
        domains_.resize(free_.size());
        adj_.resize(free_.size());
        for (std::size_t i = 0; i < free_.size(); ++i) {
            domains_[i] = pc.available_colors(free_[i]);
            for (EdgeId f : g.neighborhood(free_[i])) {
                if (index_[f] != kNone) adj_[i].push_back(index_[f]);
            }
        }
        assigned_.assign(free_.size(), 0);
        value_.assign(free_.size(), 0);
    }

    bool run() {
        if (!solve(0)) return false;
        for (std::size_t i = 0; i < free_.size(); ++i) pc_.assign(free_[i], value_[i]);
        return true;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::size_t pick() const {
        std::size_t best = kNone;
        for (std::size_t i = 0; i < free_.size(); ++i) {
            if (assigned_[i]) continue;
            if (!cfg_.saturation_ordering) return i;
            if (best == kNone || domains_[i].size() < domains_[best].size() ||
                (domains_[i].size() == domains_[best].size() && adj_[i].size() > adj_[best].size())) {
                best = i;
            }
        }
        return best;
    }

    bool solve(std::size_t depth) {
        if (depth == free_.size()) return true;
        budget_.tick();
        const std::size_t i = pick();
        const auto candidates = domains_[i];
        assigned_[i] = 1;
        for (ColorId c : candidates) {
            value_[i] = c;
            std::vector<std::size_t> pruned;
            bool wipeout = false;
            for (std::size_t j : adj_[i]) {
                if (assigned_[j]) continue;
                auto& d = domains_[j];
                auto it = std::find(d.begin(), d.end(), c);
                if (it != d.end()) {
                    d.erase(it);
                    pruned.push_back(j);
                    if (d.empty()) wipeout = true;
                }
            }
            if (!wipeout && solve(depth + 1)) return true;
            for (std::size_t j : pruned) {
                auto& d = domains_[j];
                // Restore list order so the search stays deterministic.
                const auto& list = pc_.lists()[free_[j]];
                auto pos = std::find(list.begin(), list.end(), c) - list.begin();
                auto at = std::find_if(d.begin(), d.end(), [&](ColorId x) {
                    return std::find(list.begin(), list.end(), x) - list.begin() > pos;
                });
                d.insert(at, c);
            }
        }
        assigned_[i] = 0;
        return false;
    }

    PartialColoring& pc_;
    std::vector<EdgeId> free_;
    const SearchConfig& cfg_;
    Budget budget_;
    std::vector<std::size_t> index_;
    std::vector<std::vector<ColorId>> domains_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<char> assigned_;
    std::vector<ColorId> value_;
};

// Uniform k-coloring of a conflict graph, DSATUR branching with colors
// introduced in increasing order.
class UniformSearch {
public:
    UniformSearch(const ConflictGraph& cg, std::size_t k, const SearchConfig& cfg)
        : cg_(cg), k_(k), cfg_(cfg), budget_(cfg), color_(cg.size(), kNone),
          forbidden_(cg.size(), std::vector<std::uint32_t>(k, 0)), saturation_(cg.size(), 0) {}

    bool run() { return solve(0, 0); }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::size_t pick() const {
        std::size_t best = kNone;
        for (std::size_t v = 0; v < cg_.size(); ++v) {
            if (color_[v] != kNone) continue;
            if (!cfg_.saturation_ordering) return v;
            if (best == kNone || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] &&
                 cg_.neighbors(static_cast<EdgeId>(v)).size() >
                     cg_.neighbors(static_cast<EdgeId>(best)).size())) {
                best = v;
            }
        }
        return best;
    }

    void set(std::size_t v, std::size_t c, int delta) {
        for (EdgeId w : cg_.neighbors(static_cast<EdgeId>(v))) {
            auto& f = forbidden_[w][c];
            if (delta > 0) {
                if (f++ == 0) ++saturation_[w];
            } else {
                if (--f == 0) --saturation_[w];
            }
        }
    }

    bool solve(std::size_t depth, std::size_t used) {
        if (depth == cg_.size()) return true;
        budget_.tick();
        const std::size_t v = pick();
        const std::size_t limit = std::min(k_, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (forbidden_[v][c]) continue;
            color_[v] = c;
            set(v, c, +1);
            if (solve(depth + 1, std::max(used, c + 1))) return true;
            set(v, c, -1);
            color_[v] = kNone;
        }
        return false;
    }

    const ConflictGraph& cg_;
    std::size_t k_;
    const SearchConfig& cfg_;
    Budget budget_;
    std::vector<std::size_t> color_;
    std::vector<std::vector<std::uint32_t>> forbidden_;
    std::vector<std::size_t> saturation_;
};

std::size_t greedy_clique_size(const ConflictGraph& cg) {
    std::size_t best = cg.size() > 0 ? 1 : 0;
    for (EdgeId s = 0; s < cg.size(); ++s) {
        std::vector<EdgeId> clique{s};
        for (EdgeId w : cg.neighbors(s)) {
            if (std::all_of(clique.begin(), clique.end(), [&](EdgeId u) { return cg.adjacent(u, w); })) {
                clique.push_back(w);
            }
        }
        best = std::max(best, clique.size());
    }
    return best;
}

std::size_t dsatur_upper_bound(const ConflictGraph& cg) {
    const std::size_t n = cg.size();
    std::vector<int> color(n, -1);
    std::size_t used = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        std::size_t best_sat = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            std::vector<int> seen;
            for (EdgeId w : cg.neighbors(static_cast<EdgeId>(v))) {
                if (color[w] != -1) seen.push_back(color[w]);
            }
            std::sort(seen.begin(), seen.end());
            std::size_t sat = std::unique(seen.begin(), seen.end()) - seen.begin();
            if (best == n || sat > best_sat) {
                best = v;
                best_sat = sat;
            }
        }
        std::vector<char> taken(used + 1, 0);
        for (EdgeId w : cg.neighbors(static_cast<EdgeId>(best))) {
            if (color[w] != -1) taken[color[w]] = 1;
        }
        int c = 0;
        while (taken[c]) ++c;
        color[best] = c;
        used = std::max(used, static_cast<std::size_t>(c) + 1);
    }
    return used;
}

}  // namespace

bool complete_by_search(PartialColoring& pc, std::span<const EdgeId> free_edges,
                        const SearchConfig& cfg) {
    for (EdgeId e : free_edges) {
        if (pc.is_colored(e)) throw PreconditionError("complete_by_search: edge already colored");
    }
    ListSearch search(pc, free_edges, cfg);
    return search.run();
}

std::optional<std::vector<ColorId>> list_colorable(const MultiGraph& g, const ListAssignment& lists,
                                                   const SearchConfig& cfg) {
    PartialColoring pc(g, lists);
    std::vector<EdgeId> all(g.edge_count());
    std::iota(all.begin(), all.end(), EdgeId{0});
    if (!complete_by_search(pc, all, cfg)) return std::nullopt;
    return pc.to_vector();
}

bool is_strongly_k_colorable(const MultiGraph& g, std::size_t k, const SearchConfig& cfg) {
    if (g.edge_count() == 0) return true;
    if (k == 0) return false;
    auto cg = conflict_graph(g);
    UniformSearch search(cg, k, cfg);
    return search.run();
}

std::size_t exact_strong_chromatic_index(const MultiGraph& g, const SearchConfig& cfg) {
    if (g.edge_count() == 0) return 0;
    auto cg = conflict_graph(g);
    const std::size_t lower = greedy_clique_size(cg);
    const std::size_t upper = dsatur_upper_bound(cg);
    for (std::size_t k = lower; k < upper; ++k) {
        UniformSearch search(cg, k, cfg);
        if (search.run()) return k;
    }
    return upper;
}

}  // namespace strongce
