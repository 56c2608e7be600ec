#include "strongce/engine.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "engine_detail.hpp"
#include "strongce/errors.hpp"

namespace strongce {

namespace detail {

Run::Run(const MultiGraph& graph, const ListAssignment& input, Handler handler,
         const EngineOptions& options)
    : g(graph),
      original(input),
      lists(handler == Handler::Fallback ? input : input.truncated(kListSize)),
      pc(graph, lists),
      opts(options) {
    out.handlers.push_back(handler);
}

void Run::at_most(std::string label, long observed, long bound) {
    out.checks.push_back({std::move(label), observed, bound, true});
}

void Run::at_least(std::string label, long observed, long bound) {
    out.checks.push_back({std::move(label), observed, bound, false});
}

bool Run::greedy_bounded(std::span<const EdgeId> order, std::size_t bound, const std::string& label) {
    auto result = greedy_color(pc, order);
    at_most(label + ": max |N'(e)|", static_cast<long>(result.max_colored_neighborhood),
            static_cast<long>(bound));
    if (!result.ok()) {
        note(label + ": stuck at edge " + std::to_string(result.failure->edge));
        return false;
    }
    return true;
}

bool Run::greedy(std::span<const EdgeId> edges) {
    auto result = greedy_color(pc, edges);
    if (!result.ok()) {
        note("stuck at edge " + std::to_string(result.failure->edge));
        return false;
    }
    return true;
}

ColoringOutcome Run::finish() {
    if (!pc.complete()) repair(*this);
    out.coloring = pc.to_vector();
    if (auto bad = verify_strong(g, original, out.coloring)) {
        throw InternalGuaranteeViolated("engine produced an invalid coloring: " + bad->describe());
    }
    return std::move(out);
}

namespace {

void clear_all(PartialColoring& pc) {
    for (EdgeId e = 0; e < pc.graph().edge_count(); ++e) {
        if (pc.is_colored(e)) pc.unassign(e);
    }
}

// A compatible order around a random vertex with ties shuffled, followed by
// the vertex's own edges.
std::vector<EdgeId> random_order(const MultiGraph& g, std::mt19937_64& rng) {
    std::vector<VertexId> touched;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) > 0) touched.push_back(v);
    }
    const VertexId v = touched[std::uniform_int_distribution<std::size_t>(0, touched.size() - 1)(rng)];
    auto order = compatible_order_vertex(g, v);
    auto& edges = order.edges;
    for (std::size_t i = 0; i < edges.size();) {
        std::size_t j = i;
        while (j < edges.size() && order.distance_class[j] == order.distance_class[i]) ++j;
        std::shuffle(edges.begin() + static_cast<long>(i), edges.begin() + static_cast<long>(j), rng);
        i = j;
    }
    std::vector<EdgeId> center;
    for (EdgeId e : g.incident(v)) {
        if (std::find(center.begin(), center.end(), e) == center.end()) center.push_back(e);
    }
    std::shuffle(center.begin(), center.end(), rng);
    edges.insert(edges.end(), center.begin(), center.end());
    return edges;
}

bool local_repair(Run& r) {
    auto region = r.pc.uncolored_edges();
    SearchConfig cfg = r.opts.search;
    cfg.node_limit = std::min<std::uint64_t>(cfg.node_limit, 2'000'000);
    std::vector<char> inside(r.g.edge_count(), 0);
    for (EdgeId e : region) inside[e] = 1;
    for (int ring = 0;; ++ring) {
        try {
            if (complete_by_search(r.pc, region, cfg)) {
                r.note("local search completed " + std::to_string(region.size()) + " edges");
                return true;
            }
            r.note("local search over " + std::to_string(region.size()) + " edges has no completion");
        } catch (const LimitExceeded& e) {
            r.note(std::string("local search: ") + e.what());
        }
        if (ring == 2) return false;
        const auto frontier = region;
        for (EdgeId e : frontier) {
            for (EdgeId f : r.g.neighborhood(e)) {
                if (inside[f]) continue;
                inside[f] = 1;
                r.pc.unassign(f);
                region.push_back(f);
            }
        }
    }
}

void global_repair(Run& r) {
    clear_all(r.pc);
    std::mt19937_64 rng(r.opts.seed);
    constexpr int kRestarts = 64;
    for (int attempt = 0; attempt < kRestarts; ++attempt) {
        auto order = random_order(r.g, rng);
        if (greedy_color(r.pc, order).ok() && r.pc.complete()) {
            r.note("global greedy restart " + std::to_string(attempt) + " succeeded");
            return;
        }
        clear_all(r.pc);
    }
    std::vector<EdgeId> all(r.g.edge_count());
    std::iota(all.begin(), all.end(), EdgeId{0});
    try {
        if (complete_by_search(r.pc, all, r.opts.search)) {
            r.note("global search succeeded");
            return;
        }
    } catch (const LimitExceeded& e) {
        throw ColoringExhausted(std::string("global search gave up: ") + e.what());
    }
    std::string msg = "no strong list coloring exists for this instance";
    for (const auto& line : r.out.trace) msg += "\n  " + line;
    throw ColoringExhausted(msg);
}

}  // namespace

void repair(Run& r) {
    if (r.pc.complete()) return;
    if (local_repair(r)) {
        r.out.fallback_depth = std::max(r.out.fallback_depth, 1);
        return;
    }
    global_repair(r);
    r.out.fallback_depth = 2;
}

void require_basic(const MultiGraph& g, const ListAssignment& lists) {
    if (lists.size() != g.edge_count()) throw PreconditionError("one list per edge is required");
    if (max_degree(g) > 4) throw PreconditionError("maximum degree exceeds 4");
    if (g.edge_count() > 0 && lists.min_list_size() < kListSize) {
        throw PreconditionError("lists must have at least 22 colors");
    }
}

std::vector<EdgeId> edges_at(const MultiGraph& g, VertexId v) {
    std::vector<EdgeId> out;
    for (EdgeId e : g.incident(v)) {
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    return out;
}

std::string join(std::span<const EdgeId> edges) {
    std::string s;
    for (EdgeId e : edges) {
        if (!s.empty()) s += ' ';
        s += std::to_string(e);
    }
    return s;
}

}  // namespace detail

std::string_view handler_name(Handler h) {
    switch (h) {
        case Handler::LowDegree: return "low-degree";
        case Handler::Loop: return "loop";
        case Handler::ParallelPair: return "parallel-pair";
        case Handler::Cycle3: return "cycle-3";
        case Handler::Cycle4: return "cycle-4";
        case Handler::Cycle5: return "cycle-5";
        case Handler::RegularGirth6: return "regular-girth-6";
        case Handler::Fallback: return "fallback";
    }
    return "unknown";
}

Handler handler_of(const StructureClass& s) {
    static constexpr Handler kByIndex[] = {Handler::LowDegree, Handler::Loop,   Handler::ParallelPair,
                                           Handler::Cycle3,    Handler::Cycle4, Handler::Cycle5,
                                           Handler::RegularGirth6};
    return kByIndex[s.index()];
}

bool ColoringOutcome::checks_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.ok(); });
}

StructureClass classify(const MultiGraph& g) {
    if (max_degree(g) > 4) throw PreconditionError("maximum degree exceeds 4");
    if (g.vertex_count() > 1 && edge_components(g).size() != 1) {
        throw PreconditionError("graph is not connected");
    }
    for (VertexId v = 0; v < g.vertex_count() && g.vertex_count() > 1; ++v) {
        if (g.degree(v) == 0) throw PreconditionError("graph is not connected");
    }
    auto [v, d] = min_degree_vertex(g);
    if (d < 4) return LowDegree{v, d};
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).is_loop()) return LoopAt{g.edge(e).u, e};
    }
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        const auto inc = g.incident(u);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                if (inc[i] != inc[j] && g.edge(inc[i]).other(u) == g.edge(inc[j]).other(u)) {
                    return ParallelPair{u, std::min(inc[i], inc[j]), std::max(inc[i], inc[j])};
                }
            }
        }
    }
    if (auto c = find_cycle_of_length(g, 3)) return Cycle3{*c};
    if (auto c = find_cycle_of_length(g, 4)) return Cycle4{*c};
    if (auto c = find_cycle_of_length(g, 5)) return Cycle5{*c};
    return RegularGirth6{0};
}

ColoringOutcome fallback_backtrack(const MultiGraph& g, const ListAssignment& lists,
                                   std::span<const std::optional<ColorId>> partial,
                                   std::span<const EdgeId> uncolored, const EngineOptions& opts) {
    if (partial.size() != g.edge_count() || lists.size() != g.edge_count()) {
        throw PreconditionError("partial coloring and lists must cover every edge");
    }
    for (EdgeId e : uncolored) {
        if (e >= g.edge_count()) throw GraphError("edge out of range");
        if (partial[e]) throw PreconditionError("edge " + std::to_string(e) + " is marked uncolored but has a color");
    }
    detail::Run r(g, lists, Handler::Fallback, opts);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!partial[e]) continue;
        try {
            r.pc.assign(e, *partial[e]);
        } catch (const ColorConflict& c) {
            throw PreconditionError(std::string("invalid partial coloring: ") + c.what());
        }
    }
    return r.finish();
}

namespace {

ColoringOutcome dispatch(const MultiGraph& g, const ListAssignment& lists, const StructureClass& s,
                         const EngineOptions& opts) {
    return std::visit(
        [&](const auto& w) -> ColoringOutcome {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, LowDegree>) {
                return handle_low_degree(g, lists, w.vertex, opts);
            } else if constexpr (std::is_same_v<T, LoopAt> || std::is_same_v<T, ParallelPair>) {
                return handle_nonsimple(g, lists, s, opts);
            } else if constexpr (std::is_same_v<T, Cycle3>) {
                return handle_3cycle(g, lists, w.cycle, opts);
            } else if constexpr (std::is_same_v<T, Cycle4>) {
                return handle_4cycle(g, lists, w.cycle, opts);
            } else if constexpr (std::is_same_v<T, Cycle5>) {
                return handle_5cycle(g, lists, w.cycle, opts);
            } else {
                return handle_regular_girth6(g, lists, w.vertex, opts);
            }
        },
        s);
}

ColoringOutcome search_only(const MultiGraph& g, const ListAssignment& lists, const EngineOptions& opts) {
    detail::Run r(g, lists, Handler::Fallback, opts);
    r.note("short lists: coloring by search only");
    return r.finish();
}

}  // namespace

ColoringOutcome strong_list_color(const MultiGraph& g, const ListAssignment& lists,
                                  const EngineOptions& opts) {
    if (lists.size() != g.edge_count()) throw PreconditionError("one list per edge is required");
    if (max_degree(g) > 4) throw PreconditionError("maximum degree exceeds 4");
    const bool short_lists = g.edge_count() > 0 && lists.min_list_size() < detail::kListSize;
    if (short_lists && !opts.allow_short_lists) {
        throw PreconditionError("lists must have at least 22 colors, smallest has " +
                                std::to_string(lists.min_list_size()));
    }

    ColoringOutcome total;
    total.coloring.assign(g.edge_count(), 0);
    const auto components = edge_components(g);
    for (std::size_t k = 0; k < components.size(); ++k) {
        const auto& comp = components[k];
        const auto sub = lists.restricted(comp.edge_map);
        ColoringOutcome part;
        if (short_lists) {
            part = search_only(comp.graph, sub, opts);
        } else {
            const auto s = classify(comp.graph);
            part = dispatch(comp.graph, sub, s, opts);
        }
        for (std::size_t e = 0; e < comp.edge_map.size(); ++e) total.coloring[comp.edge_map[e]] = part.coloring[e];
        total.handlers.insert(total.handlers.end(), part.handlers.begin(), part.handlers.end());
        total.fallback_depth = std::max(total.fallback_depth, part.fallback_depth);
        const std::string prefix = "component " + std::to_string(k) + ": ";
        for (auto& line : part.trace) total.trace.push_back(prefix + line);
        for (auto& c : part.checks) {
            c.label = prefix + c.label;
            total.checks.push_back(std::move(c));
        }
    }
    if (auto bad = verify_strong(g, lists, total.coloring)) {
        throw InternalGuaranteeViolated("combined coloring is invalid: " + bad->describe());
    }
    return total;
}

}  // namespace strongce
