#include <algorithm>

#include "engine_detail.hpp"
#include "strongce/errors.hpp"

namespace strongce {

using detail::Run;

namespace {

// Colors `edges` in order, checking |N'(e)| <= bounds[i] just before each.
bool finish_center(Run& r, std::span<const EdgeId> edges, std::span<const long> bounds,
                   const std::string& what) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const EdgeId e = edges[i];
        const std::string label = what + " edge " + std::to_string(e);
        r.at_most(label + ": |N'(e)|", static_cast<long>(r.pc.colored_neighborhood_size(e)), bounds[i]);
        const auto avail = r.pc.available_colors(e);
        r.at_least(label + ": |L'(e)|", static_cast<long>(avail.size()), 1);
        if (avail.empty()) return false;
        r.pc.assign(e, avail.front());
    }
    return true;
}

}  // namespace

ColoringOutcome handle_low_degree(const MultiGraph& g, const ListAssignment& lists, VertexId v,
                                  const EngineOptions& opts) {
    detail::require_basic(g, lists);
    if (v >= g.vertex_count()) throw GraphError("vertex out of range");
    if (g.degree(v) > 3) throw PreconditionError("center vertex must have degree at most 3");

    Run r(g, lists, Handler::LowDegree, opts);
    r.note("low degree: vertex " + std::to_string(v) + " of degree " + std::to_string(g.degree(v)));
    const auto order = compatible_order_vertex(g, v);
    if (r.greedy_bounded(order.edges, 20, "compatible greedy")) {
        auto center = detail::edges_at(g, v);
        const long n = static_cast<long>(center.size());
        for (long k = 1; k <= n; ++k) {
            // The edge with the fewest remaining colors goes next.
            auto it = std::min_element(center.begin(), center.end(), [&](EdgeId a, EdgeId b) {
                return std::pair(r.available(a), a) < std::pair(r.available(b), b);
            });
            const EdgeId e = *it;
            center.erase(it);
            const long bound = 20 - (n - k);
            if (!finish_center(r, std::span(&e, 1), std::span(&bound, 1), "center")) break;
        }
    }
    return r.finish();
}

ColoringOutcome handle_nonsimple(const MultiGraph& g, const ListAssignment& lists,
                                 const StructureClass& witness, const EngineOptions& opts) {
    detail::require_basic(g, lists);
    std::vector<EdgeId> finishing;
    std::vector<long> bounds;
    VertexId v = 0;
    Handler kind;
    std::string header;

    if (const auto* w = std::get_if<LoopAt>(&witness)) {
        v = w->vertex;
        kind = Handler::Loop;
        if (w->loop >= g.edge_count() || !g.edge(w->loop).is_loop() || g.edge(w->loop).u != v) {
            throw PreconditionError("witness is not a loop at the given vertex");
        }
        std::vector<EdgeId> loops;
        for (EdgeId e : detail::edges_at(g, v)) (g.edge(e).is_loop() ? loops : finishing).push_back(e);
        // Non-loop edges first (at most 15 and 16 colored neighbors), loops last (at most 8).
        for (std::size_t i = 0; i < finishing.size(); ++i) bounds.push_back(15 + static_cast<long>(std::min<std::size_t>(i, 1)));
        for (EdgeId e : loops) {
            finishing.push_back(e);
            bounds.push_back(8);
        }
        header = "loop " + std::to_string(w->loop) + " at vertex " + std::to_string(v);
    } else if (const auto* w = std::get_if<ParallelPair>(&witness)) {
        v = w->vertex;
        kind = Handler::ParallelPair;
        const auto check = [&](EdgeId e) {
            return e < g.edge_count() && g.edge(e).touches(v) && !g.edge(e).is_loop();
        };
        if (w->first == w->second || !check(w->first) || !check(w->second) ||
            g.edge(w->first).other(v) != g.edge(w->second).other(v)) {
            throw PreconditionError("witness is not a parallel pair at the given vertex");
        }
        for (EdgeId e : detail::edges_at(g, v)) {
            if (e != w->first && e != w->second) finishing.push_back(e);
        }
        static constexpr long kOther[] = {17, 18};
        for (std::size_t i = 0; i < finishing.size(); ++i) bounds.push_back(kOther[std::min<std::size_t>(i, 1)]);
        finishing.push_back(w->first);
        bounds.push_back(16);
        finishing.push_back(w->second);
        bounds.push_back(17);
        header = "parallel pair " + std::to_string(w->first) + " " + std::to_string(w->second) +
                 " at vertex " + std::to_string(v);
    } else {
        throw PreconditionError("witness must be a loop or a parallel pair");
    }

    Run r(g, lists, kind, opts);
    r.note(header);
    const auto order = compatible_order_vertex(g, v);
    if (r.greedy_bounded(order.edges, 20, "compatible greedy")) {
        r.note("center order " + detail::join(finishing));
        finish_center(r, finishing, bounds, "center");
    }
    return r.finish();
}

ColoringOutcome handle_3cycle(const MultiGraph& g, const ListAssignment& lists, const Cycle& c,
                              const EngineOptions& opts) {
    detail::require_basic(g, lists);
    if (!g.is_simple()) throw PreconditionError("graph is not simple");
    if (c.length() != 3 || !is_cycle(g, c)) throw PreconditionError("witness is not a 3-cycle");

    Run r(g, lists, Handler::Cycle3, opts);
    r.note("triangle " + detail::join(c.edges));
    const auto order = compatible_order_cycle(g, c);
    if (r.greedy_bounded(order.edges, 20, "compatible greedy")) {
        for (EdgeId e : c.edges) {
            r.at_most("triangle edge " + std::to_string(e) + ": |N(e)|",
                      static_cast<long>(g.neighborhood(e).size()), 20);
            r.at_least("triangle edge " + std::to_string(e) + ": |L'(e)| before finishing",
                       static_cast<long>(r.available(e)), 4);
        }
        r.greedy(c.edges);
    }
    return r.finish();
}

}  // namespace strongce
