#include "strongce/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "strongce/errors.hpp"

namespace strongce {

namespace {

CompatibleOrder order_from_sources(const MultiGraph& g, std::span<const VertexId> sources,
                                   const std::vector<char>& skip) {
    auto dist = bfs_distances(g, sources);
    CompatibleOrder out;
    std::vector<std::pair<std::size_t, EdgeId>> keyed;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (skip[e]) continue;
        const Edge& ed = g.edge(e);
        keyed.emplace_back(std::min(dist[ed.u], dist[ed.v]), e);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto [d, e] : keyed) {
        out.edges.push_back(e);
        out.distance_class.push_back(d);
    }
    return out;
}

void check_greedy_preconditions(const MultiGraph& g, const ListAssignment& lists,
                                    std::size_t min_list) {
    if (max_degree(g) > 4) throw PreconditionError("maximum degree exceeds 4");
    if (lists.size() != g.edge_count()) throw PreconditionError("list assignment size mismatch");
    if (g.edge_count() > 0 && lists.min_list_size() < min_list) {
        throw PreconditionError("some list has fewer than " + std::to_string(min_list) + " colors");
    }
}

}  // namespace

CompatibleOrder compatible_order_vertex(const MultiGraph& g, VertexId v,
                                        std::span<const EdgeId> excluded) {
    if (v >= g.vertex_count()) throw GraphError("vertex out of range");
    std::vector<char> skip(g.edge_count(), 0);
    for (EdgeId e : g.incident(v)) skip[e] = 1;
    for (EdgeId e : excluded) skip.at(e) = 1;
    const VertexId src[] = {v};
    return order_from_sources(g, src, skip);
}

CompatibleOrder compatible_order_cycle(const MultiGraph& g, const Cycle& cycle,
                                       std::span<const EdgeId> excluded) {
    if (!is_cycle(g, cycle)) throw PreconditionError("compatible_order_cycle: not a cycle of g");
    std::vector<char> skip(g.edge_count(), 0);
    for (EdgeId e : cycle.edges) skip[e] = 1;
    for (EdgeId e : excluded) skip.at(e) = 1;
    return order_from_sources(g, cycle.vertices, skip);
}

GreedyResult greedy_color(PartialColoring& pc, std::span<const EdgeId> order,
                          const StepObserver& observer) {
    GreedyResult result;
    for (EdgeId e : order) {
        if (pc.is_colored(e)) continue;
        auto avail = pc.available_colors(e);
        const std::size_t nprime = pc.colored_neighborhood_size(e);
        result.max_colored_neighborhood = std::max(result.max_colored_neighborhood, nprime);
        if (avail.empty()) {
            result.failure = GreedyFailure{e, {}};
            return result;
        }
        if (observer) observer({e, nprime, avail.size(), avail.front()});
        pc.assign(e, avail.front());
        ++result.colored;
    }
    return result;
}

GreedyResult color_guaranteed(PartialColoring& pc, std::span<const EdgeId> order, std::size_t bound,
                              const StepObserver& observer) {
    auto checked = [&](const GreedyStep& step) {
        if (step.colored_neighborhood > bound) {
            throw InternalGuaranteeViolated(
                "edge " + std::to_string(step.edge) + " had " +
                std::to_string(step.colored_neighborhood) +
                " colored neighbors, bound is " + std::to_string(bound));
        }
        if (observer) observer(step);
    };
    auto result = greedy_color(pc, order, checked);
    if (!result.ok()) {
        throw InternalGuaranteeViolated("greedy coloring stuck at edge " +
                                        std::to_string(result.failure->edge));
    }
    return result;
}

PartialColoring color_all_but_vertex(const MultiGraph& g, const ListAssignment& lists, VertexId v,
                                     const StepObserver& observer) {
    check_greedy_preconditions(g, lists, 21);
    PartialColoring pc(g, lists);
    auto order = compatible_order_vertex(g, v);
    color_guaranteed(pc, order.edges, 20, observer);
    return pc;
}

PartialColoring color_all_but_cycle(const MultiGraph& g, const ListAssignment& lists,
                                    const Cycle& cycle, const StepObserver& observer) {
    check_greedy_preconditions(g, lists, 21);
    if (cycle.length() < 3) throw PreconditionError("cycle must have length at least 3");
    PartialColoring pc(g, lists);
    auto order = compatible_order_cycle(g, cycle);
    color_guaranteed(pc, order.edges, 20, observer);
    return pc;
}

SpokeSets spoke_sets(const MultiGraph& g, VertexId v) {
    SpokeSets out;
    for (EdgeId e : g.incident(v)) {
        if (std::find(out.spokes.begin(), out.spokes.end(), e) != out.spokes.end()) continue;
        out.spokes.push_back(e);
        VertexId u = g.edge(e).other(v);
        std::vector<EdgeId> set;
        for (EdgeId f : g.incident(u)) {
            if (f != e && std::find(set.begin(), set.end(), f) == set.end()) set.push_back(f);
        }
        out.sets.push_back(std::move(set));
    }
    return out;
}

PartialColoring color_with_precolored(const MultiGraph& g, const ListAssignment& lists, VertexId v,
                                      std::span<const Precolor> precolored,
                                      const StepObserver& observer) {
    check_greedy_preconditions(g, lists, 22);
    if (v >= g.vertex_count()) throw GraphError("vertex out of range");
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
        if (g.degree(w) != 4) throw PreconditionError("graph is not 4-regular");
    }
    if (!g.is_simple()) throw PreconditionError("graph is not simple");
    auto girth = girth_and_witness(g).girth;
    if (girth && *girth < 6) throw PreconditionError("graph has girth below 6");

    auto spokes = spoke_sets(g, v);
    std::vector<int> hits(spokes.sets.size(), 0);
    for (const auto& p : precolored) {
        bool found = false;
        for (std::size_t i = 0; i < spokes.sets.size(); ++i) {
            const auto& s = spokes.sets[i];
            if (std::find(s.begin(), s.end(), p.edge) != s.end()) {
                ++hits[i];
                found = true;
            }
        }
        if (!found) {
            throw PreconditionError("precolored edge " + std::to_string(p.edge) +
                                    " is not adjacent to a spoke of the center");
        }
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h > 1; })) {
        throw PreconditionError("at most one precolored edge per spoke set");
    }

    PartialColoring pc(g, lists);
    for (const auto& p : precolored) {
        try {
            pc.assign(p.edge, p.color);
        } catch (const ColorConflict& c) {
            throw PreconditionError(std::string("invalid precoloring: ") + c.what());
        }
    }
    auto order = compatible_order_vertex(g, v);
    color_guaranteed(pc, order.edges, 21, observer);
    return pc;
}

}  // namespace strongce
