#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "strongce/coloring.hpp"
#include "strongce/graph.hpp"

namespace strongce {

/// Edges ordered farthest-first from a center (a vertex or a cycle). Edges in
/// the same distance class are in ascending id order; unreachable edges come first.
struct CompatibleOrder {
    std::vector<EdgeId> edges;
    std::vector<std::size_t> distance_class;  // parallel to `edges`
};

/// All edges not incident to v, minus `excluded`.
CompatibleOrder compatible_order_vertex(const MultiGraph& g, VertexId v,
                                        std::span<const EdgeId> excluded = {});

/// All edges not on `cycle`, minus `excluded`.
CompatibleOrder compatible_order_cycle(const MultiGraph& g, const Cycle& cycle,
                                       std::span<const EdgeId> excluded = {});

struct GreedyStep {
    EdgeId edge;
    std::size_t colored_neighborhood;  // |N'(e)| just before coloring
    std::size_t available;             // |L'(e)| just before coloring
    ColorId color;
};

struct GreedyFailure {
    EdgeId edge;
    std::vector<ColorId> available;
};

struct GreedyResult {
    std::optional<GreedyFailure> failure;
    std::size_t colored = 0;
    std::size_t max_colored_neighborhood = 0;

    bool ok() const noexcept { return !failure.has_value(); }
};

using StepObserver = std::function<void(const GreedyStep&)>;

/// Colors each edge of `order` with its first available color. Stops at the
/// first edge with an empty available list. Edges already colored are skipped.
GreedyResult greedy_color(PartialColoring& pc, std::span<const EdgeId> order,
                          const StepObserver& observer = {});

/// Greedy over a compatible order, asserting |N'(e)| <= bound at every step.
/// Throws InternalGuaranteeViolated if the bound or the greedy fails.
GreedyResult color_guaranteed(PartialColoring& pc, std::span<const EdgeId> order, std::size_t bound,
                              const StepObserver& observer = {});

/// Colors every edge not incident to v. Requires max degree <= 4 and lists of
/// size >= 21; every step satisfies |N'(e)| <= 20.
PartialColoring color_all_but_vertex(const MultiGraph& g, const ListAssignment& lists, VertexId v,
                                     const StepObserver& observer = {});

/// Colors every edge off the cycle C (|C| >= 3). Same preconditions and bound
/// as color_all_but_vertex.
PartialColoring color_all_but_cycle(const MultiGraph& g, const ListAssignment& lists,
                                    const Cycle& cycle, const StepObserver& observer = {});

/// For each edge e_i = (v, u_i) at v, the edges at u_i other than e_i.
/// Spokes are in incidence order of v.
struct SpokeSets {
    std::vector<EdgeId> spokes;
    std::vector<std::vector<EdgeId>> sets;
};
SpokeSets spoke_sets(const MultiGraph& g, VertexId v);

struct Precolor {
    EdgeId edge;
    ColorId color;
};

/// Precolors at most one edge from each spoke set of v and colors the rest of
/// G - v. Requires a 4-regular simple graph of girth >= 6 and lists of size
/// >= 22; every step satisfies |N'(e)| <= 21.
PartialColoring color_with_precolored(const MultiGraph& g, const ListAssignment& lists, VertexId v,
                                      std::span<const Precolor> precolored,
                                      const StepObserver& observer = {});

}  // namespace strongce
