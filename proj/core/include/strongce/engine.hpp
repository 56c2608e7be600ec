#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "strongce/coloring.hpp"
#include "strongce/exact.hpp"
#include "strongce/graph.hpp"

namespace strongce {

// Structure witnesses, in dispatch priority order.
struct LowDegree {
    VertexId vertex;
    std::size_t degree;
};
struct LoopAt {
    VertexId vertex;
    EdgeId loop;
};
struct ParallelPair {
    VertexId vertex;
    EdgeId first;
    EdgeId second;
};
struct Cycle3 {
    Cycle cycle;
};
struct Cycle4 {
    Cycle cycle;
};
struct Cycle5 {
    Cycle cycle;
};
struct RegularGirth6 {
    VertexId vertex;
};

using StructureClass =
    std::variant<LowDegree, LoopAt, ParallelPair, Cycle3, Cycle4, Cycle5, RegularGirth6>;

enum class Handler { LowDegree, Loop, ParallelPair, Cycle3, Cycle4, Cycle5, RegularGirth6, Fallback };

std::string_view handler_name(Handler h);
Handler handler_of(const StructureClass& s);

/// First structure present in priority order LowDegree > LoopAt > ParallelPair
/// > Cycle3 > Cycle4 > Cycle5 > RegularGirth6. Requires max degree <= 4 and a
/// connected edge set (isolated vertices aside from a lone vertex are rejected).
StructureClass classify(const MultiGraph& g);

/// A counting bound checked while a handler runs.
struct BoundCheck {
    std::string label;
    long observed = 0;
    long bound = 0;
    bool upper = true;  // observed <= bound when true, observed >= bound otherwise

    bool ok() const noexcept { return upper ? observed <= bound : observed >= bound; }
};

struct ColoringOutcome {
    std::vector<ColorId> coloring;
    /// One entry per component with edges, in component order.
    std::vector<Handler> handlers;
    /// 0: the structural procedure finished alone; 1: local exhaustive repair;
    /// 2: global recoloring.
    int fallback_depth = 0;
    std::vector<std::string> trace;
    std::vector<BoundCheck> checks;

    bool checks_hold() const;
};

struct EngineOptions {
    std::uint64_t seed = 0;
    SearchConfig search{};
    /// Lists shorter than 22 are accepted and colored by search only.
    bool allow_short_lists = false;
};

/// Edges around a 4-cycle v0 v1 v2 v3. cycle_edges[i] joins v_i and v_{i+1};
/// pendants[i] are the two non-cycle edges at v_i and far_ends[i] their other
/// endpoints. Pack p consists of the pendants at v_p and v_{p+2}.
struct FourCycleContext {
    std::array<VertexId, 4> vertices{};
    std::array<EdgeId, 4> cycle_edges{};
    std::array<std::array<EdgeId, 2>, 4> pendants{};
    std::array<std::array<VertexId, 2>, 4> far_ends{};
    /// Pendant pairs at opposite cycle vertices sharing their far endpoint.
    std::vector<std::pair<EdgeId, EdgeId>> adjacent_pairs;
    /// Per pack, the edges joining far endpoints of an opposite pendant pair.
    std::array<std::vector<EdgeId>, 2> diagonals;

    std::vector<EdgeId> pack(int p) const;
    /// The 4 cycle edges followed by the 8 pendants.
    std::vector<EdgeId> local_edges() const;
};

/// Requires a simple 4-regular graph without triangles and a 4-cycle of it.
FourCycleContext analyze_4cycle(const MultiGraph& g, const Cycle& c);

/// Spokes e_1..e_4 of v in incidence order and A_i, the three other edges at
/// the far end of e_i, with union_lists[i] the union of the lists over A_i.
struct VertexContext {
    VertexId center = 0;
    std::array<EdgeId, 4> spokes{};
    std::array<std::array<EdgeId, 3>, 4> sets{};
    std::array<std::vector<ColorId>, 4> union_lists;
};

/// Requires a simple 4-regular graph of girth >= 6.
VertexContext vertex_context(const MultiGraph& g, const ListAssignment& lists, VertexId v);

// Structure handlers. Each expects a connected graph with max degree <= 4 and
// lists of size >= 22 (longer lists are truncated to their first 22 colors),
// and returns a verified coloring, repairing with fallback_backtrack when a
// step of the structural argument does not go through.
ColoringOutcome handle_low_degree(const MultiGraph& g, const ListAssignment& lists, VertexId v,
                                  const EngineOptions& opts = {});
ColoringOutcome handle_nonsimple(const MultiGraph& g, const ListAssignment& lists,
                                 const StructureClass& witness, const EngineOptions& opts = {});
ColoringOutcome handle_3cycle(const MultiGraph& g, const ListAssignment& lists, const Cycle& c,
                              const EngineOptions& opts = {});
ColoringOutcome handle_4cycle(const MultiGraph& g, const ListAssignment& lists, const Cycle& c,
                              const EngineOptions& opts = {});
ColoringOutcome handle_5cycle(const MultiGraph& g, const ListAssignment& lists, const Cycle& c,
                              const EngineOptions& opts = {});
ColoringOutcome handle_regular_girth6(const MultiGraph& g, const ListAssignment& lists,
                                      VertexId v, const EngineOptions& opts = {});

/// Completes `partial` (one entry per edge, nullopt = uncolored; every edge in
/// `uncolored` must be nullopt). Exhaustive search over the uncolored edges
/// first, widening to their neighborhoods twice (depth 1); then recolors the
/// whole graph from scratch with randomized greedy restarts and a full search
/// (depth 2). Throws ColoringExhausted when no coloring is found.
ColoringOutcome fallback_backtrack(const MultiGraph& g, const ListAssignment& lists,
                                   std::span<const std::optional<ColorId>> partial,
                                   std::span<const EdgeId> uncolored, const EngineOptions& opts = {});

/// Colors every component by its structure class. Throws PreconditionError for
/// max degree > 4 or lists shorter than 22 (unless allowed by `opts`).
ColoringOutcome strong_list_color(const MultiGraph& g, const ListAssignment& lists,
                                  const EngineOptions& opts = {});

}  // namespace strongce
