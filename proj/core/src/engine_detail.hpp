#pragma once

#include <span>
#include <string>
#include <vector>

#include "strongce/engine.hpp"
#include "strongce/ordering.hpp"

namespace strongce::detail {

inline constexpr std::size_t kListSize = 22;

// Working state of one handler invocation. Owns the truncated lists that the
// partial coloring points into, so it is pinned in place.
class Run {
public:
    Run(const MultiGraph& g, const ListAssignment& lists, Handler handler, const EngineOptions& opts);
    Run(const Run&) = delete;
    Run& operator=(const Run&) = delete;

    const MultiGraph& g;
    const ListAssignment& original;
    ListAssignment lists;
    PartialColoring pc;
    const EngineOptions& opts;
    ColoringOutcome out;

    void note(std::string line) { out.trace.push_back(std::move(line)); }
    void at_most(std::string label, long observed, long bound);
    void at_least(std::string label, long observed, long bound);

    /// Greedy over a compatible order with the |N'(e)| <= bound invariant
    /// recorded as a single check. Returns false on a stuck edge or a bound
    /// breach, leaving the rest for the fallback.
    bool greedy_bounded(std::span<const EdgeId> order, std::size_t bound, const std::string& label);

    /// Colors `edges` in the given order with their first available color.
    bool greedy(std::span<const EdgeId> edges);

    std::size_t available(EdgeId e) const { return pc.available_colors(e).size(); }

    /// Finalizes: repairs any uncolored edges, verifies, and moves the outcome out.
    ColoringOutcome finish();
};

/// Shared handler preconditions: one list per edge, max degree <= 4, lists of
/// at least 22 colors.
void require_basic(const MultiGraph& g, const ListAssignment& lists);

/// Distinct edges at v in incidence order.
std::vector<EdgeId> edges_at(const MultiGraph& g, VertexId v);

/// Local then global repair of r.pc; updates r.out.fallback_depth.
void repair(Run& r);

std::string join(std::span<const EdgeId> edges);

}  // namespace strongce::detail
