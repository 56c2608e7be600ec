#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "strongce/coloring.hpp"
#include "strongce/graph.hpp"

namespace strongce {

struct SearchConfig {
    std::uint64_t node_limit = 50'000'000;
    std::chrono::milliseconds time_limit{60'000};
    /// Branch on the most constrained edge (smallest remaining domain) instead
    /// of the lowest id.
    bool saturation_ordering = true;
};

/// Exhaustively completes `pc` on `free_edges` (all uncolored) with forward
/// checking. Returns false, leaving `pc` unchanged, when no completion exists.
/// Throws LimitExceeded when the budget runs out.
bool complete_by_search(PartialColoring& pc, std::span<const EdgeId> free_edges,
                        const SearchConfig& cfg = {});

/// A strong coloring with c(e) in L(e) for all e, or nullopt.
std::optional<std::vector<ColorId>> list_colorable(const MultiGraph& g, const ListAssignment& lists,
                                                   const SearchConfig& cfg = {});

/// Uniform lists {1..k}; colors are introduced in order to break symmetry.
bool is_strongly_k_colorable(const MultiGraph& g, std::size_t k, const SearchConfig& cfg = {});

/// Exact strong chromatic index by iterative deepening between a greedy
/// clique lower bound and a DSATUR upper bound.
std::size_t exact_strong_chromatic_index(const MultiGraph& g, const SearchConfig& cfg = {});

}  // namespace strongce
