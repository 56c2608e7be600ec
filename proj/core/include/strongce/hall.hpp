#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strongce/coloring.hpp"

namespace strongce {

/// Maximum matching between list owners (left, by index) and colors (right).
struct Matching {
    std::vector<std::optional<ColorId>> assignment;  // per left index
    std::size_t size = 0;
};

/// Augmenting-path matching; deterministic in list order.
Matching max_bipartite_matching(std::span<const std::vector<ColorId>> lists);

/// Pairwise distinct representatives, one per list, or nullopt.
std::optional<std::vector<ColorId>> find_sdr(std::span<const std::vector<ColorId>> lists);

/// A nonempty subset with disc = |subset| - |union of its lists| maximal.
/// `members` are indices into the input (or edge ids for the edge-level overload).
struct DiscrepancyReport {
    std::vector<std::uint32_t> members;
    std::vector<ColorId> union_colors;
    long disc = 0;
};

/// Exact for any size: the deficiency version of Hall's theorem gives the
/// maximizer when it is positive (the Konig set of a maximum matching);
/// otherwise each element is forced into the set by duplicating it.
DiscrepancyReport max_discrepancy(std::span<const std::vector<ColorId>> lists);

/// SDR over the current available lists of the uncolored edges T.
std::optional<std::vector<ColorId>> sdr_completion(const PartialColoring& pc,
                                                   std::span<const EdgeId> uncolored);

/// Max-discrepancy subset of T (|T| <= 32) w.r.t. current available lists.
DiscrepancyReport max_discrepancy_set(const PartialColoring& pc, std::span<const EdgeId> uncolored);

/// Colors the max-discrepancy subset S of T. Returns false if it cannot.
using SubsetColorer = std::function<bool(PartialColoring&, const DiscrepancyReport&)>;

struct ExtensionResult {
    bool ok = false;
    DiscrepancyReport subset;
    std::string failure;
};

/// Colors S via `colorer`, then completes T \ S with distinct representatives.
/// When no subset has positive discrepancy the colorer is skipped and T is
/// completed directly. On failure `pc` keeps whatever was colored so far.
ExtensionResult color_max_disc_then_extend(PartialColoring& pc, std::span<const EdgeId> uncolored,
                                           const SubsetColorer& colorer);

}  // namespace strongce
