#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "strongce/graph.hpp"

namespace strongce {

using ColorId = std::uint32_t;

/// Per-edge ordered color lists. Colors within one list are distinct.
class ListAssignment {
public:
    ListAssignment() = default;
    /// Throws PreconditionError on a duplicate color within a list.
    explicit ListAssignment(std::vector<std::vector<ColorId>> lists);

    /// Every edge gets {1, ..., k}.
    static ListAssignment uniform(std::size_t edge_count, std::size_t k);

    std::size_t size() const noexcept { return lists_.size(); }
    const std::vector<ColorId>& operator[](EdgeId e) const { return lists_.at(e); }
    std::span<const std::vector<ColorId>> lists() const noexcept { return lists_; }

    bool contains(EdgeId e, ColorId c) const;
    std::size_t min_list_size() const;

    /// Keeps the first k colors of every list (lists shorter than k are kept whole).
    ListAssignment truncated(std::size_t k) const;
    /// Lists for a subset of edges, in the order given.
    ListAssignment restricted(std::span<const EdgeId> edges) const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::vector<std::vector<ColorId>> lists_;
};

/// Thrown by PartialColoring::assign when the color is unavailable.
class ColorConflict : public std::runtime_error {
public:
    ColorConflict(EdgeId edge, ColorId color, std::optional<EdgeId> clashing, std::string what)
        : std::runtime_error(std::move(what)), edge_(edge), color_(color), clashing_(clashing) {}
    EdgeId edge() const noexcept { return edge_; }
    ColorId color() const noexcept { return color_; }
    /// The neighbor already holding the color; nullopt when the color is not in L(e).
    std::optional<EdgeId> clashing_edge() const noexcept { return clashing_; }

private:
    EdgeId edge_;
    ColorId color_;
    std::optional<EdgeId> clashing_;
};

/// An evolving strong list coloring. Every assigned color is in its edge's list
/// and no two edges at distance <= 1 share a color; assign() enforces both.
/// Holds references to the graph and lists, which must outlive it.
class PartialColoring {
public:
    PartialColoring(const MultiGraph& g, const ListAssignment& lists);

    const MultiGraph& graph() const noexcept { return *graph_; }
    const ListAssignment& lists() const noexcept { return *lists_; }

    bool is_colored(EdgeId e) const { return colors_.at(e).has_value(); }
    std::optional<ColorId> color(EdgeId e) const { return colors_.at(e); }
    std::span<const std::optional<ColorId>> colors() const noexcept { return colors_; }

    /// L'(e): colors of L(e) unused on N(e), in list order. Throws
    /// PreconditionError if e is already colored.
    std::vector<ColorId> available_colors(EdgeId e) const;
    /// |N'(e)|, the number of colored edges in N(e).
    std::size_t colored_neighborhood_size(EdgeId e) const;

    void assign(EdgeId e, ColorId c);
    void unassign(EdgeId e);

    std::size_t colored_count() const noexcept { return colored_; }
    bool complete() const noexcept { return colored_ == colors_.size(); }
    std::vector<EdgeId> uncolored_edges() const;

    /// The full coloring; throws PreconditionError if some edge is uncolored.
    std::vector<ColorId> to_vector() const;

    friend bool operator==(const PartialColoring& a, const PartialColoring& b) {
        return a.graph_ == b.graph_ && a.lists_ == b.lists_ && a.colors_ == b.colors_;
    }

private:
    const MultiGraph* graph_;
    const ListAssignment* lists_;
    std::vector<std::optional<ColorId>> colors_;
    std::size_t colored_ = 0;
};

struct Violation {
    enum class Kind { Conflict, List, Uncolored };
    Kind kind;
    EdgeId first;
    EdgeId second;  // equals `first` for List and Uncolored
    ColorId color;

    std::string describe() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// nullopt when `coloring` is a strong coloring with every color from its list.
/// Otherwise the first violation scanning edges in id order: an edge's own
/// list violation is reported before its conflicts with higher-id edges.
std::optional<Violation> verify_strong(const MultiGraph& g, const ListAssignment& lists,
                                       std::span<const ColorId> coloring);

/// As verify_strong, but only pairs of colored edges are checked.
std::optional<Violation> verify_partial(const PartialColoring& pc);

}  // namespace strongce
