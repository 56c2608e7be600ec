#include "strongce/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "strongce/errors.hpp"

namespace strongce {

ListAssignment::ListAssignment(std::vector<std::vector<ColorId>> lists) : lists_(std::move(lists)) {
    std::vector<ColorId> sorted;
    for (std::size_t e = 0; e < lists_.size(); ++e) {
        sorted = lists_[e];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw PreconditionError("list of edge " + std::to_string(e) + " has a duplicate color");
        }
    }
}

ListAssignment ListAssignment::uniform(std::size_t edge_count, std::size_t k) {
    std::vector<ColorId> base(k);
    std::iota(base.begin(), base.end(), ColorId{1});
    return ListAssignment(std::vector<std::vector<ColorId>>(edge_count, base));
}

bool ListAssignment::contains(EdgeId e, ColorId c) const {
    const auto& l = lists_.at(e);
    return std::find(l.begin(), l.end(), c) != l.end();
}

std::size_t ListAssignment::min_list_size() const {
    std::size_t best = lists_.empty() ? 0 : lists_.front().size();
    for (const auto& l : lists_) best = std::min(best, l.size());
    return best;
}

ListAssignment ListAssignment::truncated(std::size_t k) const {
    auto out = lists_;
    for (auto& l : out) {
        if (l.size() > k) l.resize(k);
    }
    ListAssignment r;
    r.lists_ = std::move(out);
    return r;
}

ListAssignment ListAssignment::restricted(std::span<const EdgeId> edges) const {
    ListAssignment r;
    r.lists_.reserve(edges.size());
    for (EdgeId e : edges) r.lists_.push_back(lists_.at(e));
    return r;
}

PartialColoring::PartialColoring(const MultiGraph& g, const ListAssignment& lists)
    : graph_(&g), lists_(&lists), colors_(g.edge_count()) {
    if (lists.size() != g.edge_count()) {
        throw PreconditionError("list assignment covers " + std::to_string(lists.size()) +
                                " edges, graph has " + std::to_string(g.edge_count()));
    }
}

std::vector<ColorId> PartialColoring::available_colors(EdgeId e) const {
    if (is_colored(e)) {
        throw PreconditionError("available_colors: edge " + std::to_string(e) + " is colored");
    }
    const auto& list = (*lists_)[e];
    std::vector<ColorId> used;
    for (EdgeId f : graph_->neighborhood(e)) {
        if (colors_[f]) used.push_back(*colors_[f]);
    }
    std::sort(used.begin(), used.end());
    std::vector<ColorId> out;
    out.reserve(list.size());
    for (ColorId c : list) {
        if (!std::binary_search(used.begin(), used.end(), c)) out.push_back(c);
    }
    return out;
}

std::size_t PartialColoring::colored_neighborhood_size(EdgeId e) const {
    std::size_t n = 0;
    for (EdgeId f : graph_->neighborhood(e)) n += colors_[f].has_value();
    return n;
}

void PartialColoring::assign(EdgeId e, ColorId c) {
    if (is_colored(e)) {
        throw PreconditionError("assign: edge " + std::to_string(e) + " is already colored");
    }
    if (!lists_->contains(e, c)) {
        throw ColorConflict(e, c, std::nullopt,
                            "color " + std::to_string(c) + " is not in the list of edge " +
                                std::to_string(e));
    }
    for (EdgeId f : graph_->neighborhood(e)) {
        if (colors_[f] == c) {
            throw ColorConflict(e, c, f,
                                "color " + std::to_string(c) + " on edge " + std::to_string(e) +
                                    " clashes with edge " + std::to_string(f));
        }
    }
    colors_[e] = c;
    ++colored_;
}

void PartialColoring::unassign(EdgeId e) {
    if (!is_colored(e)) {
        throw PreconditionError("unassign: edge " + std::to_string(e) + " is not colored");
    }
    colors_[e].reset();
    --colored_;
}

std::vector<EdgeId> PartialColoring::uncolored_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < colors_.size(); ++e) {
        if (!colors_[e]) out.push_back(e);
    }
    return out;
}

std::vector<ColorId> PartialColoring::to_vector() const {
    std::vector<ColorId> out(colors_.size());
    for (EdgeId e = 0; e < colors_.size(); ++e) {
        if (!colors_[e]) {
            throw PreconditionError("coloring is incomplete at edge " + std::to_string(e));
        }
        out[e] = *colors_[e];
    }
    return out;
}

std::string Violation::describe() const {
    switch (kind) {
        case Kind::Conflict:
            return "CONFLICT " + std::to_string(first) + " " + std::to_string(second) + " " +
                   std::to_string(color);
        case Kind::List:
            return "LIST " + std::to_string(first) + " " + std::to_string(color);
        case Kind::Uncolored:
            return "UNCOLORED " + std::to_string(first);
    }
    return {};
}

namespace {

template <class ColorAt>
std::optional<Violation> scan(const MultiGraph& g, const ListAssignment& lists, ColorAt color_at,
                              bool require_all) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::optional<ColorId> ce = color_at(e);
        if (!ce) {
            if (require_all) return Violation{Violation::Kind::Uncolored, e, e, 0};
            continue;
        }
        if (!lists.contains(e, *ce)) return Violation{Violation::Kind::List, e, e, *ce};
        for (EdgeId f : g.neighborhood(e)) {
            if (f > e && color_at(f) == ce) return Violation{Violation::Kind::Conflict, e, f, *ce};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Violation> verify_strong(const MultiGraph& g, const ListAssignment& lists,
                                       std::span<const ColorId> coloring) {
    if (coloring.size() != g.edge_count() || lists.size() != g.edge_count()) {
        throw PreconditionError("verify_strong: coloring/list size does not match the graph");
    }
    return scan(
        g, lists, [&](EdgeId e) { return std::optional<ColorId>(coloring[e]); }, true);
}

std::optional<Violation> verify_partial(const PartialColoring& pc) {
    return scan(
        pc.graph(), pc.lists(), [&](EdgeId e) { return pc.color(e); }, false);
}

}  // namespace strongce
