#include "strongce/hall.hpp"

#include <algorithm>
#include <cassert>

#include "strongce/errors.hpp"

namespace strongce {

namespace {

struct Bipartite {
    std::vector<ColorId> colors;              // right side, ascending
    std::vector<std::vector<std::size_t>> adj;  // left -> right indices, in list order
};

Bipartite index_lists(std::span<const std::vector<ColorId>> lists) {
    Bipartite b;
    for (const auto& l : lists) b.colors.insert(b.colors.end(), l.begin(), l.end());
    std::sort(b.colors.begin(), b.colors.end());
    b.colors.erase(std::unique(b.colors.begin(), b.colors.end()), b.colors.end());
    b.adj.reserve(lists.size());
    for (const auto& l : lists) {
        std::vector<std::size_t> row;
        row.reserve(l.size());
        for (ColorId c : l) {
            row.push_back(static_cast<std::size_t>(
                std::lower_bound(b.colors.begin(), b.colors.end(), c) - b.colors.begin()));
        }
        b.adj.push_back(std::move(row));
    }
    return b;
}

constexpr std::size_t kFree = static_cast<std::size_t>(-1);

struct Kuhn {
    const Bipartite& b;
    std::vector<std::size_t> match_left;   // left -> right
    std::vector<std::size_t> match_right;  // right -> left
    std::vector<char> seen;

    explicit Kuhn(const Bipartite& graph)
        : b(graph), match_left(graph.adj.size(), kFree), match_right(graph.colors.size(), kFree) {}

    bool augment(std::size_t l) {
        for (std::size_t r : b.adj[l]) {
            if (seen[r]) continue;
            seen[r] = 1;
            if (match_right[r] == kFree || augment(match_right[r])) {
                match_left[l] = r;
                match_right[r] = l;
                return true;
            }
        }
        return false;
    }

    std::size_t run() {
        std::size_t size = 0;
        for (std::size_t l = 0; l < b.adj.size(); ++l) {
            seen.assign(b.colors.size(), 0);
            size += augment(l);
        }
        return size;
    }
};

// Left vertices reachable from unmatched left vertices by alternating paths.
std::vector<char> konig_left(const Kuhn& k) {
    const auto& b = k.b;
    std::vector<char> left(b.adj.size(), 0), right(b.colors.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t l = 0; l < b.adj.size(); ++l) {
        if (k.match_left[l] == kFree) {
            left[l] = 1;
            stack.push_back(l);
        }
    }
    while (!stack.empty()) {
        std::size_t l = stack.back();
        stack.pop_back();
        for (std::size_t r : b.adj[l]) {
            if (right[r]) continue;
            right[r] = 1;
            std::size_t next = k.match_right[r];
            if (next != kFree && !left[next]) {
                left[next] = 1;
                stack.push_back(next);
            }
        }
    }
    return left;
}

DiscrepancyReport report_for(std::span<const std::vector<ColorId>> lists,
                             std::vector<std::uint32_t> members) {
    DiscrepancyReport r;
    for (auto i : members) r.union_colors.insert(r.union_colors.end(), lists[i].begin(), lists[i].end());
    std::sort(r.union_colors.begin(), r.union_colors.end());
    r.union_colors.erase(std::unique(r.union_colors.begin(), r.union_colors.end()),
                         r.union_colors.end());
    r.disc = static_cast<long>(members.size()) - static_cast<long>(r.union_colors.size());
    r.members = std::move(members);
    return r;
}

#ifndef NDEBUG
long brute_force_max_disc(std::span<const std::vector<ColorId>> lists) {
    const std::size_t n = lists.size();
    long best = std::numeric_limits<long>::min();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::uint32_t> members;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) members.push_back(i);
        }
        best = std::max(best, report_for(lists, members).disc);
    }
    return best;
}
#endif

}  // namespace

Matching max_bipartite_matching(std::span<const std::vector<ColorId>> lists) {
    auto b = index_lists(lists);
    Kuhn k(b);
    Matching m;
    m.size = k.run();
    m.assignment.resize(lists.size());
    for (std::size_t l = 0; l < lists.size(); ++l) {
        if (k.match_left[l] != kFree) m.assignment[l] = b.colors[k.match_left[l]];
    }
    return m;
}

std::optional<std::vector<ColorId>> find_sdr(std::span<const std::vector<ColorId>> lists) {
    auto m = max_bipartite_matching(lists);
    if (m.size != lists.size()) return std::nullopt;
    std::vector<ColorId> out;
    out.reserve(lists.size());
    for (const auto& c : m.assignment) out.push_back(*c);
    return out;
}

DiscrepancyReport max_discrepancy(std::span<const std::vector<ColorId>> lists) {
    const std::size_t n = lists.size();
    if (n == 0) throw PreconditionError("max_discrepancy: empty family");

    auto b = index_lists(lists);
    Kuhn k(b);
    const std::size_t nu = k.run();
    DiscrepancyReport best;
    if (nu < n) {
        auto in = konig_left(k);
        std::vector<std::uint32_t> members;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (in[i]) members.push_back(i);
        }
        best = report_for(lists, std::move(members));
        assert(best.disc == static_cast<long>(n - nu));
    } else {
        // max over S containing t of |S| - |N(S)| equals the deficiency of the
        // family with t repeated `copies` times, minus `copies`.
        const std::size_t copies = n + b.colors.size() + 1;
        bool have = false;
        for (std::uint32_t t = 0; t < n; ++t) {
            std::vector<std::vector<ColorId>> aug(lists.begin(), lists.end());
            for (std::size_t c = 0; c < copies; ++c) aug.push_back(lists[t]);
            auto ab = index_lists(aug);
            Kuhn ak(ab);
            ak.run();
            auto in = konig_left(ak);
            std::vector<std::uint32_t> members;
            for (std::uint32_t i = 0; i < n; ++i) {
                if (in[i] || i == t) members.push_back(i);
            }
            auto r = report_for(lists, std::move(members));
            if (!have || r.disc > best.disc) {
                best = std::move(r);
                have = true;
            }
        }
    }
#ifndef NDEBUG
    if (n <= 12) assert(best.disc == brute_force_max_disc(lists));
#endif
    return best;
}

namespace {

std::vector<std::vector<ColorId>> current_lists(const PartialColoring& pc,
                                                std::span<const EdgeId> edges) {
    std::vector<std::vector<ColorId>> out;
    out.reserve(edges.size());
    for (EdgeId e : edges) out.push_back(pc.available_colors(e));
    return out;
}

}  // namespace

std::optional<std::vector<ColorId>> sdr_completion(const PartialColoring& pc,
                                                   std::span<const EdgeId> uncolored) {
    auto lists = current_lists(pc, uncolored);
    return find_sdr(lists);
}

DiscrepancyReport max_discrepancy_set(const PartialColoring& pc, std::span<const EdgeId> uncolored) {
    if (uncolored.size() > 32) throw PreconditionError("max_discrepancy_set: more than 32 edges");
    auto lists = current_lists(pc, uncolored);
    auto r = max_discrepancy(lists);
    for (auto& m : r.members) m = uncolored[m];
    return r;
}

ExtensionResult color_max_disc_then_extend(PartialColoring& pc, std::span<const EdgeId> uncolored,
                                           const SubsetColorer& colorer) {
    ExtensionResult result;
    if (uncolored.empty()) {
        result.ok = true;
        return result;
    }
    result.subset = max_discrepancy_set(pc, uncolored);
    if (result.subset.disc > 0) {
        if (!colorer(pc, result.subset)) {
            result.failure = "subset colorer failed";
            return result;
        }
        for (EdgeId e : result.subset.members) {
            if (!pc.is_colored(e)) {
                result.failure = "subset colorer left edge " + std::to_string(e) + " uncolored";
                return result;
            }
        }
    }
    std::vector<EdgeId> rest;
    for (EdgeId e : uncolored) {
        if (!pc.is_colored(e)) rest.push_back(e);
    }
    auto sdr = sdr_completion(pc, rest);
    if (!sdr) {
        result.failure = "no distinct representatives for the remaining " +
                         std::to_string(rest.size()) + " edges";
        return result;
    }
    for (std::size_t i = 0; i < rest.size(); ++i) pc.assign(rest[i], (*sdr)[i]);
    result.ok = true;
    return result;
}

}  // namespace strongce
