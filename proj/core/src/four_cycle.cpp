#include <algorithm>
#include <iterator>

#include "engine_detail.hpp"
#include "strongce/errors.hpp"
#include "strongce/hall.hpp"

namespace strongce {

using detail::Run;

std::vector<EdgeId> FourCycleContext::pack(int p) const {
    return {pendants[p][0], pendants[p][1], pendants[p + 2][0], pendants[p + 2][1]};
}

std::vector<EdgeId> FourCycleContext::local_edges() const {
    std::vector<EdgeId> out(cycle_edges.begin(), cycle_edges.end());
    for (const auto& pair : pendants) out.insert(out.end(), pair.begin(), pair.end());
    return out;
}

FourCycleContext analyze_4cycle(const MultiGraph& g, const Cycle& c) {
    if (!g.is_simple()) throw PreconditionError("graph is not simple");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 4) throw PreconditionError("graph is not 4-regular");
    }
    if (find_cycle_of_length(g, 3)) throw PreconditionError("graph has a 3-cycle");
    if (c.length() != 4 || !is_cycle(g, c)) throw PreconditionError("witness is not a 4-cycle");

    FourCycleContext ctx;
    for (int i = 0; i < 4; ++i) {
        ctx.vertices[i] = c.vertices[i];
        ctx.cycle_edges[i] = c.edges[i];
    }
    for (int i = 0; i < 4; ++i) {
        int k = 0;
        for (EdgeId e : g.incident(ctx.vertices[i])) {
            if (c.contains_edge(e)) continue;
            ctx.pendants[i][k] = e;
            ctx.far_ends[i][k] = g.edge(e).other(ctx.vertices[i]);
            ++k;
        }
    }
    for (int p = 0; p < 2; ++p) {
        for (int s = 0; s < 2; ++s) {
            for (int t = 0; t < 2; ++t) {
                const VertexId x = ctx.far_ends[p][s];
                const VertexId y = ctx.far_ends[p + 2][t];
                if (x == y) {
                    ctx.adjacent_pairs.emplace_back(ctx.pendants[p][s], ctx.pendants[p + 2][t]);
                    continue;
                }
                for (EdgeId e : g.incident(x)) {
                    if (g.edge(e).other(x) == y) ctx.diagonals[p].push_back(e);
                }
            }
        }
    }
    return ctx;
}

namespace {

struct Pair {
    EdgeId first;
    EdgeId second;
};

// Opposite pendant pairs of pack p that do not conflict, in a,b order.
std::vector<Pair> clean_pairs(const MultiGraph& g, const FourCycleContext& ctx, int p) {
    std::vector<Pair> out;
    for (EdgeId x : ctx.pendants[p]) {
        for (EdgeId y : ctx.pendants[p + 2]) {
            if (edge_distance(g, x, y) >= 2) out.push_back({x, y});
        }
    }
    return out;
}

std::vector<ColorId> common(const std::vector<ColorId>& a, const std::vector<ColorId>& b) {
    std::vector<ColorId> out;
    for (ColorId x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
    }
    return out;
}

std::vector<EdgeId> all_pendants(const FourCycleContext& ctx) {
    std::vector<EdgeId> out;
    for (const auto& pair : ctx.pendants) out.insert(out.end(), pair.begin(), pair.end());
    return out;
}

// Gives one color from the common available colors to a non-conflicting pair.
// `minimum` is the size the intersection must have by the counting argument.
bool color_pair(Run& r, const Pair& pair, long minimum, const std::string& label) {
    const auto both = common(r.pc.available_colors(pair.first), r.pc.available_colors(pair.second));
    r.at_least(label + ": |L'(" + std::to_string(pair.first) + ") & L'(" + std::to_string(pair.second) + ")|",
               static_cast<long>(both.size()), minimum);
    if (both.empty()) return false;
    r.pc.assign(pair.first, both.front());
    r.pc.assign(pair.second, both.front());
    r.note(label + ": color " + std::to_string(both.front()) + " on " + std::to_string(pair.first) + " and " +
           std::to_string(pair.second));
    return true;
}

// Colors the cycle edges, `last` at the end, after checking the available
// list sizes the argument promises.
bool finish_cycle(Run& r, const FourCycleContext& ctx, int last, long at_last, long at_others) {
    std::vector<EdgeId> order;
    for (int i = 3; i >= 0; --i) {
        if (i != last) order.push_back(ctx.cycle_edges[i]);
    }
    if (last >= 0) order.push_back(ctx.cycle_edges[last]);
    for (int i = 0; i < 4; ++i) {
        const EdgeId e = ctx.cycle_edges[i];
        if (r.pc.is_colored(e)) continue;
        r.at_least("cycle edge " + std::to_string(e) + ": |L'(e)| before finishing",
                   static_cast<long>(r.available(e)), i == last ? at_last : at_others);
    }
    return r.greedy(order);
}

void case_one(Run& r, const FourCycleContext& ctx, const Cycle& c) {
    r.note("four-cycle: case 1, " + std::to_string(ctx.adjacent_pairs.size()) + " adjacent pairs");
    const auto order = compatible_order_cycle(r.g, c);
    if (!r.greedy_bounded(order.edges, 20, "compatible greedy")) return;
    for (EdgeId e : ctx.cycle_edges) {
        r.at_most("cycle edge " + std::to_string(e) + ": |N(e)|", static_cast<long>(r.g.neighborhood(e).size()), 21);
    }
    finish_cycle(r, ctx, -1, 4, 4);
}

void color_around_diagonals(Run& r, const FourCycleContext& ctx, const Cycle& c, int p) {
    const auto& diagonals = ctx.diagonals[p];
    r.note("four-cycle: pack " + std::to_string(p) + " has four diagonal edges " + detail::join(diagonals));
    const auto order = compatible_order_cycle(r.g, c, diagonals);
    if (!r.greedy_bounded(order.edges, 20, "compatible greedy")) return;
    for (EdgeId d : diagonals) {
        r.at_most("diagonal edge " + std::to_string(d) + ": |N(e)|", static_cast<long>(r.g.neighborhood(d).size()), 21);
    }
    if (!finish_cycle(r, ctx, -1, 4, 4)) return;
    for (std::size_t k = 0; k < diagonals.size(); ++k) {
        r.at_least("diagonal edge " + std::to_string(diagonals[k]) + ": |L'(e)|",
                   static_cast<long>(r.available(diagonals[k])), static_cast<long>(4 - k));
        if (!r.greedy(std::span(&diagonals[k], 1))) return;
    }
}

void case_two(Run& r, const FourCycleContext& ctx) {
    const auto [p1, p2] = ctx.adjacent_pairs.front();
    const int dirty = (std::find(ctx.pendants[0].begin(), ctx.pendants[0].end(), p1) != ctx.pendants[0].end() ||
                       std::find(ctx.pendants[2].begin(), ctx.pendants[2].end(), p1) != ctx.pendants[2].end())
                          ? 0
                          : 1;
    const int clean = 1 - dirty;
    r.note("four-cycle: case 2, adjacent pair " + std::to_string(p1) + " " + std::to_string(p2));

    for (EdgeId e : ctx.cycle_edges) {
        r.at_least("cycle edge " + std::to_string(e) + ": |L'(e)|", static_cast<long>(r.available(e)), 11);
    }
    for (EdgeId e : ctx.pack(clean)) {
        r.at_least("clean pack pendant " + std::to_string(e) + ": |L'(e)|", static_cast<long>(r.available(e)), 7);
    }
    const auto pendants = all_pendants(ctx);

    // A pendant color missing from some L'(c_j) saves a color on c_j.
    for (EdgeId p : pendants) {
        for (ColorId x : r.pc.available_colors(p)) {
            for (int j = 0; j < 4; ++j) {
                const auto cj = r.pc.available_colors(ctx.cycle_edges[j]);
                if (std::find(cj.begin(), cj.end(), x) != cj.end()) continue;
                r.note("case 2: color " + std::to_string(x) + " on pendant " + std::to_string(p) +
                       " is not available on cycle edge " + std::to_string(ctx.cycle_edges[j]));
                r.pc.assign(p, x);
                if (r.greedy(pendants)) finish_cycle(r, ctx, j, 4, 3);
                return;
            }
        }
    }
    for (int j = 0; j < 4; ++j) {
        if (r.available(ctx.cycle_edges[j]) > 11) {
            r.note("case 2: cycle edge " + std::to_string(ctx.cycle_edges[j]) + " has more than 11 colors");
            if (r.greedy(pendants)) finish_cycle(r, ctx, j, 4, 3);
            return;
        }
    }
    const auto pairs = clean_pairs(r.g, ctx, clean);
    r.at_least("case 2: non-conflicting pairs in the clean pack", static_cast<long>(pairs.size()), 1);
    if (pairs.empty()) return;
    if (!color_pair(r, pairs.front(), 3, "case 2")) return;
    if (r.greedy(pendants)) finish_cycle(r, ctx, -1, 4, 4);
}

// Colors the maximum-discrepancy subset S of the twelve local edges.
bool color_deficient_subset(Run& r, const FourCycleContext& ctx, const DiscrepancyReport& report) {
    const std::vector<EdgeId> s(report.members.begin(), report.members.end());
    const auto in_s = [&](EdgeId e) { return std::find(s.begin(), s.end(), e) != s.end(); };
    std::vector<EdgeId> s_pendants, s_cycle;
    for (EdgeId e : s) {
        (std::find(ctx.cycle_edges.begin(), ctx.cycle_edges.end(), e) != ctx.cycle_edges.end() ? s_cycle : s_pendants)
            .push_back(e);
    }
    r.note("case 3: subset of discrepancy " + std::to_string(report.disc) + ": " + detail::join(s));
    if (s_cycle.empty()) return r.greedy(s_pendants);

    r.at_least("case 3: |S|", static_cast<long>(s.size()), 11);
    std::vector<EdgeId> missing;
    for (EdgeId e : ctx.local_edges()) {
        if (!in_s(e)) missing.push_back(e);
    }
    int skip_pack = -1;
    if (missing.size() == 1) {
        for (int p = 0; p < 2; ++p) {
            const auto pk = ctx.pack(p);
            if (std::find(pk.begin(), pk.end(), missing.front()) != pk.end()) skip_pack = p;
        }
    }
    for (int p = 0; p < 2; ++p) {
        if (p == skip_pack) continue;
        const auto pairs = clean_pairs(r.g, ctx, p);
        r.at_least("case 3: non-conflicting pairs in pack " + std::to_string(p), static_cast<long>(pairs.size()), 1);
        if (pairs.empty() || !in_s(pairs.front().first) || !in_s(pairs.front().second)) continue;
        if (!color_pair(r, pairs.front(), p == 0 || skip_pack >= 0 ? 3 : 2, "case 3")) return false;
    }
    if (!r.greedy(s_pendants)) return false;
    for (EdgeId e : s_cycle) {
        r.at_least("case 3: cycle edge " + std::to_string(e) + ": |L'(e)|", static_cast<long>(r.available(e)), 4);
    }
    return r.greedy(s_cycle);
}

void case_three(Run& r, const FourCycleContext& ctx) {
    r.note("four-cycle: case 3, no adjacent pairs");
    const auto local = ctx.local_edges();
    for (EdgeId e : ctx.cycle_edges) {
        r.at_least("cycle edge " + std::to_string(e) + ": |L'(e)|", static_cast<long>(r.available(e)), 10);
    }
    for (EdgeId e : all_pendants(ctx)) {
        r.at_least("pendant " + std::to_string(e) + ": |L'(e)|", static_cast<long>(r.available(e)), 7);
    }
    auto result = color_max_disc_then_extend(r.pc, local, [&](PartialColoring&, const DiscrepancyReport& rep) {
        return color_deficient_subset(r, ctx, rep);
    });
    if (result.ok) {
        r.note(result.subset.disc > 0 ? "case 3: extended by distinct representatives"
                                      : "case 3: distinct representatives exist");
    } else {
        r.note("case 3: " + result.failure);
    }
}

}  // namespace

ColoringOutcome handle_4cycle(const MultiGraph& g, const ListAssignment& lists, const Cycle& c,
                              const EngineOptions& opts) {
    detail::require_basic(g, lists);
    const auto ctx = analyze_4cycle(g, c);
    Run r(g, lists, Handler::Cycle4, opts);
    r.note("four-cycle " + detail::join(c.edges));

    if (ctx.adjacent_pairs.size() >= 2) {
        case_one(r, ctx, c);
        return r.finish();
    }
    for (int p = 0; p < 2; ++p) {
        if (ctx.diagonals[p].size() == 4) {
            color_around_diagonals(r, ctx, c, p);
            return r.finish();
        }
    }
    const auto local = ctx.local_edges();
    const auto order = compatible_order_cycle(g, c, local);
    if (r.greedy_bounded(order.edges, 20, "compatible greedy")) {
        if (ctx.adjacent_pairs.size() == 1) {
            case_two(r, ctx);
        } else {
            case_three(r, ctx);
        }
    }
    return r.finish();
}

}  // namespace strongce
