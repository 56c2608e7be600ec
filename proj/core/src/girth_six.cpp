#include <algorithm>
#include <numeric>

#include "engine_detail.hpp"
#include "strongce/errors.hpp"

namespace strongce {

using detail::Run;

VertexContext vertex_context(const MultiGraph& g, const ListAssignment& lists, VertexId v) {
    if (v >= g.vertex_count()) throw GraphError("vertex out of range");
    if (!g.is_simple()) throw PreconditionError("graph is not simple");
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
        if (g.degree(w) != 4) throw PreconditionError("graph is not 4-regular");
    }
    if (auto girth = girth_and_witness(g).girth; girth && *girth < 6) {
        throw PreconditionError("graph has girth below 6");
    }
    const auto spokes = spoke_sets(g, v);
    VertexContext ctx;
    ctx.center = v;
    for (int i = 0; i < 4; ++i) {
        ctx.spokes[i] = spokes.spokes[i];
        std::vector<ColorId> all;
        for (int k = 0; k < 3; ++k) {
            ctx.sets[i][k] = spokes.sets[i][k];
            const auto& l = lists[ctx.sets[i][k]];
            all.insert(all.end(), l.begin(), l.end());
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        ctx.union_lists[i] = std::move(all);
    }
    return ctx;
}

namespace {

bool has(const std::vector<ColorId>& sorted, ColorId c) {
    return std::binary_search(sorted.begin(), sorted.end(), c);
}

bool in_list(const ListAssignment& lists, EdgeId e, ColorId c) { return lists.contains(e, c); }

struct Plan {
    std::string label;
    std::vector<Precolor> precolors;
};

class Planner {
public:
    Planner(const VertexContext& ctx, const ListAssignment& lists) : ctx_(ctx), lists_(lists) {}

    // Edge of A_i holding color c, first in set order.
    Precolor on_set(int i, ColorId c) const {
        for (EdgeId e : ctx_.sets[i]) {
            if (in_list(lists_, e, c)) return {e, c};
        }
        throw InternalGuaranteeViolated("color not in the union list of the set");
    }

    int multiplicity(ColorId c) const {
        int m = 0;
        for (const auto& u : ctx_.union_lists) m += has(u, c);
        return m;
    }

    bool in_spoke(int t, ColorId c) const { return in_list(lists_, ctx_.spokes[t], c); }

    // Lower bound on |L'(e_t)| once G - v is colored around the precolors:
    // 21 colored neighbors, of which the precolored ones contribute only
    // their distinct colors that lie in L(e_t).
    std::array<long, 4> slack(const std::vector<Precolor>& pre) const {
        std::vector<ColorId> colors;
        for (const auto& p : pre) colors.push_back(p.color);
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        std::array<long, 4> out{};
        for (int t = 0; t < 4; ++t) {
            long hit = 0;
            for (ColorId c : colors) hit += in_spoke(t, c);
            out[t] = 1 + static_cast<long>(pre.size()) - hit;
        }
        return out;
    }

    // Spokes in coloring order: least slack first, later spokes first on ties.
    std::array<int, 4> finishing_order(const std::array<long, 4>& s) const {
        std::array<int, 4> order = {3, 2, 1, 0};
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return s[a] < s[b]; });
        return order;
    }

    bool feasible(const std::vector<Precolor>& pre) const {
        const auto s = slack(pre);
        const auto order = finishing_order(s);
        for (int k = 0; k < 4; ++k) {
            if (s[order[k]] < k + 1) return false;
        }
        return true;
    }

    // Picks up to three colors on distinct sets, the k-th avoiding the lists
    // of spokes e_1..e_{4-k}: x_1 avoids three spoke lists, x_2 two, x_3 one.
    std::vector<Precolor> avoiders() const {
        std::vector<Precolor> pre;
        std::array<bool, 4> used{};
        for (int avoid = 3; avoid >= 1; --avoid) {
            bool found = false;
            for (int i = 0; i < 4 && !found; ++i) {
                if (used[i]) continue;
                for (ColorId c : ctx_.union_lists[i]) {
                    bool clear = true;
                    for (int t = 0; t < avoid; ++t) clear = clear && !in_spoke(t, c);
                    if (!clear) continue;
                    pre.push_back(on_set(i, c));
                    used[i] = true;
                    found = true;
                    break;
                }
            }
        }
        return pre;
    }

    Plan plan() const {
        std::vector<ColorId> palette;
        for (const auto& u : ctx_.union_lists) palette.insert(palette.end(), u.begin(), u.end());
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        int top = 0;
        for (ColorId c : palette) top = std::max(top, multiplicity(c));

        const auto first_with = [&](int m) {
            return *std::find_if(palette.begin(), palette.end(), [&](ColorId c) { return multiplicity(c) == m; });
        };

        if (top == 4) {
            const ColorId x = first_with(4);
            Plan p{"case 2: color " + std::to_string(x) + " is in every set list", {}};
            for (int i = 0; i < 4; ++i) p.precolors.push_back(on_set(i, x));
            return p;
        }
        if (top == 3) {
            const ColorId x = first_with(3);
            Plan p{"case 3: color " + std::to_string(x) + " is in three set lists", {}};
            int missing = 0;
            for (int i = 0; i < 4; ++i) {
                if (has(ctx_.union_lists[i], x)) {
                    p.precolors.push_back(on_set(i, x));
                } else {
                    missing = i;
                }
            }
            for (int t = 0; t < 4; ++t) {
                for (ColorId y : ctx_.union_lists[missing]) {
                    if (in_spoke(t, y)) continue;
                    p.precolors.push_back(on_set(missing, y));
                    p.label += ", color " + std::to_string(y) + " avoids spoke " + std::to_string(ctx_.spokes[t]);
                    return p;
                }
            }
            p.label += ", the fourth set list equals every spoke list";
            return p;
        }
        if (top == 2) {
            // A pairwise-common color missing from some spoke list.
            for (int i = 0; i < 4; ++i) {
                for (int j = i + 1; j < 4; ++j) {
                    for (ColorId x : ctx_.union_lists[i]) {
                        if (!has(ctx_.union_lists[j], x)) continue;
                        bool everywhere = true;
                        for (int t = 0; t < 4; ++t) everywhere = everywhere && in_spoke(t, x);
                        if (everywhere) continue;
                        if (auto p = complete_pair(i, j, x)) return *p;
                    }
                }
            }
            return {"case 4: every pairwise-common color is in all spoke lists", avoiders()};
        }
        return {"case 1: the set lists are pairwise disjoint", avoiders()};
    }

private:
    // x on A_i and A_j, then one color (or none) on each of the two other sets.
    std::optional<Plan> complete_pair(int i, int j, ColorId x) const {
        std::array<int, 2> rest{};
        int k = 0;
        for (int t = 0; t < 4; ++t) {
            if (t != i && t != j) rest[k++] = t;
        }
        const auto options = [&](int set) {
            std::vector<std::optional<ColorId>> out;
            for (ColorId c : ctx_.union_lists[set]) out.emplace_back(c);
            out.emplace_back(std::nullopt);
            return out;
        };
        for (const auto& y : options(rest[0])) {
            for (const auto& z : options(rest[1])) {
                std::vector<Precolor> pre = {on_set(i, x), on_set(j, x)};
                if (y) pre.push_back(on_set(rest[0], *y));
                if (z) pre.push_back(on_set(rest[1], *z));
                if (!feasible(pre)) continue;
                std::string label = "case 4: color " + std::to_string(x) + " shared by two set lists";
                if (y) label += ", color " + std::to_string(*y);
                if (z) label += ", color " + std::to_string(*z);
                return Plan{label, pre};
            }
        }
        return std::nullopt;
    }

    const VertexContext& ctx_;
    const ListAssignment& lists_;
};

}  // namespace

ColoringOutcome handle_regular_girth6(const MultiGraph& g, const ListAssignment& lists, VertexId v,
                                      const EngineOptions& opts) {
    detail::require_basic(g, lists);
    Run r(g, lists, Handler::RegularGirth6, opts);
    const auto ctx = vertex_context(g, r.lists, v);
    r.note("girth six: center " + std::to_string(v) + ", spokes " + detail::join(ctx.spokes));

    Planner planner(ctx, r.lists);
    const auto plan = planner.plan();
    r.note(plan.label);
    const auto& pre = plan.precolors;
    for (std::size_t a = 0; a < pre.size(); ++a) {
        for (std::size_t b = a + 1; b < pre.size(); ++b) {
            r.at_least("precolored edges " + std::to_string(pre[a].edge) + " " + std::to_string(pre[b].edge) +
                           ": distance",
                       static_cast<long>(edge_distance(g, pre[a].edge, pre[b].edge)), 2);
        }
    }
    const auto slack = planner.slack(pre);
    const auto finishing = planner.finishing_order(slack);
    r.at_least("spoke finishing order feasible", planner.feasible(pre) ? 1 : 0, 1);

    for (const auto& p : pre) {
        r.pc.assign(p.edge, p.color);
        r.note("precolor edge " + std::to_string(p.edge) + " with " + std::to_string(p.color));
    }
    const auto order = compatible_order_vertex(g, v);
    if (r.greedy_bounded(order.edges, 21, "greedy around precolored edges")) {
        std::vector<EdgeId> spokes;
        for (int t : finishing) {
            const EdgeId e = ctx.spokes[t];
            r.at_least("spoke " + std::to_string(e) + ": |L'(e)|", static_cast<long>(r.available(e)), slack[t]);
            spokes.push_back(e);
        }
        r.note("spoke order " + detail::join(spokes));
        r.greedy(spokes);
    }
    return r.finish();
}

}  // namespace strongce
