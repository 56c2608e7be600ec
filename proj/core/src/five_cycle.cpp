#include <algorithm>
#include <array>

#include "engine_detail.hpp"
#include "strongce/errors.hpp"
#include "strongce/polynomial.hpp"

namespace strongce {

using detail::Run;

namespace {

constexpr std::size_t kVars = 9;

// Edges of one labeling: c_1..c_5 then the erased pendants b_2..b_5, and the
// colored-neighborhood minimum promised for each.
struct Selection {
    std::array<EdgeId, kVars> edges{};
    std::string describe() const {
        return "cycle " + detail::join(std::span(edges).first(5)) + ", erased pendants " +
               detail::join(std::span(edges).subspan(5));
    }
};

constexpr std::array<long, kVars> kMinimumAvailable = {5, 5, 6, 5, 5, 3, 4, 4, 3};

bool conflicts(const MultiGraph& g, EdgeId a, EdgeId b) {
    const auto n = g.neighborhood(a);
    return std::binary_search(n.begin(), n.end(), b);
}

// All relabelings of the cycle (5 rotations, 2 directions) with every choice
// of one pendant at each of v_2..v_5.
std::vector<Selection> selections(const MultiGraph& g, const Cycle& c) {
    std::vector<Selection> out;
    for (int dir : {1, -1}) {
        for (int r = 0; r < 5; ++r) {
            std::array<VertexId, 5> v{};
            for (int k = 0; k < 5; ++k) v[k] = c.vertices[((r + dir * k) % 5 + 5) % 5];
            Selection base;
            for (int k = 0; k < 5; ++k) {
                const VertexId a = v[k], b = v[(k + 1) % 5];
                for (EdgeId e : c.edges) {
                    if (g.edge(e).touches(a) && g.edge(e).touches(b)) base.edges[k] = e;
                }
            }
            std::array<std::array<EdgeId, 2>, 4> pend{};
            for (int k = 1; k < 5; ++k) {
                int m = 0;
                for (EdgeId e : g.incident(v[k])) {
                    if (!c.contains_edge(e)) pend[k - 1][m++] = e;
                }
            }
            for (int mask = 0; mask < 16; ++mask) {
                Selection s = base;
                for (int k = 0; k < 4; ++k) s.edges[5 + k] = pend[k][(mask >> k) & 1];
                out.push_back(s);
            }
        }
    }
    return out;
}

// A bijection edge slot -> variable under which every actual conflict is a
// factor of the product and every list is longer than its target exponent.
class MappingSearch {
public:
    MappingSearch(const MultiGraph& g, const Selection& s, const std::array<std::size_t, kVars>& sizes)
        : sizes_(sizes) {
        for (const auto& f : five_cycle_factors()) factor_[f.i][f.j] = factor_[f.j][f.i] = true;
        for (std::size_t a = 0; a < kVars; ++a) {
            for (std::size_t b = 0; b < kVars; ++b) {
                conflict_[a][b] = a != b && conflicts(g, s.edges[a], s.edges[b]);
            }
        }
    }

    std::optional<std::array<std::uint32_t, kVars>> run() {
        if (place(0)) return var_of_;
        return std::nullopt;
    }

private:
    bool place(std::size_t slot) {
        if (slot == kVars) return true;
        const auto targets = five_cycle_targets();
        for (std::uint32_t x = 0; x < kVars; ++x) {
            if (used_[x] || sizes_[slot] <= targets[x]) continue;
            bool ok = true;
            for (std::size_t prev = 0; prev < slot && ok; ++prev) {
                if (conflict_[slot][prev] && !factor_[x][var_of_[prev]]) ok = false;
            }
            if (!ok) continue;
            used_[x] = true;
            var_of_[slot] = x;
            if (place(slot + 1)) return true;
            used_[x] = false;
        }
        return false;
    }

    std::array<std::size_t, kVars> sizes_;
    std::array<std::array<bool, kVars>, kVars> factor_{};
    std::array<std::array<bool, kVars>, kVars> conflict_{};
    std::array<bool, kVars> used_{};
    std::array<std::uint32_t, kVars> var_of_{};
};

}  // namespace

ColoringOutcome handle_5cycle(const MultiGraph& g, const ListAssignment& lists, const Cycle& c,
                              const EngineOptions& opts) {
    detail::require_basic(g, lists);
    if (!g.is_simple()) throw PreconditionError("graph is not simple");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 4) throw PreconditionError("graph is not 4-regular");
    }
    if (c.length() != 5 || !is_cycle(g, c)) throw PreconditionError("witness is not a 5-cycle");

    Run r(g, lists, Handler::Cycle5, opts);
    r.note("five-cycle " + detail::join(c.edges));
    const auto order = compatible_order_cycle(g, c);
    if (!r.greedy_bounded(order.edges, 20, "compatible greedy")) return r.finish();

    for (const auto& s : selections(g, c)) {
        std::array<ColorId, 4> saved{};
        for (int k = 0; k < 4; ++k) {
            saved[k] = *r.pc.color(s.edges[5 + k]);
            r.pc.unassign(s.edges[5 + k]);
        }
        std::array<std::size_t, kVars> sizes{};
        for (std::size_t i = 0; i < kVars; ++i) sizes[i] = r.available(s.edges[i]);
        auto mapping = MappingSearch(g, s, sizes).run();
        if (!mapping) {
            for (int k = 0; k < 4; ++k) r.pc.assign(s.edges[5 + k], saved[k]);
            continue;
        }

        r.note("five-cycle: " + s.describe());
        std::string vars;
        for (std::size_t i = 0; i < kVars; ++i) {
            vars += (i ? " " : "") + std::to_string(s.edges[i]) + "->x" + std::to_string((*mapping)[i] + 1);
            r.at_least("five-cycle slot " + std::to_string(i) + " edge " + std::to_string(s.edges[i]) + ": |L'(e)|",
                       static_cast<long>(sizes[i]), kMinimumAvailable[i]);
        }
        r.note("five-cycle: variables " + vars);

        ConflictSystem system;
        system.variables = kVars;
        const auto factors = five_cycle_factors();
        system.factors.assign(factors.begin(), factors.end());
        const auto targets = five_cycle_targets();
        system.targets.assign(targets.begin(), targets.end());
        system.lists.resize(kVars);
        for (std::size_t i = 0; i < kVars; ++i) system.lists[(*mapping)[i]] = r.pc.available_colors(s.edges[i]);

        const auto& cert = five_cycle_certificate();
        r.note("five-cycle: certificate " + std::to_string(cert.coefficient));
        r.at_most("five-cycle certificate coefficient", static_cast<long>(cert.coefficient), -1);
        r.at_least("five-cycle certificate coefficient", static_cast<long>(cert.coefficient), -1);
        r.at_least("five-cycle system certified", certified(system) ? 1 : 0, 1);

        if (auto values = cn_find_assignment(system)) {
            r.at_least("five-cycle assignment nonvanishing", nonvanishing(system.factors, *values) ? 1 : 0, 1);
            for (std::size_t i = 0; i < kVars; ++i) r.pc.assign(s.edges[i], (*values)[(*mapping)[i]]);
        } else {
            r.note("five-cycle: no nonvanishing assignment");
        }
        return r.finish();
    }
    r.note("five-cycle: no pendant selection fits the product");
    return r.finish();
}

}  // namespace strongce
