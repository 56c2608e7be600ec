#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "strongce/engine.hpp"
#include "strongce/generators.hpp"
#include "strongce/ordering.hpp"

namespace support {

using namespace strongce;

inline std::size_t uniform(std::size_t lo, std::size_t hi, Rng& rng) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

struct Instance {
    std::string family;
    MultiGraph graph;
    ListAssignment lists;
};

/// The i-th instance of the seeded coloring corpus: trees, multigraphs with
/// loops and parallel edges, simple 4-regular graphs with short cycles,
/// girth-5 and girth-6 4-regular graphs, and sparse forests. n <= 64, lists of
/// 22 colors from a 66-color palette.
inline Instance corpus_instance(std::size_t i, std::uint64_t seed) {
    Rng rng(seed * 1'000'003 + i);
    Instance out;
    switch (i % 10) {
        case 0:
        case 1:
            out = {"tree", random_tree(uniform(2, 64, rng), 4, rng), {}};
            break;
        case 2:
            out = {"pairing-multigraph", random_pairing_regular4(uniform(3, 32, rng), rng), {}};
            break;
        case 3: {
            const auto n = uniform(4, 40, rng);
            out = {"maxdeg4-multigraph", random_max_degree4(n, 2 * n, rng), {}};
            break;
        }
        case 4:
            out = {"simple-regular4", random_simple_regular4(uniform(5, 40, rng), rng), {}};
            break;
        case 5:
            out = {"bipartite-regular4", random_bipartite_regular4(uniform(4, 20, rng), rng), {}};
            break;
        case 6: {
            static const std::array<const char*, 4> names = {"four-cycle-two-pairs", "four-cycle-one-pair",
                                                            "four-cycle-no-pairs", "four-cycle-diagonals"};
            out = {"four-cycle-fixture", relabeled(fixture(names[(i / 10) % 4], rng()).graph, rng), {}};
            break;
        }
        case 7:
            out = {"girth5-regular4",
                   (i / 10) % 2 ? random_lift(robertson_graph(), rng) : relabeled(robertson_graph(), rng), {}};
            break;
        case 8:
            out = {"girth6-regular4",
                   (i / 10) % 2 ? random_lift(cage_4_6(), rng) : relabeled(cage_4_6(), rng), {}};
            break;
        default: {
            const auto n = uniform(10, 64, rng);
            out = {"sparse-forest", random_max_degree4(n, n, rng), {}};
            break;
        }
    }
    out.lists = random_lists(out.graph.edge_count(), 22, 66, rng);
    return out;
}

/// A cycle found by a random non-backtracking walk; nullopt for a forest.
inline std::optional<Cycle> random_cycle(const MultiGraph& g, Rng& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        VertexId v = static_cast<VertexId>(uniform(0, g.vertex_count() - 1, rng));
        if (g.degree(v) == 0) continue;
        std::vector<VertexId> walk = {v};
        std::vector<EdgeId> edges;
        std::optional<EdgeId> last;
        while (walk.size() <= g.vertex_count()) {
            std::vector<EdgeId> options;
            for (EdgeId e : g.incident(v)) {
                if (e != last) options.push_back(e);
            }
            if (options.empty()) break;
            const EdgeId e = options[uniform(0, options.size() - 1, rng)];
            v = g.edge(e).other(v);
            edges.push_back(e);
            last = e;
            auto seen = std::find(walk.begin(), walk.end(), v);
            if (seen != walk.end()) {
                const auto start = static_cast<std::size_t>(seen - walk.begin());
                Cycle c;
                c.vertices.assign(walk.begin() + static_cast<long>(start), walk.end());
                c.edges.assign(edges.begin() + static_cast<long>(start), edges.end());
                if (c.length() >= 3) return c;
                break;
            }
            walk.push_back(v);
        }
    }
    return std::nullopt;
}

/// Lists that squeeze the twelve edges around a 4-cycle: every other edge gets
/// a private color block, and each local edge gets {1..11} plus the colors its
/// already colored neighbors will hold after a greedy pass, so its available
/// list shrinks to about {1..11}.
inline ListAssignment squeezed_four_cycle_lists(const MultiGraph& g, const Cycle& c, std::uint64_t seed,
                                                std::size_t filler) {
    const auto local = analyze_4cycle(g, c).local_edges();
    std::vector<std::vector<ColorId>> lists;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::vector<ColorId> l;
        for (ColorId k = 0; k < 22; ++k) l.push_back(12 + 22 * e + k + static_cast<ColorId>(seed % 3));
        lists.push_back(std::move(l));
    }
    const ListAssignment outer(lists);
    PartialColoring pc(g, outer);
    greedy_color(pc, compatible_order_cycle(g, c, local).edges);
    for (EdgeId e : local) {
        std::set<ColorId> l;
        for (ColorId k = 1; k <= 11; ++k) l.insert(k);
        for (EdgeId f : g.neighborhood(e)) {
            if (pc.is_colored(f) && l.size() < 22 - filler) l.insert(*pc.color(f));
        }
        for (ColorId k = 999; l.size() < 22; ++k) l.insert(k);
        lists[e].assign(l.begin(), l.end());
    }
    return ListAssignment(lists);
}

enum class SetPattern {
    Disjoint,         // the four set lists share no color
    SharedByThree,    // one color in three set lists
    SharedByTwo,      // one color in exactly two set lists, missing from the spokes
    SharedBySpokes,   // one color in two set lists and in every spoke list
    FourthIsSpokes,   // three sets share a color, the fourth set list equals every spoke list
};

/// Lists around the center of a girth-6 4-regular graph realizing `pattern`.
/// Spokes get {1..22}; edges of A_i share a block of 22 fresh colors.
inline ListAssignment girth_six_lists(const MultiGraph& g, VertexId v, SetPattern pattern, std::uint64_t seed) {
    Rng rng(seed);
    auto base = random_lists(g.edge_count(), 22, 2000, rng);
    std::vector<std::vector<ColorId>> lists(base.lists().begin(), base.lists().end());
    const auto ctx = vertex_context(g, base, v);
    const auto block = [](ColorId start) {
        std::vector<ColorId> l;
        for (ColorId k = 0; k < 22; ++k) l.push_back(start + k);
        return l;
    };
    for (EdgeId s : ctx.spokes) lists[s] = block(1);
    for (int i = 0; i < 4; ++i) {
        auto l = block(3000 + 100 * static_cast<ColorId>(i));
        const bool shared = (pattern == SetPattern::SharedByThree || pattern == SetPattern::FourthIsSpokes) ? i < 3
                            : (pattern == SetPattern::SharedByTwo || pattern == SetPattern::SharedBySpokes) ? i < 2
                                                                                                            : false;
        if (shared) l.back() = pattern == SetPattern::SharedBySpokes ? 22 : 5000;
        if (pattern == SetPattern::FourthIsSpokes && i == 3) l = block(1);
        std::sort(l.begin(), l.end());
        for (EdgeId e : ctx.sets[i]) lists[e] = l;
    }
    return ListAssignment(lists);
}

inline bool trace_mentions(const ColoringOutcome& out, const std::string& needle) {
    return std::any_of(out.trace.begin(), out.trace.end(),
                       [&](const std::string& line) { return line.find(needle) != std::string::npos; });
}

}  // namespace support
