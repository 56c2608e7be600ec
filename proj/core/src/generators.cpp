#include "strongce/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "strongce/engine.hpp"
#include "strongce/errors.hpp"

namespace strongce {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

std::size_t uniform_index(std::size_t n, Rng& rng) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// The cycle through `vertices` in order, using the first matching edge ids.
Cycle cycle_through(const MultiGraph& g, const std::vector<VertexId>& vertices) {
    Cycle c;
    c.vertices = vertices;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const VertexId a = vertices[i], b = vertices[(i + 1) % vertices.size()];
        for (EdgeId e : g.incident(a)) {
            if (g.edge(e).other(a) == b) {
                c.edges.push_back(e);
                break;
            }
        }
    }
    if (c.edges.size() != vertices.size() || !is_cycle(g, c)) {
        throw InternalGuaranteeViolated("fixture cycle is not a cycle of its graph");
    }
    return c;
}

}  // namespace

MultiGraph path_graph(std::size_t vertices) {
    EdgeList edges;
    for (VertexId v = 0; v + 1 < vertices; ++v) edges.emplace_back(v, v + 1);
    return MultiGraph::build(vertices, edges);
}

MultiGraph cycle_graph(std::size_t vertices) {
    EdgeList edges;
    for (VertexId v = 0; v < vertices; ++v) edges.emplace_back(v, static_cast<VertexId>((v + 1) % vertices));
    return MultiGraph::build(vertices, edges);
}

MultiGraph star_graph(std::size_t leaves) {
    EdgeList edges;
    for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return MultiGraph::build(leaves + 1, edges);
}

MultiGraph complete_graph(std::size_t vertices) {
    EdgeList edges;
    for (VertexId u = 0; u < vertices; ++u) {
        for (VertexId v = u + 1; v < vertices; ++v) edges.emplace_back(u, v);
    }
    return MultiGraph::build(vertices, edges);
}

MultiGraph complete_bipartite(std::size_t a, std::size_t b) {
    EdgeList edges;
    for (VertexId u = 0; u < a; ++u) {
        for (VertexId v = 0; v < b; ++v) edges.emplace_back(u, static_cast<VertexId>(a + v));
    }
    return MultiGraph::build(a + b, edges);
}

MultiGraph petersen_graph() {
    EdgeList edges;
    for (VertexId i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return MultiGraph::build(10, edges);
}

MultiGraph robertson_graph() {
    // Hamiltonian cycle 0..18 plus the chords i -> i + jump[i].
    static constexpr std::array<VertexId, 19> kJump = {8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4};
    EdgeList edges;
    for (VertexId i = 0; i < 19; ++i) edges.emplace_back(i, (i + 1) % 19);
    for (VertexId i = 0; i < 19; ++i) edges.emplace_back(i, (i + kJump[i]) % 19);
    return MultiGraph::build(19, edges);
}

MultiGraph cage_4_6() {
    // Normalized nonzero vectors of GF(3)^3 serve as both points and lines.
    std::vector<std::array<int, 3>> vecs;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            for (int c = 0; c < 3; ++c) {
                const std::array<int, 3> v = {a, b, c};
                const auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
                if (lead != v.end() && *lead == 1) vecs.push_back(v);
            }
        }
    }
    EdgeList edges;
    for (VertexId p = 0; p < vecs.size(); ++p) {
        for (VertexId l = 0; l < vecs.size(); ++l) {
            int dot = 0;
            for (int k = 0; k < 3; ++k) dot += vecs[p][k] * vecs[l][k];
            if (dot % 3 == 0) edges.emplace_back(p, static_cast<VertexId>(vecs.size() + l));
        }
    }
    return MultiGraph::build(2 * vecs.size(), edges);
}

MultiGraph neighborhood_extremal() {
    EdgeList edges = {{0, 1}};
    VertexId next = 2;
    for (VertexId center : {0u, 1u}) {
        for (int i = 0; i < 3; ++i) {
            const VertexId mid = next++;
            edges.emplace_back(center, mid);
            for (int j = 0; j < 3; ++j) edges.emplace_back(mid, next++);
        }
    }
    return MultiGraph::build(next, edges);
}

MultiGraph random_tree(std::size_t vertices, std::size_t max_degree, Rng& rng) {
    if (vertices == 0) return MultiGraph::build(0, EdgeList{});
    if (max_degree < 2 && vertices > 2) throw PreconditionError("max degree too small for a tree");
    EdgeList edges;
    std::vector<std::size_t> degree(vertices, 0);
    for (VertexId v = 1; v < vertices; ++v) {
        std::vector<VertexId> open;
        for (VertexId u = 0; u < v; ++u) {
            if (degree[u] < max_degree) open.push_back(u);
        }
        const VertexId u = open[uniform_index(open.size(), rng)];
        edges.emplace_back(u, v);
        ++degree[u];
        ++degree[v];
    }
    return MultiGraph::build(vertices, edges);
}

MultiGraph random_pairing_regular4(std::size_t vertices, Rng& rng) {
    if (vertices == 0) throw PreconditionError("pairing model needs at least one vertex");
    std::vector<VertexId> points;
    for (VertexId v = 0; v < vertices; ++v) points.insert(points.end(), 4, v);
    std::shuffle(points.begin(), points.end(), rng);
    EdgeList edges;
    for (std::size_t i = 0; i < points.size(); i += 2) edges.emplace_back(points[i], points[i + 1]);
    return MultiGraph::build(vertices, edges);
}

MultiGraph random_simple_regular4(std::size_t vertices, Rng& rng) {
    if (vertices < 5) throw PreconditionError("a simple 4-regular graph needs at least 5 vertices");
    while (true) {
        auto g = random_pairing_regular4(vertices, rng);
        if (g.is_simple()) return g;
    }
}

MultiGraph random_bipartite_regular4(std::size_t half, Rng& rng) {
    if (half < 4) throw PreconditionError("a simple bipartite 4-regular graph needs 4 vertices per side");
    std::vector<VertexId> right;
    for (VertexId v = 0; v < half; ++v) right.insert(right.end(), 4, static_cast<VertexId>(half + v));
    while (true) {
        std::shuffle(right.begin(), right.end(), rng);
        EdgeList edges;
        for (std::size_t i = 0; i < right.size(); ++i) edges.emplace_back(static_cast<VertexId>(i / 4), right[i]);
        auto g = MultiGraph::build(2 * half, edges);
        if (g.is_simple()) return g;
    }
}

MultiGraph random_max_degree4(std::size_t vertices, std::size_t edges, Rng& rng) {
    if (vertices == 0) return MultiGraph::build(0, EdgeList{});
    std::vector<std::size_t> degree(vertices, 0);
    EdgeList out;
    for (std::size_t k = 0; k < edges; ++k) {
        const auto u = static_cast<VertexId>(uniform_index(vertices, rng));
        const auto v = static_cast<VertexId>(uniform_index(vertices, rng));
        const std::size_t need = u == v ? 2 : 1;
        if (degree[u] + need > 4 || degree[v] + need > 4) continue;
        degree[u] += need == 2 ? 2 : 1;
        if (u != v) ++degree[v];
        out.emplace_back(u, v);
    }
    return MultiGraph::build(vertices, out);
}

MultiGraph random_lift(const MultiGraph& base, Rng& rng) {
    const auto n = static_cast<VertexId>(base.vertex_count());
    EdgeList edges;
    std::bernoulli_distribution flip(0.5);
    for (const auto& e : base.edges()) {
        if (flip(rng)) {
            edges.emplace_back(e.u, e.v + n);
            edges.emplace_back(e.u + n, e.v);
        } else {
            edges.emplace_back(e.u, e.v);
            edges.emplace_back(e.u + n, e.v + n);
        }
    }
    return MultiGraph::build(2 * base.vertex_count(), edges);
}

MultiGraph relabeled(const MultiGraph& g, Rng& rng) {
    std::vector<VertexId> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    EdgeList edges;
    std::bernoulli_distribution flip(0.5);
    for (const auto& e : g.edges()) {
        auto pair = std::make_pair(perm[e.u], perm[e.v]);
        if (flip(rng)) std::swap(pair.first, pair.second);
        edges.push_back(pair);
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return MultiGraph::build(g.vertex_count(), edges);
}

std::optional<MultiGraph> pad_to_regular4(std::size_t vertices, const EdgeList& edges, std::size_t extra,
                                          bool triangle_free, Rng& rng, std::size_t attempts) {
    const std::size_t n = vertices + extra;
    std::vector<std::size_t> base_degree(n, 0);
    for (const auto& [u, v] : edges) {
        if (u >= vertices || v >= vertices) throw GraphError("endpoint out of range");
        ++base_degree[u];
        ++base_degree[v];
    }
    std::size_t missing = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (base_degree[v] > 4) throw PreconditionError("vertex already has degree above 4");
        missing += 4 - base_degree[v];
    }
    if (missing % 2 != 0) throw PreconditionError("odd number of missing half-edges");

    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        std::vector<std::size_t> need(n);
        std::vector<std::set<VertexId>> adj(n);
        for (std::size_t v = 0; v < n; ++v) need[v] = 4 - base_degree[v];
        for (const auto& [u, v] : edges) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        EdgeList out = edges;
        bool stuck = false;
        while (!stuck) {
            // The vertex missing the most half-edges goes first.
            const auto it = std::max_element(need.begin(), need.end());
            if (*it == 0) break;
            const auto u = static_cast<VertexId>(it - need.begin());
            std::vector<VertexId> candidates;
            for (VertexId w = 0; w < n; ++w) {
                if (w == u || need[w] == 0 || adj[u].count(w)) continue;
                if (triangle_free && std::any_of(adj[u].begin(), adj[u].end(),
                                                 [&](VertexId x) { return adj[w].count(x) > 0; })) {
                    continue;
                }
                candidates.push_back(w);
            }
            if (candidates.empty()) {
                stuck = true;
                break;
            }
            const VertexId w = candidates[uniform_index(candidates.size(), rng)];
            adj[u].insert(w);
            adj[w].insert(u);
            --need[u];
            --need[w];
            out.emplace_back(u, w);
        }
        if (!stuck) return MultiGraph::build(n, out);
    }
    return std::nullopt;
}

namespace {

MultiGraph padded(std::size_t vertices, const EdgeList& edges, std::size_t extra, bool triangle_free, Rng& rng) {
    auto g = pad_to_regular4(vertices, edges, extra, triangle_free, rng);
    if (!g) throw InternalGuaranteeViolated("could not pad fixture to a 4-regular graph");
    return *g;
}

// Pads the 4-cycle 0 1 2 3 plus `extra_edges` until `accept` holds for the
// context of that cycle.
template <typename Accept>
Fixture four_cycle_fixture(std::size_t vertices, EdgeList edges, std::size_t extra, Rng& rng, Accept accept) {
    edges.insert(edges.begin(), {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (int tries = 0; tries < 1000; ++tries) {
        auto g = padded(vertices, edges, extra, true, rng);
        auto c = cycle_through(g, {0, 1, 2, 3});
        if (accept(g, analyze_4cycle(g, c))) return {std::move(g), std::move(c)};
    }
    throw InternalGuaranteeViolated("no padding produced the requested 4-cycle configuration");
}

bool no_full_pack(const FourCycleContext& ctx) {
    return ctx.diagonals[0].size() < 4 && ctx.diagonals[1].size() < 4;
}

// Every cycle edge has the largest neighborhood the configuration allows.
bool cycle_neighborhoods_at_least(const MultiGraph& g, const FourCycleContext& ctx, std::size_t size) {
    return std::all_of(ctx.cycle_edges.begin(), ctx.cycle_edges.end(),
                       [&](EdgeId e) { return g.neighborhood(e).size() >= size; });
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"fig1-witness",         "cage-4-5",           "cage-4-6",
            "petersen",             "k44",                "triangle",
            "regular4-minus-edge",  "loop",               "parallel",
            "four-cycle-two-pairs", "four-cycle-one-pair", "four-cycle-no-pairs",
            "four-cycle-diagonals"};
}

Fixture fixture(const std::string& name, std::uint64_t seed) {
    Rng rng(seed);
    if (name == "fig1-witness") return {neighborhood_extremal(), std::nullopt};
    if (name == "cage-4-5") return {robertson_graph(), std::nullopt};
    if (name == "cage-4-6") return {cage_4_6(), std::nullopt};
    if (name == "petersen") return {petersen_graph(), std::nullopt};
    if (name == "k44" || name == "four-cycle-two-pairs") {
        auto g = complete_bipartite(4, 4);
        auto c = cycle_through(g, {0, 4, 1, 5});
        return {std::move(g), std::move(c)};
    }
    if (name == "triangle") {
        auto g = padded(3, {{0, 1}, {1, 2}, {2, 0}}, 8, false, rng);
        auto c = cycle_through(g, {0, 1, 2});
        return {std::move(g), std::move(c)};
    }
    if (name == "regular4-minus-edge") {
        auto g = random_simple_regular4(16, rng);
        auto edges = g.endpoint_pairs();
        edges.pop_back();
        return {MultiGraph::build(g.vertex_count(), edges), std::nullopt};
    }
    if (name == "loop") return {padded(3, {{0, 0}, {0, 1}, {0, 2}}, 8, false, rng), std::nullopt};
    if (name == "parallel") return {padded(2, {{0, 1}, {0, 1}}, 8, false, rng), std::nullopt};
    if (name == "four-cycle-one-pair") {
        // Vertex 4 joins opposite cycle vertices 1 and 3.
        return four_cycle_fixture(5, {{1, 4}, {3, 4}}, 27, rng, [](const MultiGraph& g, const FourCycleContext& ctx) {
            return ctx.adjacent_pairs.size() == 1 && no_full_pack(ctx) && cycle_neighborhoods_at_least(g, ctx, 22);
        });
    }
    if (name == "four-cycle-no-pairs") {
        return four_cycle_fixture(4, {}, 28, rng, [](const MultiGraph& g, const FourCycleContext& ctx) {
            return ctx.adjacent_pairs.empty() && no_full_pack(ctx) && cycle_neighborhoods_at_least(g, ctx, 23);
        });
    }
    if (name == "four-cycle-diagonals") {
        // Pendants 0-4, 0-5, 2-6, 2-7 with all four edges between {4,5} and {6,7}.
        EdgeList gadget = {{0, 4}, {0, 5}, {2, 6}, {2, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}};
        return four_cycle_fixture(8, gadget, 10, rng, [](const MultiGraph&, const FourCycleContext& ctx) {
            return ctx.adjacent_pairs.size() < 2 && ctx.diagonals[0].size() == 4;
        });
    }
    throw PreconditionError("unknown fixture '" + name + "'");
}

ListAssignment random_lists(std::size_t edge_count, std::size_t k, std::size_t palette, Rng& rng) {
    if (k > palette) throw PreconditionError("list size exceeds the palette");
    std::vector<ColorId> colors(palette);
    std::iota(colors.begin(), colors.end(), ColorId{1});
    std::vector<std::vector<ColorId>> lists;
    lists.reserve(edge_count);
    for (std::size_t e = 0; e < edge_count; ++e) {
        for (std::size_t i = 0; i < k; ++i) {
            std::swap(colors[i], colors[i + uniform_index(palette - i, rng)]);
        }
        std::vector<ColorId> l(colors.begin(), colors.begin() + static_cast<long>(k));
        std::sort(l.begin(), l.end());
        lists.push_back(std::move(l));
    }
    return ListAssignment(std::move(lists));
}

ListAssignment lists_from_spec(const std::string& spec, std::size_t edge_count, Rng& rng) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = spec.find(':', start);
        parts.push_back(spec.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    const auto parse = [&](const std::string& s) -> std::size_t {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw PreconditionError("bad list spec '" + spec + "'");
        }
        return std::stoul(s);
    };
    if (parts.size() == 2 && parts[0] == "uniform") return ListAssignment::uniform(edge_count, parse(parts[1]));
    if (parts.size() == 3 && parts[0] == "random") return random_lists(edge_count, parse(parts[1]), parse(parts[2]), rng);
    throw PreconditionError("bad list spec '" + spec + "', expected uniform:k or random:k:palette");
}

}  // namespace strongce
