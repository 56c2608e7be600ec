#include "strongce/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "strongce/errors.hpp"

namespace strongce {

MultiGraph MultiGraph::build(std::size_t vertex_count,
                             std::span<const std::pair<VertexId, VertexId>> endpoints) {
    MultiGraph g;
    g.edges_.reserve(endpoints.size());
    g.incidence_.assign(vertex_count, {});
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
        auto [u, v] = endpoints[i];
        if (u >= vertex_count || v >= vertex_count) {
            throw GraphError("edge " + std::to_string(i) + " (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") has an endpoint >= vertex count " +
                             std::to_string(vertex_count));
        }
        auto id = static_cast<EdgeId>(i);
        g.edges_.push_back({u, v});
        g.incidence_[u].push_back(id);
        g.incidence_[v].push_back(id);
        if (u == v) g.simple_ = false;
    }

    g.neighbors_.assign(vertex_count, {});
    for (VertexId v = 0; v < vertex_count; ++v) {
        auto& nb = g.neighbors_[v];
        for (EdgeId e : g.incidence_[v]) {
            VertexId w = g.edges_[e].other(v);
            if (w != v) nb.push_back(w);
        }
        std::sort(nb.begin(), nb.end());
        auto last = std::unique(nb.begin(), nb.end());
        if (last != nb.end()) g.simple_ = false;
        nb.erase(last, nb.end());
    }

    // N(e) = edges incident to the closed neighborhood of e's endpoints, minus e.
    g.neighborhoods_.assign(g.edges_.size(), {});
    std::vector<VertexId> closed;
    for (EdgeId e = 0; e < g.edges_.size(); ++e) {
        closed.clear();
        for (VertexId x : {g.edges_[e].u, g.edges_[e].v}) {
            closed.push_back(x);
            closed.insert(closed.end(), g.neighbors_[x].begin(), g.neighbors_[x].end());
        }
        std::sort(closed.begin(), closed.end());
        closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
        auto& out = g.neighborhoods_[e];
        for (VertexId w : closed) {
            for (EdgeId f : g.incidence_[w]) {
                if (f != e) out.push_back(f);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return g;
}

bool MultiGraph::adjacent(VertexId a, VertexId b) const {
    const auto& nb = neighbors_.at(a);
    if (a == b) {
        return std::any_of(incidence_[a].begin(), incidence_[a].end(),
                           [&](EdgeId e) { return edges_[e].is_loop(); });
    }
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::pair<VertexId, VertexId>> MultiGraph::endpoint_pairs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
}

std::size_t max_degree(const MultiGraph& g) {
    std::size_t best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::pair<VertexId, std::size_t> min_degree_vertex(const MultiGraph& g) {
    if (g.vertex_count() == 0) throw GraphError("min_degree_vertex: graph has no vertices");
    VertexId best = 0;
    for (VertexId v = 1; v < g.vertex_count(); ++v) {
        if (g.degree(v) < g.degree(best)) best = v;
    }
    return {best, g.degree(best)};
}

std::vector<std::size_t> bfs_distances(const MultiGraph& g, std::span<const VertexId> sources) {
    std::vector<std::size_t> dist(g.vertex_count(), kInfiniteDistance);
    std::deque<VertexId> queue;
    for (VertexId s : sources) {
        if (dist.at(s) != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : g.neighbors(x)) {
            if (dist[y] == kInfiniteDistance) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

std::size_t edge_distance(const MultiGraph& g, EdgeId e1, EdgeId e2) {
    const Edge& a = g.edge(e1);
    const Edge& b = g.edge(e2);
    const VertexId src[] = {a.u, a.v};
    auto dist = bfs_distances(g, src);
    return std::min(dist[b.u], dist[b.v]);
}

std::vector<EdgeId> neighborhood(const MultiGraph& g, EdgeId e) {
    auto nb = g.neighborhood(e);
    return {nb.begin(), nb.end()};
}

bool Cycle::contains_edge(EdgeId e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

bool Cycle::contains_vertex(VertexId v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool is_cycle(const MultiGraph& g, const Cycle& c) {
    const std::size_t k = c.edges.size();
    if (k == 0 || c.vertices.size() != k) return false;
    auto vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    auto es = c.edges;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (c.edges[i] >= g.edge_count() || c.vertices[i] >= g.vertex_count()) return false;
        const Edge& e = g.edge(c.edges[i]);
        VertexId a = c.vertices[i];
        VertexId b = c.vertices[(i + 1) % k];
        if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
    }
    return true;
}

namespace {

std::optional<Cycle> find_loop(const MultiGraph& g) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).is_loop()) return Cycle{{g.edge(e).u}, {e}};
    }
    return std::nullopt;
}

std::optional<Cycle> find_parallel_pair(const MultiGraph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            const Edge& a = g.edge(inc[i]);
            if (a.is_loop()) continue;
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                const Edge& b = g.edge(inc[j]);
                if (inc[j] != inc[i] && !b.is_loop() && a.other(v) == b.other(v)) {
                    return Cycle{{v, a.other(v)}, {inc[i], inc[j]}};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

GirthResult girth_and_witness(const MultiGraph& g) {
    if (auto c = find_loop(g)) return {1, std::move(c)};
    if (auto c = find_parallel_pair(g)) return {2, std::move(c)};

    // Simple graph: BFS from every root; a non-tree edge (x,y) closes a walk of
    // length d[x]+d[y]+1. The global minimum of that quantity is the girth and
    // the walk attaining it is a simple cycle.
    const std::size_t n = g.vertex_count();
    std::size_t best = kInfiniteDistance;
    std::optional<Cycle> witness;
    std::vector<std::size_t> dist(n);
    std::vector<EdgeId> parent_edge(n);
    std::vector<VertexId> parent(n);
    for (VertexId root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kInfiniteDistance);
        dist[root] = 0;
        parent[root] = root;
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            if (2 * dist[x] >= best) break;
            for (EdgeId e : g.incident(x)) {
                VertexId y = g.edge(e).other(x);
                if (dist[y] == kInfiniteDistance) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    parent_edge[y] = e;
                    queue.push_back(y);
                } else {
                    if (x != root && e == parent_edge[x]) continue;
                    std::size_t len = dist[x] + dist[y] + 1;
                    if (len < best) {
                        // Walk root -> x, edge e, y -> root.
                        std::vector<VertexId> px, py;
                        std::vector<EdgeId> ex, ey;
                        for (VertexId w = x; w != root; w = parent[w]) {
                            px.push_back(w);
                            ex.push_back(parent_edge[w]);
                        }
                        for (VertexId w = y; w != root; w = parent[w]) {
                            py.push_back(w);
                            ey.push_back(parent_edge[w]);
                        }
                        Cycle c;
                        c.vertices.push_back(root);
                        for (auto it = px.rbegin(); it != px.rend(); ++it) c.vertices.push_back(*it);
                        for (VertexId w : py) c.vertices.push_back(w);
                        for (auto it = ex.rbegin(); it != ex.rend(); ++it) c.edges.push_back(*it);
                        c.edges.push_back(e);
                        for (EdgeId f : ey) c.edges.push_back(f);
                        if (is_cycle(g, c)) {
                            best = len;
                            witness = std::move(c);
                        }
                    }
                }
            }
        }
    }
    if (!witness) return {};
    return {best, std::move(witness)};
}

std::optional<Cycle> find_cycle_of_length(const MultiGraph& g, std::size_t k) {
    if (k < 3 || k > 5) return std::nullopt;
    const std::size_t n = g.vertex_count();
    std::vector<VertexId> path_v;
    std::vector<EdgeId> path_e;
    std::vector<char> on_path(n, 0);
    std::optional<Cycle> found;

    // Cycles are rooted at their smallest vertex to keep the search canonical.
    std::function<bool(VertexId, VertexId)> extend = [&](VertexId root, VertexId x) -> bool {
        for (EdgeId e : g.incident(x)) {
            const Edge& ed = g.edge(e);
            if (ed.is_loop()) continue;
            VertexId y = ed.other(x);
            if (y == root && path_e.size() == k - 1) {
                if (path_e.size() >= 1 && e == path_e.back()) continue;
                path_e.push_back(e);
                found = Cycle{path_v, path_e};
                return true;
            }
            if (y <= root || on_path[y] || path_e.size() + 1 >= k) continue;
            on_path[y] = 1;
            path_v.push_back(y);
            path_e.push_back(e);
            if (extend(root, y)) return true;
            path_v.pop_back();
            path_e.pop_back();
            on_path[y] = 0;
        }
        return false;
    };

    for (VertexId root = 0; root < n; ++root) {
        path_v.assign(1, root);
        path_e.clear();
        on_path[root] = 1;
        bool ok = extend(root, root);
        on_path[root] = 0;
        if (ok) return found;
    }
    return std::nullopt;
}

bool ConflictGraph::adjacent(EdgeId a, EdgeId b) const {
    const auto& nb = adjacency_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t ConflictGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& nb : adjacency_) total += nb.size();
    return total / 2;
}

ConflictGraph conflict_graph(const MultiGraph& g) {
    std::vector<std::vector<EdgeId>> adj(g.edge_count());
    std::vector<EdgeId> touching;
    for (const Edge& f : g.edges()) {
        touching.clear();
        for (EdgeId e : g.incident(f.u)) touching.push_back(e);
        for (EdgeId e : g.incident(f.v)) touching.push_back(e);
        std::sort(touching.begin(), touching.end());
        touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
        for (EdgeId a : touching) {
            for (EdgeId b : touching) {
                if (a != b) adj[a].push_back(b);
            }
        }
    }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return ConflictGraph(std::move(adj));
}

std::vector<Component> edge_components(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<Component> out;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] != -1 || g.degree(s) == 0) continue;
        const int id = static_cast<int>(out.size());
        Component c;
        std::deque<VertexId> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            c.vertex_map.push_back(x);
            for (VertexId y : g.neighbors(x)) {
                if (comp[y] == -1) {
                    comp[y] = id;
                    queue.push_back(y);
                }
            }
        }
        std::sort(c.vertex_map.begin(), c.vertex_map.end());
        std::vector<VertexId> local(n, 0);
        for (std::size_t i = 0; i < c.vertex_map.size(); ++i) {
            local[c.vertex_map[i]] = static_cast<VertexId>(i);
        }
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (comp[ed.u] == id) {
                c.edge_map.push_back(e);
                pairs.emplace_back(local[ed.u], local[ed.v]);
            }
        }
        c.graph = MultiGraph::build(c.vertex_map.size(), pairs);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace strongce
