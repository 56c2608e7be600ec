#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace strongce {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Sentinel distance for unreachable vertex/edge pairs.
inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    bool is_loop() const noexcept { return u == v; }
    bool touches(VertexId w) const noexcept { return u == w || v == w; }
    /// The endpoint opposite to `w` (w itself for a loop).
    VertexId other(VertexId w) const noexcept { return u == w ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with loops and parallel edges. Immutable after build.
///
/// Edge ids are positions in the input edge list. A loop appears twice in its
/// vertex's incidence list, so degree(v) counts it twice. The edge neighborhood
/// N(e) (edges at distance <= 1, excluding e) is computed once at build time.
class MultiGraph {
public:
    MultiGraph() = default;

    /// Throws GraphError if an endpoint is >= vertex_count.
    static MultiGraph build(std::size_t vertex_count,
                            std::span<const std::pair<VertexId, VertexId>> endpoints);
    static MultiGraph build(std::size_t vertex_count,
                            std::initializer_list<std::pair<VertexId, VertexId>> endpoints) {
        std::vector<std::pair<VertexId, VertexId>> v(endpoints);
        return build(vertex_count, v);
    }

    std::size_t vertex_count() const noexcept { return incidence_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(v); }
    std::size_t degree(VertexId v) const { return incidence_.at(v).size(); }

    /// Distinct neighbors of v (excluding v itself for loops), ascending.
    std::span<const VertexId> neighbors(VertexId v) const { return neighbors_.at(v); }

    /// N(e) in ascending edge-id order.
    std::span<const EdgeId> neighborhood(EdgeId e) const { return neighborhoods_.at(e); }

    bool adjacent(VertexId a, VertexId b) const;
    bool is_simple() const noexcept { return simple_; }

    std::vector<std::pair<VertexId, VertexId>> endpoint_pairs() const;

    friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
        return a.edges_ == b.edges_ && a.incidence_.size() == b.incidence_.size();
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<std::vector<VertexId>> neighbors_;
    std::vector<std::vector<EdgeId>> neighborhoods_;
    bool simple_ = true;
};

std::size_t max_degree(const MultiGraph& g);

/// Vertex of minimum degree, smallest id on ties. Throws GraphError on an empty graph.
std::pair<VertexId, std::size_t> min_degree_vertex(const MultiGraph& g);

/// BFS distances from a set of sources; kInfiniteDistance when unreachable.
std::vector<std::size_t> bfs_distances(const MultiGraph& g, std::span<const VertexId> sources);

/// Minimum vertex distance between endpoints of e1 and e2.
std::size_t edge_distance(const MultiGraph& g, EdgeId e1, EdgeId e2);

/// N(e) as an owned vector (same content as g.neighborhood(e)).
std::vector<EdgeId> neighborhood(const MultiGraph& g, EdgeId e);

/// A closed walk without repeated vertices. vertices[i] and vertices[i+1]
/// (cyclically) are the endpoints of edges[i]. A loop is a 1-cycle, a parallel
/// pair a 2-cycle.
struct Cycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    std::size_t length() const noexcept { return edges.size(); }
    bool contains_edge(EdgeId e) const;
    bool contains_vertex(VertexId v) const;
};

/// Checks that `c` is a genuine cycle of `g`.
bool is_cycle(const MultiGraph& g, const Cycle& c);

struct GirthResult {
    std::optional<std::size_t> girth;  // nullopt: acyclic
    std::optional<Cycle> witness;
};

GirthResult girth_and_witness(const MultiGraph& g);

/// Some k-cycle (k in {3,4,5}) through distinct vertices, or nullopt.
/// Deterministic: the cycle with the lexicographically smallest edge-id
/// sequence starting from the smallest start vertex is returned.
std::optional<Cycle> find_cycle_of_length(const MultiGraph& g, std::size_t k);

/// Square of the line graph: vertices are edges of g, adjacency is edge distance <= 1.
class ConflictGraph {
public:
    explicit ConflictGraph(std::vector<std::vector<EdgeId>> adjacency)
        : adjacency_(std::move(adjacency)) {}

    std::size_t size() const noexcept { return adjacency_.size(); }
    std::span<const EdgeId> neighbors(EdgeId e) const { return adjacency_.at(e); }
    bool adjacent(EdgeId a, EdgeId b) const;
    std::size_t edge_count() const;

private:
    std::vector<std::vector<EdgeId>> adjacency_;
};

/// Built independently of MultiGraph::neighborhood: every pair of edges
/// touching the endpoints of a common edge f conflicts.
ConflictGraph conflict_graph(const MultiGraph& g);

/// A connected component as its own graph plus the id maps back to the parent.
struct Component {
    MultiGraph graph;
    std::vector<VertexId> vertex_map;  // local -> parent
    std::vector<EdgeId> edge_map;      // local -> parent
};

/// Components that contain at least one edge, ordered by smallest vertex id.
std::vector<Component> edge_components(const MultiGraph& g);

}  // namespace strongce
