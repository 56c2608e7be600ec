#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "strongce/coloring.hpp"
#include "strongce/graph.hpp"

namespace strongce {

using Rng = std::mt19937_64;

MultiGraph path_graph(std::size_t vertices);
MultiGraph cycle_graph(std::size_t vertices);
MultiGraph star_graph(std::size_t leaves);
MultiGraph complete_graph(std::size_t vertices);
MultiGraph complete_bipartite(std::size_t a, std::size_t b);
MultiGraph petersen_graph();

/// The unique (4,5)-cage: 19 vertices, 38 edges.
MultiGraph robertson_graph();
/// The (4,6)-cage, the point-line incidence graph of the projective plane
/// over GF(3): 26 vertices, 52 edges.
MultiGraph cage_4_6();
/// Edge 0 joins two vertices whose other 6 neighbors each carry three
/// pendant edges, so |N(0)| = 24.
MultiGraph neighborhood_extremal();

/// Uniform random labeled tree (Pruefer code) with max degree <= max_degree,
/// by rejection.
MultiGraph random_tree(std::size_t vertices, std::size_t max_degree, Rng& rng);
/// Configuration model: a random perfect matching of 4 half-edges per vertex.
/// May contain loops and parallel edges. Requires vertices >= 1.
MultiGraph random_pairing_regular4(std::size_t vertices, Rng& rng);
/// Simple 4-regular graph by rejection from the configuration model.
/// Requires vertices >= 5.
MultiGraph random_simple_regular4(std::size_t vertices, Rng& rng);
/// Simple bipartite 4-regular graph with `half` vertices per side (>= 4).
MultiGraph random_bipartite_regular4(std::size_t half, Rng& rng);
/// Random multigraph with max degree <= 4: `edges` attempts at adding a
/// uniformly random pair (loops included) when both endpoints have room.
MultiGraph random_max_degree4(std::size_t vertices, std::size_t edges, Rng& rng);
/// Random 2-lift: each edge uv becomes u0v0,u1v1 or u0v1,u1v0. Girth does not drop.
MultiGraph random_lift(const MultiGraph& base, Rng& rng);
/// Same graph under a random vertex permutation and edge order.
MultiGraph relabeled(const MultiGraph& g, Rng& rng);

/// Adds `extra` vertices and completes the degree of every vertex to 4 with a
/// random matching of the missing half-edges, rejecting loops, parallel edges
/// and (optionally) triangles. nullopt after `attempts` failures.
std::optional<MultiGraph> pad_to_regular4(std::size_t vertices,
                                          const std::vector<std::pair<VertexId, VertexId>>& edges,
                                          std::size_t extra, bool triangle_free, Rng& rng,
                                          std::size_t attempts = 20000);

/// A named graph, with the cycle it was built around when there is one.
struct Fixture {
    MultiGraph graph;
    std::optional<Cycle> cycle;
};

/// Names: fig1-witness, cage-4-5, cage-4-6, petersen, k44, triangle,
/// regular4-minus-edge, loop, parallel, four-cycle-two-pairs,
/// four-cycle-one-pair, four-cycle-no-pairs, four-cycle-diagonals.
/// Throws PreconditionError for an unknown name.
Fixture fixture(const std::string& name, std::uint64_t seed);
std::vector<std::string> fixture_names();

/// Every list is a sorted uniform sample of k colors from 1..palette.
ListAssignment random_lists(std::size_t edge_count, std::size_t k, std::size_t palette, Rng& rng);

/// "uniform:k" or "random:k:palette". Throws PreconditionError when malformed.
ListAssignment lists_from_spec(const std::string& spec, std::size_t edge_count, Rng& rng);

}  // namespace strongce
