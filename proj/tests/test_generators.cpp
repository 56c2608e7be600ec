#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "strongce/errors.hpp"
#include "strongce/generators.hpp"
#include "strongce/io.hpp"

using namespace strongce;

namespace {

bool regular4(const MultiGraph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 4) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("cages are 4-regular with the right girth and order") {
    const auto r = robertson_graph();
    CHECK(r.vertex_count() == 19);
    CHECK(r.edge_count() == 38);
    CHECK(regular4(r));
    CHECK(r.is_simple());
    CHECK_FALSE(oracle::has_cycle_of_length(r, 3));
    CHECK_FALSE(oracle::has_cycle_of_length(r, 4));
    CHECK(oracle::has_cycle_of_length(r, 5));

    const auto c = cage_4_6();
    CHECK(c.vertex_count() == 26);
    CHECK(c.edge_count() == 52);
    CHECK(regular4(c));
    for (std::size_t k : {3, 4, 5}) CHECK_FALSE(oracle::has_cycle_of_length(c, k));
    CHECK(oracle::has_cycle_of_length(c, 6));
}

TEST_CASE("random regular generators") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        CHECK(regular4(random_pairing_regular4(3 + trial, rng)));
        const auto s = random_simple_regular4(5 + trial, rng);
        CHECK(regular4(s));
        CHECK(s.is_simple());
        const auto b = random_bipartite_regular4(4 + trial, rng);
        CHECK(regular4(b));
        CHECK_FALSE(oracle::has_cycle_of_length(b, 3));
        CHECK(max_degree(random_max_degree4(10, 40, rng)) <= 4);
        CHECK(max_degree(random_tree(1 + trial, 4, rng)) <= 4);
        CHECK(random_tree(1 + trial, 4, rng).edge_count() == static_cast<std::size_t>(trial));
    }
    CHECK_THROWS_AS(random_simple_regular4(4, rng), PreconditionError);
    CHECK_THROWS_AS(random_bipartite_regular4(3, rng), PreconditionError);
}

TEST_CASE("lifts keep the girth and relabeling keeps the shape") {
    Rng rng(19);
    const auto lift = random_lift(cage_4_6(), rng);
    CHECK(lift.vertex_count() == 52);
    CHECK(regular4(lift));
    CHECK(girth_and_witness(lift).girth >= std::optional<std::size_t>(6));
    const auto p = relabeled(petersen_graph(), rng);
    CHECK(p.edge_count() == 15);
    CHECK(girth_and_witness(p).girth == 5);
}

TEST_CASE("pad_to_regular4 completes degrees") {
    Rng rng(2);
    const auto g = pad_to_regular4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 10, true, rng);
    REQUIRE(g);
    CHECK(regular4(*g));
    CHECK(g->is_simple());
    CHECK_FALSE(oracle::has_cycle_of_length(*g, 3));
}

TEST_CASE("fixtures are deterministic and well formed") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto a = fixture(name, 5);
        const auto b = fixture(name, 5);
        CHECK(serialize_graph(a.graph) == serialize_graph(b.graph));
        CHECK(max_degree(a.graph) <= 4);
        if (a.cycle) CHECK(oracle::is_genuine_cycle(a.graph, *a.cycle));
    }
    CHECK_THROWS_AS(fixture("no-such-fixture", 0), PreconditionError);
    const auto fig = fixture("fig1-witness", 0).graph;
    CHECK(oracle::Conflicts(fig).neighborhood_size(0) == 24);
}

TEST_CASE("list specs") {
    Rng rng(3);
    CHECK(lists_from_spec("uniform:3", 2, rng) == ListAssignment::uniform(2, 3));
    const auto r = lists_from_spec("random:22:66", 10, rng);
    CHECK(r.min_list_size() == 22);
    for (const auto& l : r.lists()) {
        CHECK(std::is_sorted(l.begin(), l.end()));
        CHECK(l.back() <= 66);
        CHECK(l.front() >= 1);
    }
    CHECK_THROWS_AS(lists_from_spec("random:22", 1, rng), PreconditionError);
    CHECK_THROWS_AS(lists_from_spec("uniform:x", 1, rng), PreconditionError);
}
