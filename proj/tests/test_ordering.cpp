#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "strongce/errors.hpp"
#include "strongce/generators.hpp"
#include "strongce/ordering.hpp"
#include "support.hpp"

using namespace strongce;

TEST_CASE("compatible_order_vertex lists far edges first and skips the center") {
    const auto g = path_graph(6);  // edges 0..4
    const auto order = compatible_order_vertex(g, 0);
    CHECK(order.edges == std::vector<EdgeId>{4, 3, 2, 1});
    CHECK(std::is_sorted(order.distance_class.rbegin(), order.distance_class.rend()));
    const std::vector<EdgeId> skip = {3};
    CHECK(compatible_order_vertex(g, 0, skip).edges == std::vector<EdgeId>{4, 2, 1});
}

TEST_CASE("compatible_order_cycle omits the cycle edges") {
    const auto g = cage_4_6();
    const auto c = *girth_and_witness(g).witness;
    const auto order = compatible_order_cycle(g, c);
    CHECK(order.edges.size() == g.edge_count() - c.length());
    for (EdgeId e : order.edges) CHECK_FALSE(c.contains_edge(e));
    CHECK(std::is_sorted(order.distance_class.rbegin(), order.distance_class.rend()));
}

TEST_CASE("greedy stops at the first edge with nothing left") {
    const auto g = path_graph(3);
    const auto lists = ListAssignment({{1}, {1}});
    PartialColoring pc(g, lists);
    const std::vector<EdgeId> order = {0, 1};
    const auto r = greedy_color(pc, order);
    CHECK_FALSE(r.ok());
    CHECK(r.failure->edge == 1);
    CHECK(r.colored == 1);
}

TEST_CASE("color_guaranteed throws when the bound is exceeded") {
    const auto g = path_graph(3);
    const auto lists = ListAssignment::uniform(2, 5);
    PartialColoring pc(g, lists);
    const std::vector<EdgeId> order = {0, 1};
    CHECK_THROWS_AS(color_guaranteed(pc, order, 0), InternalGuaranteeViolated);
}

TEST_CASE("property: coloring G - v and G - E(C) from 21-lists keeps |N'(e)| <= 20") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = trial % 2 ? random_simple_regular4(5 + trial, rng) : random_bipartite_regular4(4 + trial / 2, rng);
        const auto lists = random_lists(g.edge_count(), 21, 63, rng);
        std::size_t worst = 0;
        const StepObserver watch = [&](const GreedyStep& s) { worst = std::max(worst, s.colored_neighborhood); };

        const auto v = static_cast<VertexId>(rng() % g.vertex_count());
        const auto pc = color_all_but_vertex(g, lists, v, watch);
        for (EdgeId e = 0; e < g.edge_count(); ++e) CHECK(pc.is_colored(e) != g.edge(e).touches(v));
        CHECK_FALSE(verify_partial(pc).has_value());

        const auto c = support::random_cycle(g, rng);
        REQUIRE(c);
        const auto pc2 = color_all_but_cycle(g, lists, *c, watch);
        for (EdgeId e = 0; e < g.edge_count(); ++e) CHECK(pc2.is_colored(e) != c->contains_edge(e));
        CHECK(worst <= 20);
    }
}

TEST_CASE("color_all_but_vertex rejects short lists") {
    const auto g = cage_4_6();
    CHECK_THROWS_AS(color_all_but_vertex(g, ListAssignment::uniform(g.edge_count(), 20), 0), PreconditionError);
}

TEST_CASE("spoke sets on the (4,6)-cage are disjoint triples") {
    const auto g = cage_4_6();
    const auto s = spoke_sets(g, 0);
    REQUIRE(s.spokes.size() == 4);
    std::set<EdgeId> seen(s.spokes.begin(), s.spokes.end());
    for (int i = 0; i < 4; ++i) {
        REQUIRE(s.sets[i].size() == 3);
        const VertexId far = g.edge(s.spokes[i]).other(0);
        for (EdgeId e : s.sets[i]) {
            CHECK(g.edge(e).touches(far));
            seen.insert(e);
        }
    }
    CHECK(seen.size() == 16);
}

TEST_CASE("color_with_precolored keeps the precolors and stays within 21") {
    const auto g = cage_4_6();
    Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto lists = random_lists(g.edge_count(), 22, 44, rng);
        const auto s = spoke_sets(g, 0);
        std::vector<Precolor> pre;
        for (int i = 0; i < 4; ++i) pre.push_back({s.sets[i][0], lists[s.sets[i][0]][static_cast<std::size_t>(i)]});
        std::size_t worst = 0;
        const auto pc = color_with_precolored(
            g, lists, 0, pre, [&](const GreedyStep& st) { worst = std::max(worst, st.colored_neighborhood); });
        for (const auto& p : pre) CHECK(pc.color(p.edge) == p.color);
        for (EdgeId e : s.spokes) CHECK_FALSE(pc.is_colored(e));
        CHECK(worst <= 21);
        CHECK_FALSE(verify_partial(pc).has_value());
    }
}

TEST_CASE("color_with_precolored rejects two precolors on one set") {
    const auto g = cage_4_6();
    const auto lists = ListAssignment::uniform(g.edge_count(), 22);
    const auto s = spoke_sets(g, 0);
    const std::vector<Precolor> pre = {{s.sets[0][0], 1}, {s.sets[0][1], 2}};
    CHECK_THROWS_AS(color_with_precolored(g, lists, 0, pre), PreconditionError);
}
