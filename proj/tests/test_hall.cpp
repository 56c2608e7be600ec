#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "strongce/errors.hpp"
#include "strongce/generators.hpp"
#include "strongce/hall.hpp"

using namespace strongce;

namespace {

std::vector<std::vector<ColorId>> random_family(std::size_t n, Rng& rng) {
    std::vector<std::vector<ColorId>> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::set<ColorId> l;
        const auto size = rng() % 4;
        while (l.size() < size) l.insert(1 + static_cast<ColorId>(rng() % (n + 2)));
        out.emplace_back(l.begin(), l.end());
    }
    return out;
}

bool is_sdr(const std::vector<std::vector<ColorId>>& lists, const std::vector<ColorId>& reps) {
    if (reps.size() != lists.size()) return false;
    for (std::size_t i = 0; i < lists.size(); ++i) {
        if (std::find(lists[i].begin(), lists[i].end(), reps[i]) == lists[i].end()) return false;
    }
    return std::set<ColorId>(reps.begin(), reps.end()).size() == reps.size();
}

}  // namespace

TEST_CASE("find_sdr on small families") {
    const std::vector<std::vector<ColorId>> ok = {{1, 2}, {1}, {2, 3}};
    const auto r = find_sdr(ok);
    REQUIRE(r);
    CHECK(is_sdr(ok, *r));
    const std::vector<std::vector<ColorId>> tight = {{1, 2}, {1, 2}, {1, 2}};
    CHECK_FALSE(find_sdr(tight).has_value());
    const auto d = max_discrepancy(tight);
    CHECK(d.disc == 1);
    CHECK(d.members.size() == 3);
    CHECK(d.union_colors == std::vector<ColorId>{1, 2});
}

TEST_CASE("max_bipartite_matching size equals the SDR test") {
    const std::vector<std::vector<ColorId>> lists = {{1}, {1}, {2, 3}};
    const auto m = max_bipartite_matching(lists);
    CHECK(m.size == 2);
    CHECK(m.assignment[2].has_value());
}

TEST_CASE("max_discrepancy of an empty family is a precondition error") {
    CHECK_THROWS_AS(max_discrepancy(std::vector<std::vector<ColorId>>{}), PreconditionError);
}

TEST_CASE("property: max_discrepancy matches subset enumeration") {
    Rng rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        const auto lists = random_family(1 + rng() % 10, rng);
        const auto r = max_discrepancy(lists);
        const long expected = oracle::max_discrepancy_exhaustive(lists);
        CHECK(r.disc == expected);
        std::vector<std::size_t> members(r.members.begin(), r.members.end());
        CHECK_FALSE(members.empty());
        CHECK(oracle::discrepancy_of(lists, members) == r.disc);
        // Hall: distinct representatives exist iff no subset is deficient.
        const auto sdr = find_sdr(lists);
        CHECK(sdr.has_value() == (expected <= 0));
        if (sdr) CHECK(is_sdr(lists, *sdr));
    }
}

TEST_CASE("sdr_completion and max_discrepancy_set use the available lists") {
    // A star: all four edges pairwise conflict.
    const auto g = star_graph(4);
    const ListAssignment lists({{1, 2}, {1, 2}, {2, 3}, {1, 5}});
    PartialColoring pc(g, lists);
    pc.assign(3, 5);
    const std::vector<EdgeId> t = {0, 1, 2};
    const auto sdr = sdr_completion(pc, t);
    REQUIRE(sdr);
    pc.unassign(3);
    pc.assign(3, 1);
    CHECK_FALSE(sdr_completion(pc, t).has_value());
    const auto r = max_discrepancy_set(pc, t);
    CHECK(r.disc == 1);
    // {0, 1} and {0, 1, 2} both have discrepancy 1.
    CHECK(r.members.size() >= 2);
    CHECK(r.members[0] == 0);
    CHECK(r.members[1] == 1);
}

TEST_CASE("color_max_disc_then_extend runs the colorer only on a deficient subset") {
    const auto g = star_graph(3);
    const ListAssignment lists({{1, 2}, {1, 2}, {2, 3}});
    PartialColoring pc(g, lists);
    bool called = false;
    const std::vector<EdgeId> t = {0, 1, 2};
    const auto r = color_max_disc_then_extend(pc, t, [&](PartialColoring&, const DiscrepancyReport&) {
        called = true;
        return true;
    });
    CHECK(r.ok);
    CHECK_FALSE(called);
    CHECK(pc.complete());
}

TEST_CASE("color_max_disc_then_extend reports a colorer that leaves edges uncolored") {
    const auto g = star_graph(3);
    const ListAssignment lists({{1, 2}, {1, 2}, {1, 2}});
    PartialColoring pc(g, lists);
    const std::vector<EdgeId> t = {0, 1, 2};
    const auto r = color_max_disc_then_extend(pc, t, [](PartialColoring&, const DiscrepancyReport&) { return true; });
    CHECK_FALSE(r.ok);
    CHECK(r.subset.disc == 1);
    CHECK(r.failure.find("uncolored") != std::string::npos);
}
