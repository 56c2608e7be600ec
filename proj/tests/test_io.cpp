#include <doctest.h>

#include <functional>

#include "strongce/errors.hpp"
#include "strongce/generators.hpp"
#include "strongce/io.hpp"

using namespace strongce;

namespace {

std::size_t parse_error_line(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("graph files round-trip byte for byte") {
    const std::string text = "strongce v1\nn 4\n0 1\n1 1\n1 2\n1 2\n";
    const auto g = parse_graph(text);
    CHECK(g.edge_count() == 4);
    CHECK(g.edge(1).is_loop());
    CHECK(serialize_graph(g) == text);
    for (const auto& name : fixture_names()) {
        const auto s = serialize_graph(fixture(name, 2).graph);
        CHECK(serialize_graph(parse_graph(s)) == s);
    }
}

TEST_CASE("graph files ignore comments and blank lines") {
    const auto g = parse_graph("# a path\nstrongce v1\n\nn 3   # three vertices\n0 1\n# middle\n1 2\n");
    CHECK(g.edge_count() == 2);
    CHECK(g.vertex_count() == 3);
}

TEST_CASE("graph parse errors carry the line") {
    CHECK(parse_error_line([] { parse_graph("strongce v2\nn 2\n"); }) == 1);
    CHECK(parse_error_line([] { parse_graph("strongce v1\nm 2\n"); }) == 2);
    CHECK(parse_error_line([] { parse_graph("strongce v1\nn 2\n0 1\n0 2\n"); }) == 4);
    CHECK(parse_error_line([] { parse_graph("strongce v1\nn 2\n0 x\n"); }) == 3);
    CHECK(parse_error_line([] { parse_graph("strongce v1\nn 2\n0 1 1\n"); }) == 3);
    CHECK(parse_error_line([] { parse_graph("strongce v1\nn -2\n"); }) == 2);
    CHECK(parse_error_line([] { parse_graph(""); }) == 1);
}

TEST_CASE("lists files round-trip and validate") {
    const std::string text = "0 : 1 2 5\n1 : 3\n2 :\n";
    const auto l = parse_lists(text);
    CHECK(l.size() == 3);
    CHECK(l[2].empty());
    CHECK(serialize_lists(l) == text);
    CHECK(parse_lists("1 : 4\n0 : 2\n", 2)[0] == std::vector<ColorId>{2});
    CHECK(parse_error_line([] { parse_lists("0 : 2 1\n"); }) == 1);
    CHECK(parse_error_line([] { parse_lists("0 : 1\n0 : 2\n"); }) == 2);
    CHECK(parse_error_line([] { parse_lists("0 : 1\n2 : 2\n"); }) == 2);
    CHECK(parse_error_line([] { parse_lists("0 1 2\n"); }) == 1);
    CHECK(parse_error_line([] { parse_lists("3 : 1\n", 2); }) == 1);
    CHECK_THROWS_AS(serialize_lists(ListAssignment({{3, 1}})), PreconditionError);
    Rng rng(1);
    const auto random = random_lists(40, 22, 66, rng);
    CHECK(serialize_lists(parse_lists(serialize_lists(random), 40)) == serialize_lists(random));
}

TEST_CASE("coloring files round-trip and validate") {
    const std::vector<ColorId> c = {4, 1, 9};
    const auto text = serialize_coloring(c);
    CHECK(text == "0 4\n1 1\n2 9\n");
    CHECK(parse_coloring(text, 3) == c);
    CHECK(parse_error_line([] { parse_coloring("1 4\n"); }) == 1);
    CHECK(parse_error_line([] { parse_coloring("0 4\n", 2); }) == 1);
    CHECK(parse_error_line([] { parse_coloring("0 4 5\n"); }) == 1);
}

TEST_CASE("read_file reports missing files") {
    CHECK_THROWS_AS(read_file("/nonexistent/strongce/file"), std::runtime_error);
}
