#include <doctest.h>

#include <cstdlib>

#include "cli_harness.hpp"
#include "strongce/io.hpp"

using harness::run;
using namespace strongce;

TEST_CASE("coeff") {
    CHECK(run({"coeff", "--paper"}).out == "-1\n");
    harness::TempDir dir;
    write_file(dir.file("one"), "1 2\n");
    CHECK(run({"coeff", "--factors", dir.file("one"), "--monomial", "x1"}).out == "1\n");
    write_file(dir.file("two"), "1 2\n1 3\n");
    CHECK(run({"coeff", "--factors", dir.file("two"), "--monomial", "x1*x2"}).out == "-1\n");
    CHECK(run({"coeff", "--factors", dir.file("two"), "--monomial", "x4"}).out == "0\n");
    write_file(dir.file("bad"), "1 1\n");
    CHECK(run({"coeff", "--factors", dir.file("bad"), "--monomial", "x1"}).code == cli::kExitParse);
    CHECK(run({"coeff"}).code == cli::kExitFailure);
}

TEST_CASE("color exit codes") {
    harness::TempDir dir;
    REQUIRE(run({"gen", "--model", "tree", "--n", "30", "--seed", "1", "--out", dir.file("t.graph")}).code == 0);
    const auto ok = run({"color", dir.file("t.graph"), "--uniform", "22"});
    CHECK(ok.code == cli::kExitOk);
    CHECK(ok.err.find("handler: low-degree") != std::string::npos);
    CHECK(ok.err.find("fallback_depth: 0") != std::string::npos);
    CHECK(run({"color", dir.file("t.graph"), "--uniform", "21"}).code == cli::kExitPrecondition);
    CHECK(run({"color", dir.file("t.graph"), "--uniform", "21", "--allow-short"}).code == cli::kExitOk);

    write_file(dir.file("c5.graph"), "strongce v1\nn 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    CHECK(run({"color", dir.file("c5.graph"), "--uniform", "4", "--allow-short"}).code == cli::kExitColoring);

    write_file(dir.file("broken.graph"), "strongce v1\nn 2\n0 5\n");
    const auto broken = run({"color", dir.file("broken.graph"), "--uniform", "22"});
    CHECK(broken.code == cli::kExitParse);
    CHECK(broken.err.find("line 3") != std::string::npos);

    write_file(dir.file("star.graph"), "strongce v1\nn 6\n0 1\n0 2\n0 3\n0 4\n0 5\n");
    CHECK(run({"color", dir.file("star.graph"), "--uniform", "22"}).code == cli::kExitPrecondition);
    CHECK(run({"color", dir.file("missing.graph"), "--uniform", "22"}).code == cli::kExitParse);
    CHECK(run({"color", dir.file("t.graph")}).code == cli::kExitFailure);
}

TEST_CASE("color output passes verify and the trace shows the handler steps") {
    harness::TempDir dir;
    REQUIRE(run({"gen", "--model", "cage", "--n", "26", "--seed", "3", "--out", dir.file("g"), "--lists",
                 "random:22:66", "--lists-out", dir.file("l")})
                .code == 0);
    const auto result = run({"color", dir.file("g"), dir.file("l"), "--out", dir.file("c"), "--trace"});
    CHECK(result.code == 0);
    CHECK(result.out.find("handler: regular-girth-6") != std::string::npos);
    CHECK(result.out.find("trace: component 0: girth six") != std::string::npos);
    const auto verify = run({"verify", dir.file("g"), dir.file("l"), dir.file("c")});
    CHECK(verify.code == 0);
    CHECK(verify.out == "OK\n");
}

TEST_CASE("verify reports violations") {
    harness::TempDir dir;
    write_file(dir.file("g"), "strongce v1\nn 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    write_file(dir.file("l"), serialize_lists(ListAssignment::uniform(6, 3)));
    write_file(dir.file("good"), "0 1\n1 2\n2 3\n3 1\n4 2\n5 3\n");
    write_file(dir.file("pair"), "0 1\n1 2\n2 1\n3 3\n4 2\n5 3\n");
    write_file(dir.file("list"), "0 1\n1 2\n2 3\n3 1\n4 2\n5 7\n");
    write_file(dir.file("short"), "0 1\n");
    CHECK(run({"verify", dir.file("g"), dir.file("l"), dir.file("good")}).code == 0);
    const auto pair = run({"verify", dir.file("g"), dir.file("l"), dir.file("pair")});
    CHECK(pair.code == cli::kExitFailure);
    CHECK(pair.out == "CONFLICT 0 2 1\n");
    const auto list = run({"verify", dir.file("g"), dir.file("l"), dir.file("list")});
    CHECK(list.code == cli::kExitFailure);
    CHECK(list.out == "LIST 5 7\n");
    CHECK(run({"verify", dir.file("g"), dir.file("l"), dir.file("short")}).code == cli::kExitParse);
}

TEST_CASE("chis") {
    harness::TempDir dir;
    write_file(dir.file("c5"), "strongce v1\nn 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    write_file(dir.file("k14"), "strongce v1\nn 5\n0 1\n0 2\n0 3\n0 4\n");
    write_file(dir.file("p4"), "strongce v1\nn 4\n0 1\n1 2\n2 3\n");
    CHECK(run({"chis", dir.file("c5")}).out == "5\n");
    CHECK(run({"chis", dir.file("k14")}).out == "4\n");
    CHECK(run({"chis", dir.file("p4")}).out == "3\n");
    REQUIRE(run({"gen", "--model", "cage", "--out", dir.file("cage")}).code == 0);
    CHECK(run({"chis", dir.file("cage"), "--limit", "3"}).code == cli::kExitColoring);
}

TEST_CASE("gen is deterministic and honors STRONGCE_SEED") {
    const std::vector<std::string> args = {"gen", "--model", "regular4", "--n", "12", "--seed", "5"};
    const auto a = run(args).out;
    CHECK(a == run(args).out);
    CHECK(a.rfind("strongce v1\nn 12\n", 0) == 0);
    ::setenv("STRONGCE_SEED", "6", 1);
    const auto b = run(args).out;
    ::unsetenv("STRONGCE_SEED");
    CHECK(b != a);
    CHECK(b == run({"gen", "--model", "regular4", "--n", "12", "--seed", "6"}).out);

    const auto fig = run({"gen", "--model", "fixture:fig1-witness"});
    CHECK(fig.code == 0);
    CHECK(parse_graph(fig.out).neighborhood(0).size() == 24);
    CHECK(run({"gen", "--model", "cage", "--n", "20"}).code == cli::kExitPrecondition);
    CHECK(run({"gen", "--model", "regular4"}).code == cli::kExitPrecondition);
    CHECK(run({"gen", "--model", "fixture:nope"}).code == cli::kExitPrecondition);
    CHECK(run({"gen", "--model", "tree", "--n", "5", "--lists", "uniform:22"}).code == cli::kExitFailure);
}

TEST_CASE("bench reports in input order and flags corrupt instances") {
    harness::TempDir dir;
    const auto corpus = dir.file("corpus");
    std::filesystem::create_directories(corpus);
    CHECK(run({"bench", corpus}).code == 0);
    for (const char* seed : {"2", "1"}) {
        REQUIRE(run({"gen", "--model", "regular4", "--n", "16", "--seed", seed, "--out",
                     corpus + "/r" + seed + ".graph", "--lists", "random:22:66", "--lists-out",
                     corpus + "/r" + seed + ".lists"})
                    .code == 0);
    }
    const auto result = run({"bench", corpus, "--out", dir.file("report.json")});
    CHECK(result.code == 0);
    CHECK(result.out.find("r1") < result.out.find("r2"));
    CHECK(result.out.find("succeeded 2 of 2") != std::string::npos);
    const auto report = read_file(dir.file("report.json"));
    CHECK(report.find("\"success_rate\": 1.0") != std::string::npos);

    write_file(corpus + "/z.graph", "garbage\n");
    const auto bad = run({"bench", corpus});
    CHECK(bad.code == cli::kExitParse);
    CHECK(bad.out.find("parse-error") != std::string::npos);
    CHECK(run({"bench", dir.file("nowhere")}).code == cli::kExitPrecondition);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kExitFailure);
    CHECK(run({"frobnicate"}).code == cli::kExitFailure);
    CHECK(run({"--help"}).code == 0);
}
