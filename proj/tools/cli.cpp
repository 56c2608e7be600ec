#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <ostream>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "strongce/engine.hpp"
#include "strongce/errors.hpp"
#include "strongce/exact.hpp"
#include "strongce/generators.hpp"
#include "strongce/io.hpp"
#include "strongce/polynomial.hpp"

namespace strongce::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

constexpr std::size_t kBenchListSize = 22;

// STRONGCE_SEED, when set, wins over --seed.
std::uint64_t resolve_seed(std::uint64_t flag) {
    const char* env = std::getenv("STRONGCE_SEED");
    if (env == nullptr || *env == '\0') return flag;
    std::uint64_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end) throw PreconditionError(std::string("STRONGCE_SEED is not an integer: ") + env);
    return value;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ColoringExhausted& e) {
        err << "coloring failed: " << e.what() << "\n";
        return kExitColoring;
    } catch (const LimitExceeded& e) {
        err << "search limit exceeded: " << e.what() << "\n";
        return kExitColoring;
    } catch (const InternalGuaranteeViolated& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitColoring;
    } catch (const std::invalid_argument& e) {
        err << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::runtime_error& e) {
        // Unreadable or unwritable files.
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

std::string handler_names(const std::vector<Handler>& handlers) {
    std::string s;
    for (Handler h : handlers) {
        if (!s.empty()) s += " ";
        s += handler_name(h);
    }
    return s.empty() ? "none" : s;
}

// color

struct ColorArgs {
    std::string graph;
    std::string lists;
    std::size_t uniform = 0;
    std::string out;
    bool trace = false;
    std::uint64_t seed = 0;
    bool allow_short = false;
};

int cmd_color(const ColorArgs& a, std::ostream& out, std::ostream& err) {
    if (a.lists.empty() == (a.uniform == 0)) {
        err << "color: give exactly one of a lists file or --uniform k\n";
        return kExitFailure;
    }
    const auto g = parse_graph(read_file(a.graph));
    const auto lists = a.lists.empty() ? ListAssignment::uniform(g.edge_count(), a.uniform)
                                       : parse_lists(read_file(a.lists), g.edge_count());
    EngineOptions opts;
    opts.seed = resolve_seed(a.seed);
    opts.allow_short_lists = a.allow_short;
    const auto result = strong_list_color(g, lists, opts);

    // Without --out the coloring owns stdout and the summary moves to stderr.
    const auto text = serialize_coloring(result.coloring);
    std::ostream& report = a.out.empty() ? err : out;
    if (a.out.empty()) {
        out << text;
    } else {
        write_file(a.out, text);
    }
    report << "handler: " << handler_names(result.handlers) << "\n";
    report << "fallback_depth: " << result.fallback_depth << "\n";
    if (a.trace) {
        for (const auto& line : result.trace) report << "trace: " << line << "\n";
        for (const auto& c : result.checks) {
            report << "check: " << c.label << " = " << c.observed << (c.upper ? " <= " : " >= ") << c.bound
                   << (c.ok() ? "" : " FAILED") << "\n";
        }
    }
    return kExitOk;
}

// verify

int cmd_verify(const std::string& graph_path, const std::string& lists_path, const std::string& coloring_path,
               std::ostream& out) {
    const auto g = parse_graph(read_file(graph_path));
    const auto lists = parse_lists(read_file(lists_path), g.edge_count());
    const auto coloring = parse_coloring(read_file(coloring_path), g.edge_count());
    if (auto v = verify_strong(g, lists, coloring)) {
        out << v->describe() << "\n";
        return kExitFailure;
    }
    out << "OK\n";
    return kExitOk;
}

// chis

int cmd_chis(const std::string& graph_path, std::uint64_t limit, double seconds, std::ostream& out) {
    const auto g = parse_graph(read_file(graph_path));
    SearchConfig cfg;
    cfg.node_limit = limit;
    cfg.time_limit = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
    out << exact_strong_chromatic_index(g, cfg) << "\n";
    return kExitOk;
}

// coeff

int cmd_coeff(bool five_cycle, const std::string& factors_path, const std::string& monomial, std::ostream& out,
              std::ostream& err) {
    if (five_cycle == !factors_path.empty() || factors_path.empty() != monomial.empty()) {
        err << "coeff: give either --paper or both --factors and --monomial\n";
        return kExitFailure;
    }
    if (five_cycle) {
        const auto& cert = five_cycle_certificate();
        if (cert.degree != 29 || cert.factor_count != 29) {
            throw InternalGuaranteeViolated("five-cycle product has degree " + std::to_string(cert.degree) + " and " +
                                            std::to_string(cert.factor_count) + " factors, expected 29 and 29");
        }
        out << cert.coefficient << "\n";
        return kExitOk;
    }
    std::vector<FactorPair> factors;
    Monomial target;
    try {
        factors = parse_factors(read_file(factors_path));
        std::size_t variables = 0;
        for (const auto& f : factors) variables = std::max<std::size_t>(variables, std::max(f.i, f.j) + 1);
        static const std::regex var(R"(x(\d+))");
        for (std::sregex_iterator it(monomial.begin(), monomial.end(), var), end; it != end; ++it) {
            variables = std::max<std::size_t>(variables, std::stoul((*it)[1].str()));
        }
        target = parse_monomial(monomial, variables);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
    out << product_coefficient(target.size(), factors, target) << "\n";
    return kExitOk;
}

// gen

struct GenArgs {
    std::string model;
    std::size_t n = 0;
    std::size_t edges = 0;
    std::uint64_t seed = 0;
    std::string lists;
    std::string out;
    std::string lists_out;
};

MultiGraph generate(const GenArgs& a, std::uint64_t seed, Rng& rng) {
    const auto need_n = [&] {
        if (a.n == 0) throw PreconditionError("model '" + a.model + "' needs --n");
        return a.n;
    };
    if (a.model == "regular4") return random_pairing_regular4(need_n(), rng);
    if (a.model == "regular4-simple") return random_simple_regular4(need_n(), rng);
    if (a.model == "random-maxdeg4") {
        const auto n = need_n();
        return random_max_degree4(n, a.edges ? a.edges : 2 * n, rng);
    }
    if (a.model == "tree") return random_tree(need_n(), 4, rng);
    if (a.model == "cage") {
        if (a.n == 19) return robertson_graph();
        if (a.n == 26 || a.n == 0) return cage_4_6();
        throw PreconditionError("the built-in 4-regular cages have 19 (girth 5) or 26 (girth 6) vertices");
    }
    if (a.model.rfind("fixture:", 0) == 0) return fixture(a.model.substr(8), seed).graph;
    throw PreconditionError("unknown model '" + a.model +
                            "', expected regular4, regular4-simple, random-maxdeg4, tree, cage or fixture:<name>");
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
    const auto seed = resolve_seed(a.seed);
    Rng rng(seed);
    const auto g = generate(a, seed, rng);
    const auto text = serialize_graph(g);
    if (a.out.empty()) {
        out << text;
    } else {
        write_file(a.out, text);
    }
    if (!a.lists.empty()) write_file(a.lists_out, serialize_lists(lists_from_spec(a.lists, g.edge_count(), rng)));
    return kExitOk;
}

// bench

struct Instance {
    std::string name;
    fs::path graph;
    std::optional<fs::path> lists;
};

std::vector<Instance> scan_corpus(const std::string& dir) {
    if (!fs::is_directory(dir)) throw PreconditionError("not a directory: " + dir);
    std::vector<Instance> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".graph") continue;
        Instance inst{entry.path().stem().string(), entry.path(), std::nullopt};
        auto lists = entry.path();
        lists.replace_extension(".lists");
        if (fs::exists(lists)) inst.lists = lists;
        out.push_back(std::move(inst));
    }
    std::sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) { return a.name < b.name; });
    return out;
}

json bench_one(const Instance& inst, std::uint64_t seed) {
    json row = {{"name", inst.name}, {"lists", inst.lists ? inst.lists->filename().string() : "uniform:22"}};
    MultiGraph g;
    ListAssignment lists;
    try {
        g = parse_graph(read_file(inst.graph.string()));
        lists = inst.lists ? parse_lists(read_file(inst.lists->string()), g.edge_count())
                           : ListAssignment::uniform(g.edge_count(), kBenchListSize);
    } catch (const std::exception& e) {
        row["status"] = "parse-error";
        row["error"] = e.what();
        return row;
    }
    row["vertices"] = g.vertex_count();
    row["edges"] = g.edge_count();
    EngineOptions opts;
    opts.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto result = strong_list_color(g, lists, opts);
        std::vector<std::string> names;
        for (Handler h : result.handlers) names.emplace_back(handler_name(h));
        row["handlers"] = names;
        row["fallback_depth"] = result.fallback_depth;
        row["checks_hold"] = result.checks_hold();
        row["status"] = verify_strong(g, lists, result.coloring) ? "invalid" : "ok";
    } catch (const std::invalid_argument& e) {
        row["status"] = "precondition";
        row["error"] = e.what();
    } catch (const std::exception& e) {
        row["status"] = "failed";
        row["error"] = e.what();
    }
    row["runtime_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

int cmd_bench(const std::string& dir, std::uint64_t flag_seed, const std::string& report_path, std::ostream& out) {
    const auto seed = resolve_seed(flag_seed);
    const auto corpus = scan_corpus(dir);
    json rows = json::array();
    std::size_t ok = 0, parse_failures = 0, preconditions = 0, failures = 0;
    out << std::left << std::setw(28) << "instance" << std::setw(14) << "status" << std::setw(20) << "handler"
        << std::setw(7) << "depth" << "ms\n";
    for (const auto& inst : corpus) {
        auto row = bench_one(inst, seed);
        const std::string status = row["status"];
        if (status == "ok") {
            ++ok;
        } else if (status == "parse-error") {
            ++parse_failures;
        } else if (status == "precondition") {
            ++preconditions;
        } else {
            ++failures;
        }
        std::string handler = "-";
        if (row.contains("handlers")) {
            handler.clear();
            for (const auto& h : row["handlers"]) handler += (handler.empty() ? "" : ",") + h.get<std::string>();
        }
        out << std::setw(28) << inst.name << std::setw(14) << status << std::setw(20) << handler << std::setw(7)
            << (row.contains("fallback_depth") ? std::to_string(row["fallback_depth"].get<int>()) : "-");
        if (row.contains("runtime_ms")) {
            out << std::fixed << std::setprecision(2) << row["runtime_ms"].get<double>();
        } else {
            out << "-";
        }
        out << "\n";
        rows.push_back(std::move(row));
    }
    const std::size_t total = corpus.size();
    json summary = {{"instances", total},          {"succeeded", ok},       {"parse_failures", parse_failures},
                    {"precondition_failures", preconditions}, {"failures", failures}};
    summary["success_rate"] = total ? json(static_cast<double>(ok) / static_cast<double>(total)) : json(nullptr);
    out << "succeeded " << ok << " of " << total << ", parse failures " << parse_failures << "\n";
    if (!report_path.empty()) {
        const json report = {{"seed", seed}, {"corpus", dir}, {"instances", rows}, {"summary", summary}};
        write_file(report_path, report.dump(2) + "\n");
    }
    if (parse_failures) return kExitParse;
    if (preconditions) return kExitPrecondition;
    if (failures) return kExitColoring;
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Strong list edge coloring for graphs of maximum degree 4", "strongce"};
    app.require_subcommand(1);

    ColorArgs color_args;
    auto* color = app.add_subcommand("color", "Color a graph from its lists and write the coloring");
    color->add_option("graph", color_args.graph, "Graph file")->required();
    auto* lists_opt = color->add_option("lists", color_args.lists, "Lists file");
    color->add_option("--uniform", color_args.uniform, "Give every edge the colors 1..k")->excludes(lists_opt);
    color->add_option("--out", color_args.out, "Coloring file (default: stdout)");
    color->add_flag("--trace", color_args.trace, "Print the handler trace and bound checks");
    color->add_option("--seed", color_args.seed, "Seed for randomized repair");
    color->add_flag("--allow-short", color_args.allow_short, "Accept lists shorter than 22 (search only)");

    std::string verify_graph, verify_lists, verify_coloring;
    auto* verify = app.add_subcommand("verify", "Check a coloring; prints OK or the first violation");
    verify->add_option("graph", verify_graph, "Graph file")->required();
    verify->add_option("lists", verify_lists, "Lists file")->required();
    verify->add_option("coloring", verify_coloring, "Coloring file")->required();

    std::string chis_graph;
    std::uint64_t chis_limit = SearchConfig{}.node_limit;
    double chis_seconds = 60;
    auto* chis = app.add_subcommand("chis", "Exact strong chromatic index");
    chis->add_option("graph", chis_graph, "Graph file")->required();
    chis->add_option("--limit", chis_limit, "Search node limit");
    chis->add_option("--time-limit", chis_seconds, "Search time limit in seconds");

    bool coeff_five_cycle = false;
    std::string coeff_factors, coeff_monomial;
    auto* coeff = app.add_subcommand("coeff", "Coefficient of a monomial in a product of (x_i - x_j)");
    coeff->add_flag("--paper", coeff_five_cycle, "The five-cycle certificate product and its target monomial");
    coeff->add_option("--factors", coeff_factors, "File of factor lines 'i j' (1-based)");
    coeff->add_option("--monomial", coeff_monomial, "Monomial such as x1^3*x2*x9^2");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate a graph (and optionally lists)");
    gen->add_option("--model", gen_args.model,
                    "regular4, regular4-simple, random-maxdeg4, tree, cage or fixture:<name>")
        ->required();
    gen->add_option("--n", gen_args.n, "Vertex count");
    gen->add_option("--edges", gen_args.edges, "Edge attempts for random-maxdeg4 (default 2n)");
    gen->add_option("--seed", gen_args.seed, "Random seed");
    gen->add_option("--out", gen_args.out, "Graph file (default: stdout)");
    auto* lists_out = gen->add_option("--lists-out", gen_args.lists_out, "Lists file");
    gen->add_option("--lists", gen_args.lists, "uniform:k or random:k:palette")->needs(lists_out);

    std::string bench_dir, bench_report;
    std::uint64_t bench_seed = 0;
    auto* bench = app.add_subcommand("bench", "Color every <name>.graph in a directory and report");
    bench->add_option("corpus", bench_dir, "Corpus directory; <name>.lists is used when present")->required();
    bench->add_option("--seed", bench_seed, "Seed for randomized repair");
    bench->add_option("--out", bench_report, "JSON report path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitFailure;
    }

    return guarded(err, [&]() -> int {
        if (color->parsed()) return cmd_color(color_args, out, err);
        if (verify->parsed()) return cmd_verify(verify_graph, verify_lists, verify_coloring, out);
        if (chis->parsed()) return cmd_chis(chis_graph, chis_limit, chis_seconds, out);
        if (coeff->parsed()) return cmd_coeff(coeff_five_cycle, coeff_factors, coeff_monomial, out, err);
        if (gen->parsed()) return cmd_gen(gen_args, out);
        return cmd_bench(bench_dir, bench_seed, bench_report, out);
    });
}

}  // namespace strongce::cli
