#include "strongce/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "strongce/errors.hpp"

namespace strongce {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

std::uint64_t number(const std::string& tok, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("expected a non-negative integer, got '" + tok + "'", line);
    }
    if (value > 0xffffffffULL) throw ParseError("integer out of range: " + tok, line);
    return value;
}

}  // namespace

MultiGraph parse_graph(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0].tokens != std::vector<std::string>{"strongce", "v1"}) {
        throw ParseError("missing header 'strongce v1'", lines.empty() ? 1 : lines[0].number);
    }
    if (lines.size() < 2 || lines[1].tokens.size() != 2 || lines[1].tokens[0] != "n") {
        throw ParseError("missing vertex count line 'n <count>'", lines.size() < 2 ? lines[0].number + 1 : lines[1].number);
    }
    const auto n = number(lines[1].tokens[1], lines[1].number);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.tokens.size() != 2) throw ParseError("expected 'u v'", l.number);
        const auto u = number(l.tokens[0], l.number);
        const auto v = number(l.tokens[1], l.number);
        if (u >= n || v >= n) throw ParseError("endpoint out of range", l.number);
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return MultiGraph::build(n, edges);
}

std::string serialize_graph(const MultiGraph& g) {
    std::string out = "strongce v1\nn " + std::to_string(g.vertex_count()) + "\n";
    for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

ListAssignment parse_lists(const std::string& text, std::optional<std::size_t> edge_count) {
    const auto lines = tokenize(text);
    std::vector<std::optional<std::vector<ColorId>>> found;
    for (const auto& l : lines) {
        if (l.tokens.size() < 2 || l.tokens[1] != ":") throw ParseError("expected '<edge_id> : <colors>'", l.number);
        const auto e = number(l.tokens[0], l.number);
        if (edge_count && e >= *edge_count) throw ParseError("edge id out of range", l.number);
        if (e >= found.size()) found.resize(e + 1);
        if (found[e]) throw ParseError("edge " + std::to_string(e) + " listed twice", l.number);
        std::vector<ColorId> colors;
        for (std::size_t i = 2; i < l.tokens.size(); ++i) {
            const auto c = static_cast<ColorId>(number(l.tokens[i], l.number));
            if (!colors.empty() && c <= colors.back()) throw ParseError("colors must be strictly increasing", l.number);
            colors.push_back(c);
        }
        found[e] = std::move(colors);
    }
    const std::size_t m = edge_count.value_or(found.size());
    found.resize(m);
    std::vector<std::vector<ColorId>> lists;
    for (std::size_t e = 0; e < m; ++e) {
        if (!found[e]) throw ParseError("no list for edge " + std::to_string(e), lines.empty() ? 1 : lines.back().number);
        lists.push_back(std::move(*found[e]));
    }
    return ListAssignment(std::move(lists));
}

std::string serialize_lists(const ListAssignment& lists) {
    std::string out;
    for (std::size_t e = 0; e < lists.size(); ++e) {
        const auto& l = lists[static_cast<EdgeId>(e)];
        if (std::adjacent_find(l.begin(), l.end(), std::greater_equal<>()) != l.end()) {
            throw PreconditionError("list of edge " + std::to_string(e) + " is not strictly increasing");
        }
        out += std::to_string(e) + " :";
        for (ColorId c : l) out += " " + std::to_string(c);
        out += "\n";
    }
    return out;
}

std::vector<ColorId> parse_coloring(const std::string& text, std::optional<std::size_t> edge_count) {
    const auto lines = tokenize(text);
    std::vector<ColorId> out;
    for (const auto& l : lines) {
        if (l.tokens.size() != 2) throw ParseError("expected '<edge_id> <color>'", l.number);
        const auto e = number(l.tokens[0], l.number);
        if (e != out.size()) throw ParseError("edge ids must be consecutive from 0", l.number);
        out.push_back(static_cast<ColorId>(number(l.tokens[1], l.number)));
    }
    if (edge_count && out.size() != *edge_count) {
        throw ParseError("expected " + std::to_string(*edge_count) + " colored edges, got " + std::to_string(out.size()),
                         lines.empty() ? 1 : lines.back().number);
    }
    return out;
}

std::string serialize_coloring(const std::vector<ColorId>& coloring) {
    std::string out;
    for (std::size_t e = 0; e < coloring.size(); ++e) {
        out += std::to_string(e) + " " + std::to_string(coloring[e]) + "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace strongce
