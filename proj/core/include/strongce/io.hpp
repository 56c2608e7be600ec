#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strongce/coloring.hpp"
#include "strongce/graph.hpp"

namespace strongce {

// Text formats. '#' starts a comment running to the end of the line; blank
// lines are ignored. Parse errors throw ParseError carrying the 1-based line.
//
//   graph:    "strongce v1", "n <vertex_count>", then one "u v" per edge
//   lists:    "<edge_id> : <c1> <c2> ..." with strictly increasing colors
//   coloring: "<edge_id> <color>" sorted by edge id

MultiGraph parse_graph(const std::string& text);
std::string serialize_graph(const MultiGraph& g);

/// Every edge 0..edge_count-1 must appear exactly once (in any order). When
/// edge_count is nullopt it is taken from the largest id.
ListAssignment parse_lists(const std::string& text, std::optional<std::size_t> edge_count = std::nullopt);
/// Throws PreconditionError if a list is not strictly increasing.
std::string serialize_lists(const ListAssignment& lists);

std::vector<ColorId> parse_coloring(const std::string& text,
                                    std::optional<std::size_t> edge_count = std::nullopt);
std::string serialize_coloring(const std::vector<ColorId>& coloring);

/// Whole-file helpers; throw std::runtime_error when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace strongce
