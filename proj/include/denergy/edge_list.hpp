#pragma once

#include "denergy/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string_view>

namespace denergy {

// Edge-list text format: the first non-comment line holds the vertex count n,
// every following non-comment line holds one edge "u v" (0-indexed,
// whitespace separated). '#' starts a comment; blank lines are ignored.
// Malformed input raises Error with the offending line number.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

/// Writes n and the edges in canonical order; `comment`, if non-empty, is
/// emitted as a leading '#' line.
void write_edge_list(std::ostream& out, const Graph& g, std::string_view comment = {});

} // namespace denergy
