#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tollhull/graph.hpp"

namespace tollhull {

enum class GraphFormat { kEdgeList, kGraph6 };

GraphFormat parse_format_name(std::string_view name);

/// Edge list: '#' comment lines, one "u v" pair of labels per line. Labels are
/// mapped to dense ids in order of first appearance. A line holding a single
/// label declares an isolated vertex.
Graph parse_edge_list(std::string_view text);

/// One graph6 string (an optional ">>graph6<<" header is accepted).
Graph parse_graph6(std::string_view line);

/// Every non-empty line of a graph6 file.
std::vector<Graph> parse_graph6_corpus(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat format);

std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

std::string read_text(const std::string& path);

}  // namespace tollhull
