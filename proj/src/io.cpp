#include "tollhull/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <unordered_map>

namespace tollhull {

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edge-list" || name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  throw GraphError("unknown input format '" + std::string(name) + "'");
}

Graph parse_edge_list(std::string_view text) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto id_of = [&](const std::string& label) {
    auto [it, fresh] = ids.try_emplace(label, static_cast<Vertex>(labels.size()));
    if (fresh) labels.push_back(label);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<std::string> tokens{std::istream_iterator<std::string>(fields),
                                    std::istream_iterator<std::string>()};
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    if (tokens.size() == 1) {
      id_of(tokens[0]);
      continue;
    }
    if (tokens.size() != 2) {
      throw GraphError("edge list line " + std::to_string(lineno) + ": expected two labels");
    }
    if (tokens[0] == tokens[1]) {
      throw GraphError("edge list line " + std::to_string(lineno) + ": self-loop at " + tokens[0]);
    }
    Vertex u = id_of(tokens[0]);
    Vertex v = id_of(tokens[1]);
    edges.emplace_back(u, v);
  }
  if (labels.empty()) throw GraphError("edge list is empty");
  const std::size_t n = labels.size();
  return Graph(n, edges, std::move(labels));
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int sextet(char c) {
  if (c < 63 || c > 126) throw GraphError("graph6: byte outside printable range");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw GraphError("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (line[0] != 126) {
    n = static_cast<std::uint64_t>(sextet(line[0]));
    pos = 1;
  } else if (line.size() >= 2 && line[1] != 126) {
    if (line.size() < 4) throw GraphError("graph6: truncated order field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(line[i]));
    pos = 4;
  } else {
    if (line.size() < 8) throw GraphError("graph6: truncated order field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(line[i]));
    pos = 8;
  }
  if (n == 0) throw GraphError("graph6: graph has no vertices");

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t expected = (bits + 5) / 6;
  if (line.size() - pos != expected) throw GraphError("graph6: wrong length for order " + std::to_string(n));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int word = sextet(line[pos + k / 6]);
      if ((word >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::vector<Graph> parse_graph6_corpus(std::string_view text) {
  std::vector<Graph> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    out.push_back(parse_graph6(line));
  }
  if (out.empty()) throw GraphError("graph6: empty input");
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kEdgeList) return parse_edge_list(text);
  return parse_graph6_corpus(text).front();
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int word = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) os << g.label(v) << '\n';
  }
  for (auto [u, v] : g.edges()) os << g.label(u) << ' ' << g.label(v) << '\n';
  return os.str();
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace tollhull
