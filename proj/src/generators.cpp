#include "tollhull/generators.hpp"

#include <limits>
#include <random>
#include <string>
#include <vector>

namespace tollhull {

namespace {

// 53 random bits mapped to [0, 1); the standard distributions are not
// specified bit-exactly across library implementations.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

Graph from_labelled(const std::vector<std::string>& labels,
                    std::initializer_list<std::pair<std::string_view, std::string_view>> edges) {
  std::vector<Edge> out;
  auto id = [&](std::string_view name) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == name) return static_cast<Vertex>(i);
    }
    throw GraphError("fixture label '" + std::string(name) + "' missing");
  };
  for (auto [a, b] : edges) out.emplace_back(id(a), id(b));
  return Graph(labels.size(), out, labels);
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 1) return Graph(1, std::span<const Edge>{});
  if (n == 2) {
    Edge e{0, 1};
    return Graph(2, std::span<const Edge>(&e, 1));
  }
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(bounded(rng, n));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Quadratic decoding is plenty for the sizes used here.
  for (Vertex c : code) {
    for (Vertex leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  Vertex a = static_cast<Vertex>(n);
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (a == n) {
        a = v;
      } else {
        edges.emplace_back(a, v);
        break;
      }
    }
  }
  return Graph(n, edges);
}

}  // namespace

GraphModel parse_model_name(std::string_view name) {
  if (name == "gnp") return GraphModel::kGnp;
  if (name == "tree" || name == "random-tree") return GraphModel::kRandomTree;
  if (name == "complete") return GraphModel::kComplete;
  if (name == "cycle") return GraphModel::kCycle;
  throw GraphError("unknown graph model '" + std::string(name) + "'");
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph generate(GraphModel model, std::size_t n, std::optional<double> p, std::uint64_t seed) {
  if (n == 0) throw GraphError("generated graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  switch (model) {
    case GraphModel::kGnp: {
      if (!p || *p < 0.0 || *p > 1.0) throw GraphError("gnp needs a probability in [0, 1]");
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (unit_interval(rng) < *p) edges.emplace_back(u, v);
        }
      }
      return Graph(n, edges);
    }
    case GraphModel::kRandomTree:
      return random_tree(n, rng);
    case GraphModel::kComplete:
      return complete_graph(n);
    case GraphModel::kCycle:
      return cycle_graph(n);
  }
  throw GraphError("unknown graph model");
}

bool is_tree(const Graph& g) {
  return g.order() > 0 && g.edge_count() + 1 == g.order() && is_connected(g);
}

bool is_caterpillar(const Graph& tree) {
  if (!is_tree(tree)) throw GraphError("is_caterpillar: input is not a tree");
  VertexSet spine(tree.order());
  for (Vertex v = 0; v < tree.order(); ++v) {
    if (tree.degree(v) > 1) spine.insert(v);
  }
  // The spine of a tree is connected, so it is a path iff no spine vertex
  // has more than two spine neighbors.
  for (Vertex v : spine) {
    if ((tree.neighbors(v) & spine).size() > 2) return false;
  }
  return true;
}

Graph named_fixture(std::string_view name) {
  if (name == "G12") {
    std::vector<std::string> labels;
    for (int i = 1; i <= 12; ++i) labels.push_back("v" + std::to_string(i));
    return from_labelled(labels, {{"v1", "v2"},  {"v1", "v3"},   {"v2", "v3"},   {"v4", "v1"},
                                  {"v4", "v2"},  {"v4", "v3"},   {"v5", "v1"},   {"v5", "v2"},
                                  {"v5", "v3"},  {"v5", "v4"},   {"v6", "v4"},   {"v6", "v5"},
                                  {"v7", "v4"},  {"v7", "v5"},   {"v7", "v6"},   {"v8", "v6"},
                                  {"v8", "v7"},  {"v9", "v6"},   {"v9", "v7"},   {"v9", "v8"},
                                  {"v10", "v8"}, {"v10", "v9"},  {"v10", "v11"}, {"v11", "v12"},
                                  {"v12", "v8"}, {"v12", "v9"}});
  }
  if (name == "THETA7") {
    return from_labelled({"s", "t", "z1", "z2", "p", "r", "q"},
                         {{"s", "t"}, {"s", "z1"}, {"z1", "z2"}, {"z2", "t"},
                          {"s", "p"}, {"p", "r"}, {"r", "q"}, {"q", "t"}});
  }
  if (name == "K4") {
    return from_labelled({"a", "b", "c", "d"},
                         {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
  }
  if (name == "C5") {
    return from_labelled({"a", "b", "c", "d", "e"},
                         {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}});
  }
  if (name == "STAR3") {
    return from_labelled({"c", "x", "y", "z"}, {{"c", "x"}, {"c", "y"}, {"c", "z"}});
  }
  if (name == "PETERSEN") {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(i, i + 5);
      edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, edges);
  }
  throw GraphError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace tollhull
