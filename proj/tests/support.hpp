#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tollhull/generators.hpp"
#include "tollhull/graph.hpp"
#include "tollhull/io.hpp"

namespace tollhull::testing {

// Every connected graph on 1..7 vertices, one graph6 record per line.
inline const std::vector<Graph>& corpus() {
  static const std::vector<Graph> graphs = parse_graph6_corpus(read_text(TOLLHULL_TEST_DATA "/connected_upto7.g6"));
  return graphs;
}

// Connected gnp samples; n cycles through [lo, hi], p through a few densities.
inline std::vector<Graph> random_connected(std::size_t count, std::size_t lo, std::size_t hi, std::uint64_t seed) {
  static constexpr double kDensities[] = {0.2, 0.3, 0.4, 0.5, 0.65};
  std::vector<Graph> out;
  for (std::uint64_t s = seed; out.size() < count; ++s) {
    const std::size_t n = lo + s % (hi - lo + 1);
    Graph g = generate(GraphModel::kGnp, n, kDensities[s % 5], s);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace tollhull::testing
