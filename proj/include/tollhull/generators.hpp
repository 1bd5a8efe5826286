#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "tollhull/graph.hpp"

namespace tollhull {

enum class GraphModel { kGnp, kRandomTree, kComplete, kCycle };

GraphModel parse_model_name(std::string_view name);

/// Deterministic for a fixed seed. `p` is required for kGnp and ignored
/// otherwise. Random trees are uniform over labelled trees (Pruefer codes).
Graph generate(GraphModel model, std::size_t n, std::optional<double> p, std::uint64_t seed);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// Requires a tree; true iff deleting every leaf leaves a path (or nothing).
bool is_caterpillar(const Graph& tree);
bool is_tree(const Graph& g);

/// Built-in fixtures: G12, THETA7, K4, C5, STAR3, PETERSEN.
Graph named_fixture(std::string_view name);

}  // namespace tollhull
