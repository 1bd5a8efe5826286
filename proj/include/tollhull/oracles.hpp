#pragma once

// Brute-force reference implementations. They work from the definitions
// (walk enumeration, subset enumeration) and share no code path with the
// separator-based routines they are used to check.

#include <optional>
#include <stdexcept>
#include <vector>

#include "tollhull/graph.hpp"

namespace tollhull::oracles {

/// Raised when an input exceeds the size an oracle is willing to handle.
class OracleLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kMaxIntervalOrder = 12;
inline constexpr std::size_t kMaxHullOrder = 12;
inline constexpr std::size_t kMaxEnumerationOrder = 9;
inline constexpr std::size_t kMaxAtomOrder = 9;

/// A tolled (x, y)-walk passing through v.
struct WalkWitness {
  std::vector<Vertex> walk;
  Vertex x = 0;
  Vertex y = 0;
  Vertex v = 0;
};

/// Checks the tolled-walk conditions literally.
bool is_tolled_walk(const Graph& g, const std::vector<Vertex>& walk);

/// Default walk-length cap, 2n + 3 vertices.
std::size_t default_walk_cap(const Graph& g);

/// Vertices on tolled (x, y)-walks with at most `cap` vertices, found by a
/// memoised depth-first search over (position, vertex) states.
VertexSet bf_toll_interval(const Graph& g, Vertex x, Vertex y, std::optional<std::size_t> cap = std::nullopt);

/// A concrete tolled walk through v, if one exists within the cap.
std::optional<WalkWitness> bf_walk_witness(const Graph& g, Vertex x, Vertex y, Vertex v,
                                           std::optional<std::size_t> cap = std::nullopt);

/// Closure by repeated application of the brute-force interval.
VertexSet bf_hull(const Graph& g, const VertexSet& s);
std::size_t bf_hull_number(const Graph& g);
std::vector<VertexSet> bf_all_min_hull_sets(const Graph& g);
std::size_t bf_toll_number(const Graph& g);

/// Maximal vertex sets inducing a connected subgraph without clique separator.
std::vector<VertexSet> bf_atoms(const Graph& g);
bool bf_is_prime(const Graph& g);
bool bf_is_extreme(const Graph& g, Vertex v);
VertexSet bf_extreme_vertices(const Graph& g);

/// All pairwise brute-force intervals, computed once.
class IntervalTable {
 public:
  explicit IntervalTable(const Graph& g);

  const VertexSet& interval(Vertex x, Vertex y) const;
  VertexSet hull(const VertexSet& s) const;
  VertexSet interval_of_set(const VertexSet& s) const;

 private:
  const Graph* graph_;
  std::vector<std::uint32_t> masks_;
  std::vector<VertexSet> sets_;
  std::uint32_t hull_mask(std::uint32_t seed) const;
  std::uint32_t interval_mask(std::uint32_t seed) const;
  friend std::size_t bf_hull_number(const Graph& g);
  friend std::vector<VertexSet> bf_all_min_hull_sets(const Graph& g);
  friend std::size_t bf_toll_number(const Graph& g);
};

}  // namespace tollhull::oracles
