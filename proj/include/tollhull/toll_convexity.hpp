#pragma once

#include "tollhull/graph.hpp"

namespace tollhull {

/// A vertex set F split into its border (members with a neighbor outside F)
/// and its interior (the remaining members).
struct Block {
  VertexSet members;
  VertexSet border;
  VertexSet interior;
};

/// Splits f into border and interior.
Block block_of(const Graph& g, const VertexSet& f);

/// [x, y]: every vertex lying on some tolled (x, y)-walk. Requires x != y
/// and a connected graph.
VertexSet toll_interval(const Graph& g, Vertex x, Vertex y);

/// [S]: union of the intervals of all pairs of s; s itself when |s| = 1.
VertexSet interval_of_set(const Graph& g, const VertexSet& s);

/// <S>: the smallest t-convex superset of s.
VertexSet toll_hull(const Graph& g, const VertexSet& s);

bool is_t_convex(const Graph& g, const VertexSet& s);
bool is_t_concave(const Graph& g, const VertexSet& s);

bool is_toll_extreme(const Graph& g, Vertex v);
VertexSet extreme_vertices(const Graph& g);

/// True when the block satisfies the preconditions of fast_concavity_test:
/// clique border and a non-empty interior inducing a connected subgraph.
bool qualifies_for_fast_test(const Graph& g, const Block& b);

/// Concavity of b.interior for blocks with a clique border and a connected
/// interior. Every interior vertex behaves alike, so one representative v is
/// tested against every non-adjacent pair u, z outside the block using the
/// components of g - N[u] and g - N[z]. Throws GraphError when the
/// preconditions do not hold.
bool fast_concavity_test(const Graph& g, const Block& b);

/// Concavity of an interior: the fast test when its preconditions hold, the
/// definition otherwise.
bool interior_is_concave(const Graph& g, const Block& b);

namespace detail {

/// Interval of a non-adjacent pair; no precondition checks.
VertexSet interval_unchecked(const Graph& g, Vertex x, Vertex y);

}  // namespace detail

}  // namespace tollhull
