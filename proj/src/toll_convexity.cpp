#include "tollhull/toll_convexity.hpp"

#include <vector>

namespace tollhull {

namespace {

void require_pair(const Graph& g, Vertex x, Vertex y) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw GraphError("toll interval needs two distinct vertices");
}

// Vertices v for which N[x] - {v} does not separate v from y, where y lies
// outside N[x]. With C the component of g - N[x] holding y, these are the
// members of C together with the neighbors of x that touch C.
VertexSet reachable_side(const Graph& g, Vertex x, Vertex y) {
  const VertexSet closed = g.closed_neighbors(x);
  const VertexSet component = component_of(g, closed, y);
  VertexSet side = component;
  for (Vertex v : g.adjacency(x)) {
    if (g.neighbors(v).intersects(component)) side.insert(v);
  }
  return side;
}

}  // namespace

Block block_of(const Graph& g, const VertexSet& f) {
  Block b{f, VertexSet(g.order()), VertexSet(g.order())};
  const VertexSet outside = f.complement();
  for (Vertex v : f) {
    if (g.neighbors(v).intersects(outside)) {
      b.border.insert(v);
    } else {
      b.interior.insert(v);
    }
  }
  return b;
}

namespace detail {

VertexSet interval_unchecked(const Graph& g, Vertex x, Vertex y) {
  VertexSet out(g.order());
  out.insert(x);
  out.insert(y);
  if (g.adjacent(x, y)) return out;
  VertexSet both = reachable_side(g, x, y);
  both &= reachable_side(g, y, x);
  return out | both;
}

}  // namespace detail

VertexSet toll_interval(const Graph& g, Vertex x, Vertex y) {
  require_pair(g, x, y);
  require_connected(g, "toll_interval");
  return detail::interval_unchecked(g, x, y);
}

VertexSet interval_of_set(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw GraphError("interval of an empty set");
  require_connected(g, "interval_of_set");
  VertexSet out = s;
  const auto members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.adjacent(members[i], members[j])) out |= detail::interval_unchecked(g, members[i], members[j]);
    }
  }
  return out;
}

VertexSet toll_hull(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw GraphError("hull of an empty set");
  require_connected(g, "toll_hull");
  // Worklist closure: every pair of the growing set is expanded exactly once,
  // which reaches the same fixpoint as iterating S <- [S].
  VertexSet hull = s;
  std::vector<Vertex> pending = s.to_vector();
  std::vector<Vertex> settled;
  while (!pending.empty()) {
    Vertex a = pending.back();
    pending.pop_back();
    for (Vertex b : settled) {
      if (g.adjacent(a, b)) continue;
      VertexSet fresh = detail::interval_unchecked(g, a, b) - hull;
      if (fresh.empty()) continue;
      hull |= fresh;
      for (Vertex v : fresh) pending.push_back(v);
    }
    settled.push_back(a);
    if (hull.size() == g.order()) break;
  }
  return hull;
}

bool is_t_convex(const Graph& g, const VertexSet& s) {
  if (s.size() <= 1 || s.size() == g.order()) return true;
  require_connected(g, "is_t_convex");
  const auto members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (g.adjacent(members[i], members[j])) continue;
      if (!detail::interval_unchecked(g, members[i], members[j]).is_subset_of(s)) return false;
    }
  }
  return true;
}

bool is_t_concave(const Graph& g, const VertexSet& s) { return is_t_convex(g, s.complement()); }

bool is_toll_extreme(const Graph& g, Vertex v) {
  g.check_vertex(v);
  require_connected(g, "is_toll_extreme");
  // Extreme vertices are simplicial, which rules most vertices out cheaply.
  if (!is_simplicial(g, v)) return false;
  VertexSet single(g.order());
  single.insert(v);
  return is_t_concave(g, single);
}

VertexSet extreme_vertices(const Graph& g) {
  require_connected(g, "extreme_vertices");
  VertexSet candidates(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_simplicial(g, v)) candidates.insert(v);
  }
  if (candidates.empty()) return candidates;
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      if (g.adjacent(x, y)) continue;
      VertexSet inner = detail::interval_unchecked(g, x, y);
      inner.erase(x);
      inner.erase(y);
      candidates -= inner;
      if (candidates.empty()) return candidates;
    }
  }
  return candidates;
}

bool qualifies_for_fast_test(const Graph& g, const Block& b) {
  return !b.interior.empty() && is_clique(g, b.border) && induces_connected(g, b.interior);
}

bool fast_concavity_test(const Graph& g, const Block& b) {
  if (!qualifies_for_fast_test(g, b)) {
    throw GraphError("fast_concavity_test: border must be a clique and the interior connected");
  }
  const Vertex v = *b.interior.min();
  const std::vector<Vertex> outside = b.members.complement().to_vector();
  // Component labels of g - N[u] for every u outside the block.
  std::vector<std::vector<int>> labels;
  labels.reserve(outside.size());
  for (Vertex u : outside) labels.push_back(component_labels(g, g.closed_neighbors(u)));
  for (std::size_t i = 0; i < outside.size(); ++i) {
    const auto& tu = labels[i];
    if (tu[v] < 0) continue;
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      const Vertex u = outside[i];
      const Vertex z = outside[j];
      if (g.adjacent(u, z)) continue;
      const auto& tz = labels[j];
      if (tu[z] == tu[v] && tz[u] == tz[v]) return false;
    }
  }
  return true;
}

bool interior_is_concave(const Graph& g, const Block& b) {
  if (qualifies_for_fast_test(g, b)) return fast_concavity_test(g, b);
  return is_t_concave(g, b.interior);
}

}  // namespace tollhull
