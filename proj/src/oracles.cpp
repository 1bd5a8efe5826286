#include "tollhull/oracles.hpp"

#include <algorithm>

#include <bit>
#include <string>

namespace tollhull::oracles {

namespace {

void guard(const Graph& g, std::size_t limit, const char* what) {
  if (g.order() > limit) {
    throw OracleLimitError(std::string(what) + ": order " + std::to_string(g.order()) +
                           " exceeds the brute-force limit of " + std::to_string(limit));
  }
}

std::uint32_t to_mask(const VertexSet& s) {
  std::uint32_t m = 0;
  for (Vertex v : s) m |= std::uint32_t{1} << v;
  return m;
}

VertexSet from_mask(std::size_t n, std::uint32_t m) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v) {
    if ((m >> v) & 1U) s.insert(v);
  }
  return s;
}

// Depth-first search over walks w1 = x, w2, ..., wk = y. Positions are
// 1-based; a state is the vertex placed at a position. The tolled conditions
// only constrain (position, vertex) pairs and the final length, so the set of
// vertices on valid completions depends on the state alone and can be cached.
class WalkSearch {
 public:
  WalkSearch(const Graph& g, Vertex x, Vertex y, std::size_t cap)
      : g_(g), x_(x), y_(y), cap_(cap), n_(g.order()),
        memo_((cap + 1) * g.order()) {}

  // Union of the vertex sets of all tolled (x, y)-walks.
  VertexSet run() {
    VertexSet out(n_);
    bool any = false;
    if (cap_ < 2) return out;
    for (Vertex second : g_.adjacency(x_)) {
      const Entry& e = visit(2, second);
      if (e.feasible) {
        any = true;
        out |= e.covered;
      }
    }
    if (any) out.insert(x_);
    return out;
  }

  // A valid walk through target, if any.
  std::optional<std::vector<Vertex>> witness(Vertex target) {
    if (target == x_) {
      for (Vertex second : g_.adjacency(x_)) {
        std::vector<Vertex> tail;
        if (find(2, second, true, target, tail)) return prepend_start(tail);
      }
      return std::nullopt;
    }
    for (Vertex second : g_.adjacency(x_)) {
      std::vector<Vertex> tail;
      if (find(2, second, false, target, tail)) return prepend_start(tail);
    }
    return std::nullopt;
  }

 private:
  struct Entry {
    bool done = false;
    bool feasible = false;
    VertexSet covered;
  };

  // Whether `next` may follow `cur` (which sits at position pos).
  bool step_allowed(std::size_t pos, Vertex cur, Vertex next) const {
    // Neighbors of x may only sit at position 2.
    if (g_.adjacent(x_, next) && pos + 1 != 2) return false;
    // A neighbor of y at position i forces the walk to end at i + 1 with y.
    if (g_.adjacent(y_, cur) && next != y_) return false;
    return true;
  }

  const Entry& visit(std::size_t pos, Vertex cur) {
    Entry& e = memo_[pos * n_ + cur];
    if (e.done) return e;
    e.done = true;
    e.covered = VertexSet(n_);
    if (cur == y_) {
      // Arriving at y from a neighbor of y ends the walk.
      e.feasible = true;
      e.covered.insert(y_);
      return e;
    }
    if (pos >= cap_) return e;
    for (Vertex next : g_.adjacency(cur)) {
      if (!step_allowed(pos, cur, next)) continue;
      const Entry& sub = visit(pos + 1, next);
      if (sub.feasible) {
        e.feasible = true;
        e.covered |= sub.covered;
      }
    }
    if (e.feasible) e.covered.insert(cur);
    return memo_[pos * n_ + cur];
  }

  bool find(std::size_t pos, Vertex cur, bool seen, Vertex target, std::vector<Vertex>& tail) {
    seen = seen || cur == target;
    const Entry& e = visit(pos, cur);
    if (!e.feasible) return false;
    if (!seen && !e.covered.contains(target)) return false;
    tail.push_back(cur);
    if (cur == y_) {
      if (seen) return true;
      tail.pop_back();
      return false;
    }
    for (Vertex next : g_.adjacency(cur)) {
      if (!step_allowed(pos, cur, next)) continue;
      if (find(pos + 1, next, seen, target, tail)) return true;
    }
    tail.pop_back();
    return false;
  }

  std::vector<Vertex> prepend_start(const std::vector<Vertex>& tail) const {
    std::vector<Vertex> walk{x_};
    walk.insert(walk.end(), tail.begin(), tail.end());
    return walk;
  }

  const Graph& g_;
  Vertex x_;
  Vertex y_;
  std::size_t cap_;
  std::size_t n_;
  std::vector<Entry> memo_;
};

void check_pair(const Graph& g, Vertex x, Vertex y) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw GraphError("brute-force interval needs two distinct vertices");
}

bool prime_mask(const Graph& g, std::uint32_t set, const std::vector<std::uint32_t>& adj) {
  auto connected = [&](std::uint32_t s) {
    if (s == 0) return true;
    std::uint32_t seen = s & (~s + 1);
    std::uint32_t frontier = seen;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == s;
  };
  auto clique = [&](std::uint32_t s) {
    for (std::uint32_t f = s; f != 0; f &= f - 1) {
      auto v = std::countr_zero(f);
      if ((s & ~(std::uint32_t{1} << v) & ~adj[v]) != 0) return false;
    }
    return true;
  };
  (void)g;
  if (!connected(set)) return false;
  // Every non-empty proper clique C with at least two vertices left over
  // must leave G[set - C] connected.
  for (std::uint32_t c = (set - 1) & set; c != 0; c = (c - 1) & set) {
    std::uint32_t rest = set & ~c;
    if (std::popcount(rest) < 2) continue;
    if (clique(c) && !connected(rest)) return false;
  }
  return true;
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = to_mask(g.neighbors(v));
  return adj;
}

}  // namespace

bool is_tolled_walk(const Graph& g, const std::vector<Vertex>& walk) {
  if (walk.size() < 2) return false;
  for (Vertex v : walk) {
    if (v >= g.order()) return false;
  }
  const std::size_t k = walk.size();
  if (walk.front() == walk.back()) return false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (!g.adjacent(walk[i], walk[i + 1])) return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    // 0-based: position 2 is index 1, position k-1 is index k-2.
    if (g.adjacent(walk.front(), walk[i]) && i != 1) return false;
    if (g.adjacent(walk[i], walk.back()) && i != k - 2) return false;
  }
  return true;
}

std::size_t default_walk_cap(const Graph& g) { return 2 * g.order() + 3; }

VertexSet bf_toll_interval(const Graph& g, Vertex x, Vertex y, std::optional<std::size_t> cap) {
  guard(g, kMaxIntervalOrder, "bf_toll_interval");
  check_pair(g, x, y);
  WalkSearch search(g, x, y, cap.value_or(default_walk_cap(g)));
  return search.run();
}

std::optional<WalkWitness> bf_walk_witness(const Graph& g, Vertex x, Vertex y, Vertex v,
                                           std::optional<std::size_t> cap) {
  guard(g, kMaxIntervalOrder, "bf_walk_witness");
  check_pair(g, x, y);
  g.check_vertex(v);
  WalkSearch search(g, x, y, cap.value_or(default_walk_cap(g)));
  auto walk = search.witness(v);
  if (!walk) return std::nullopt;
  return WalkWitness{std::move(*walk), x, y, v};
}

IntervalTable::IntervalTable(const Graph& g) : graph_(&g) {
  guard(g, kMaxIntervalOrder, "IntervalTable");
  const std::size_t n = g.order();
  masks_.assign(n * n, 0);
  sets_.assign(n * n, VertexSet(n));
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      VertexSet s = bf_toll_interval(g, x, y);
      masks_[x * n + y] = masks_[y * n + x] = to_mask(s);
      sets_[x * n + y] = sets_[y * n + x] = s;
    }
  }
}

const VertexSet& IntervalTable::interval(Vertex x, Vertex y) const {
  check_pair(*graph_, x, y);
  return sets_[x * graph_->order() + y];
}

std::uint32_t IntervalTable::interval_mask(std::uint32_t seed) const {
  if (std::popcount(seed) < 2) return seed;
  const std::size_t n = graph_->order();
  std::uint32_t out = seed;
  for (std::uint32_t a = seed; a != 0; a &= a - 1) {
    auto x = static_cast<std::size_t>(std::countr_zero(a));
    for (std::uint32_t b = a & (a - 1); b != 0; b &= b - 1) {
      auto y = static_cast<std::size_t>(std::countr_zero(b));
      out |= masks_[x * n + y];
    }
  }
  return out;
}

std::uint32_t IntervalTable::hull_mask(std::uint32_t seed) const {
  std::uint32_t current = seed;
  while (true) {
    std::uint32_t next = interval_mask(current);
    if (next == current) return current;
    current = next;
  }
}

VertexSet IntervalTable::hull(const VertexSet& s) const {
  return from_mask(graph_->order(), hull_mask(to_mask(s)));
}

VertexSet IntervalTable::interval_of_set(const VertexSet& s) const {
  return from_mask(graph_->order(), interval_mask(to_mask(s)));
}

VertexSet bf_hull(const Graph& g, const VertexSet& s) {
  guard(g, kMaxHullOrder, "bf_hull");
  if (s.empty()) throw GraphError("hull of an empty set");
  return IntervalTable(g).hull(s);
}

namespace {

template <typename Predicate>
std::vector<std::uint32_t> smallest_satisfying(std::size_t n, Predicate&& ok, bool all) {
  const std::uint32_t everything = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  for (int k = 1; k <= static_cast<int>(n); ++k) {
    std::vector<std::uint32_t> found;
    for (std::uint32_t m = 1; m <= everything && m != 0; ++m) {
      if (std::popcount(m) != k || !ok(m)) continue;
      found.push_back(m);
      if (!all) return found;
    }
    if (!found.empty()) return found;
  }
  return {};
}

}  // namespace

std::size_t bf_hull_number(const Graph& g) {
  guard(g, kMaxHullOrder, "bf_hull_number");
  if (g.order() == 0) throw GraphError("bf_hull_number: empty graph");
  IntervalTable table(g);
  const std::uint32_t everything = (std::uint32_t{1} << g.order()) - 1;
  auto found = smallest_satisfying(g.order(), [&](std::uint32_t m) { return table.hull_mask(m) == everything; }, false);
  return static_cast<std::size_t>(std::popcount(found.front()));
}

std::vector<VertexSet> bf_all_min_hull_sets(const Graph& g) {
  guard(g, kMaxEnumerationOrder, "bf_all_min_hull_sets");
  if (g.order() == 0) throw GraphError("bf_all_min_hull_sets: empty graph");
  IntervalTable table(g);
  const std::uint32_t everything = (std::uint32_t{1} << g.order()) - 1;
  auto found = smallest_satisfying(g.order(), [&](std::uint32_t m) { return table.hull_mask(m) == everything; }, true);
  std::vector<VertexSet> out;
  for (auto m : found) out.push_back(from_mask(g.order(), m));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t bf_toll_number(const Graph& g) {
  guard(g, kMaxEnumerationOrder, "bf_toll_number");
  if (g.order() == 0) throw GraphError("bf_toll_number: empty graph");
  IntervalTable table(g);
  const std::uint32_t everything = (std::uint32_t{1} << g.order()) - 1;
  auto found = smallest_satisfying(g.order(), [&](std::uint32_t m) { return table.interval_mask(m) == everything; }, false);
  return static_cast<std::size_t>(std::popcount(found.front()));
}

std::vector<VertexSet> bf_atoms(const Graph& g) {
  guard(g, kMaxAtomOrder, "bf_atoms");
  const std::size_t n = g.order();
  const auto adj = adjacency_masks(g);
  const std::uint32_t everything = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> primes;
  for (std::uint32_t m = 1; m <= everything; ++m) {
    if (prime_mask(g, m, adj)) primes.push_back(m);
  }
  std::vector<VertexSet> out;
  for (auto m : primes) {
    bool maximal = true;
    for (auto o : primes) {
      if (o != m && (m & ~o) == 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(from_mask(n, m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool bf_is_prime(const Graph& g) {
  guard(g, kMaxHullOrder, "bf_is_prime");
  if (g.order() == 0) return true;
  return prime_mask(g, (std::uint32_t{1} << g.order()) - 1, adjacency_masks(g));
}

bool bf_is_extreme(const Graph& g, Vertex v) {
  guard(g, kMaxIntervalOrder, "bf_is_extreme");
  g.check_vertex(v);
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      if (x == v || y == v) continue;
      if (bf_toll_interval(g, x, y).contains(v)) return false;
    }
  }
  return true;
}

VertexSet bf_extreme_vertices(const Graph& g) {
  guard(g, kMaxIntervalOrder, "bf_extreme_vertices");
  IntervalTable table(g);
  VertexSet out = g.vertices();
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      VertexSet inner = table.interval(x, y);
      inner.erase(x);
      inner.erase(y);
      out -= inner;
    }
  }
  return out;
}

}  // namespace tollhull::oracles
