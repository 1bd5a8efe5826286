#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tollhull {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed input graphs, out-of-range vertices and violated
/// user-facing preconditions (for instance a disconnected graph).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Set of vertices drawn from a fixed universe {0, ..., universe-1}.
///
/// Backed by a packed bitset. Iteration is always ascending, so everything
/// built on top of it (traces, emitted sets, JSON) is deterministic.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++() {
      pos_ = set_->find_next(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  /// Smallest member, if any.
  std::optional<Vertex> min() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  VertexSet complement() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Lexicographic order of the ascending member sequences.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

  const_iterator begin() const { return {this, find_next(0)}; }
  const_iterator end() const { return {this, universe_}; }

  std::vector<Vertex> to_vector() const;

 private:
  std::size_t find_next(std::size_t from) const;
  void check_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction merges duplicate edges and rejects self-loops. Optional
/// labels are kept only for input and output.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels = {});

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const;
  VertexSet closed_neighbors(Vertex v) const;
  std::span<const Vertex> adjacency(Vertex v) const;
  std::size_t degree(Vertex v) const { return adjacency(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet make_set(std::initializer_list<Vertex> members) const { return {order(), members}; }

  /// Edges (u, v) with u < v in ascending order.
  std::vector<Edge> edges() const;

  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find_label(std::string_view name) const;
  /// Looks a label up and throws GraphError if it is unknown.
  Vertex vertex(std::string_view name) const;
  VertexSet vertex_set(std::initializer_list<std::string_view> names) const;

  void check_vertex(Vertex v) const;

 private:
  std::vector<VertexSet> neighbor_sets_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Partition of V - removed into connected pieces, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);

/// The connected piece of g - removed that contains start (start must not be removed).
VertexSet component_of(const Graph& g, const VertexSet& removed, Vertex start);

/// Component index of every vertex of g - removed, -1 for removed vertices.
std::vector<int> component_labels(const Graph& g, const VertexSet& removed);

bool is_connected(const Graph& g);
bool induces_connected(const Graph& g, const VertexSet& s);

/// True iff u and v are joined by a path in g but by none in g - s.
bool separates(const Graph& g, const VertexSet& s, Vertex u, Vertex v);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_simplicial(const Graph& g, Vertex v);

/// N(S): vertices outside s with a neighbor in s.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

/// Subgraph induced by s, relabelled to 0..|s|-1 in ascending order of s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Throws GraphError unless g has at least one vertex and is connected.
void require_connected(const Graph& g, std::string_view what);

std::vector<std::string> labels_of(const Graph& g, const VertexSet& s);
std::string format_set(const Graph& g, const VertexSet& s);

}  // namespace tollhull
