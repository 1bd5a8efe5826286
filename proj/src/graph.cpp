#include "tollhull/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace tollhull {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw std::out_of_range("vertex " + std::to_string(v) + " outside set universe");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::optional<Vertex> VertexSet::min() const {
  auto pos = find_next(0);
  if (pos >= universe_) return std::nullopt;
  return static_cast<Vertex>(pos);
}

std::size_t VertexSet::find_next(std::size_t from) const {
  if (from >= universe_) return universe_;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) return std::min(universe_, wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    if (++wi >= words_.size()) return universe_;
    w = words_[wi];
  }
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) throw std::invalid_argument("vertex sets over different universes");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia <=> *ib;
  }
  if (ia == a.end() && ib == b.end()) return a.universe_ <=> b.universe_;
  return ia == a.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

Graph::Graph(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels)
    : neighbor_sets_(order, VertexSet(order)), adjacency_(order), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(order);
    for (std::size_t i = 0; i < order; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != order) throw GraphError("label table does not match graph order");
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("self-loop at vertex " + labels_[u]);
    if (neighbor_sets_[u].contains(v)) continue;
    neighbor_sets_[u].insert(v);
    neighbor_sets_[v].insert(u);
    ++edge_count_;
  }
  for (std::size_t v = 0; v < order; ++v) adjacency_[v] = neighbor_sets_[v].to_vector();
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(order()));
  }
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return neighbor_sets_[v];
}

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet s = neighbors(v);
  s.insert(v);
  return s;
}

std::span<const Vertex> Graph::adjacency(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

const std::string& Graph::label(Vertex v) const {
  check_vertex(v);
  return labels_[v];
}

std::optional<Vertex> Graph::find_label(std::string_view name) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == name) return static_cast<Vertex>(i);
  }
  return std::nullopt;
}

Vertex Graph::vertex(std::string_view name) const {
  auto v = find_label(name);
  if (!v) throw GraphError("unknown vertex label '" + std::string(name) + "'");
  return *v;
}

VertexSet Graph::vertex_set(std::initializer_list<std::string_view> names) const {
  VertexSet s(order());
  for (auto name : names) s.insert(vertex(name));
  return s;
}

std::vector<int> component_labels(const Graph& g, const VertexSet& removed) {
  const std::size_t n = g.order();
  std::vector<int> label(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -1 || removed.contains(s)) continue;
    label[s] = next;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.adjacency(queue[head])) {
        if (label[w] == -1 && !removed.contains(w)) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  auto label = component_labels(g, removed);
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (label[v] < 0) continue;
    if (static_cast<std::size_t>(label[v]) >= out.size()) out.emplace_back(g.order());
    out[static_cast<std::size_t>(label[v])].insert(v);
  }
  return out;
}

VertexSet component_of(const Graph& g, const VertexSet& removed, Vertex start) {
  g.check_vertex(start);
  if (removed.contains(start)) throw GraphError("component start vertex is removed");
  VertexSet seen(g.order());
  std::vector<Vertex> queue{start};
  seen.insert(start);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : g.adjacency(queue[head])) {
      if (!seen.contains(w) && !removed.contains(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
    }
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return component_of(g, g.empty_set(), 0).size() == g.order();
}

bool induces_connected(const Graph& g, const VertexSet& s) {
  auto first = s.min();
  if (!first) return true;
  return component_of(g, s.complement(), *first) == s;
}

bool separates(const Graph& g, const VertexSet& s, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (s.contains(u) || s.contains(v)) throw GraphError("separates: endpoint lies inside the separator");
  if (!component_of(g, g.empty_set(), u).contains(v)) return false;
  return !component_of(g, s, u).contains(v);
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_simplicial(const Graph& g, Vertex v) { return is_clique(g, g.neighbors(v)); }

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  for (Vertex v : s) out |= g.neighbors(v);
  return out - s;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> members = s.to_vector();
  std::vector<Vertex> index(g.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex u : members) {
    labels.push_back(g.label(u));
    for (Vertex w : g.adjacency(u)) {
      if (u < w && s.contains(w)) edges.emplace_back(index[u], index[w]);
    }
  }
  return Graph(members.size(), edges, std::move(labels));
}

void require_connected(const Graph& g, std::string_view what) {
  if (g.order() == 0) throw GraphError(std::string(what) + ": graph has no vertices");
  if (!is_connected(g)) throw GraphError(std::string(what) + ": graph is not connected");
}

std::vector<std::string> labels_of(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(g.label(v));
  return out;
}

std::string format_set(const Graph& g, const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << g.label(v);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace tollhull
