#include "tollhull/atoms.hpp"

#include <algorithm>

namespace tollhull {

namespace {

struct EliminationData {
  std::vector<Vertex> order;        // order[i] = vertex eliminated i-th
  std::vector<std::size_t> rank;    // inverse of order
  std::vector<VertexSet> filled;    // adjacency of the minimal triangulation
  std::vector<bool> generator;      // vertices whose higher neighborhood is a minimal separator
};

// MCS-M with generator detection. Vertices are numbered from n-1 down to 0;
// the elimination ordering is the reverse of the visiting order.
EliminationData mcs_m(const Graph& g) {
  const std::size_t n = g.order();
  EliminationData data;
  data.order.assign(n, 0);
  data.rank.assign(n, 0);
  data.filled.assign(n, VertexSet(n));
  for (Vertex v = 0; v < n; ++v) data.filled[v] = g.neighbors(v);
  data.generator.assign(n, false);

  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<bool> reached(n, false);
  std::vector<std::vector<Vertex>> reach(n + 1);
  long previous = -1;

  for (std::size_t step = n; step-- > 0;) {
    Vertex x = 0;
    long best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!numbered[v] && static_cast<long>(weight[v]) > best) {
        best = static_cast<long>(weight[v]);
        x = v;
      }
    }
    if (best <= previous) data.generator[x] = true;
    previous = best;
    numbered[x] = true;
    data.order[step] = x;
    data.rank[x] = step;

    // Every unnumbered y reachable from x through unnumbered vertices of
    // weight strictly below weight[y] gains one unit of weight.
    std::fill(reached.begin(), reached.end(), false);
    for (auto& bucket : reach) bucket.clear();
    std::vector<Vertex> raised;
    reached[x] = true;
    for (Vertex y : g.adjacency(x)) {
      if (numbered[y]) continue;
      reached[y] = true;
      reach[weight[y]].push_back(y);
      raised.push_back(y);
    }
    for (std::size_t level = 0; level <= n; ++level) {
      while (!reach[level].empty()) {
        Vertex y = reach[level].back();
        reach[level].pop_back();
        for (Vertex z : g.adjacency(y)) {
          if (numbered[z] || reached[z]) continue;
          reached[z] = true;
          if (weight[z] > level) {
            reach[weight[z]].push_back(z);
            raised.push_back(z);
          } else {
            reach[level].push_back(z);
          }
        }
      }
    }
    for (Vertex y : raised) {
      ++weight[y];
      data.filled[x].insert(y);
      data.filled[y].insert(x);
    }
  }
  return data;
}

void sort_atoms(std::vector<Atom>& atoms) {
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    auto ma = *a.vertices.min();
    auto mb = *b.vertices.min();
    if (ma != mb) return ma < mb;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
}

}  // namespace

AtomDecomposition atoms(const Graph& g) {
  require_connected(g, "atoms");
  const std::size_t n = g.order();
  const EliminationData data = mcs_m(g);

  AtomDecomposition out;
  VertexSet remaining = g.vertices();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex x = data.order[i];
    if (!data.generator[x] || !remaining.contains(x)) continue;
    VertexSet later(n);
    for (Vertex y : data.filled[x]) {
      if (data.rank[y] > i) later.insert(y);
    }
    if (later.empty() || !is_clique(g, later)) continue;
    VertexSet piece = component_of(g, later | remaining.complement(), x);
    VertexSet atom = piece | later;
    if (atom == remaining) break;
    out.atoms.push_back({atom});
    remaining -= piece;
  }
  out.atoms.push_back({remaining});
  sort_atoms(out.atoms);
  if (out.atoms.size() > 1) {
    out.extremal = extremal_flags(out.atoms);
  } else {
    out.extremal.assign(out.atoms.size(), false);
  }
  return out;
}

bool is_prime(const Graph& g) { return atoms(g).atoms.size() == 1; }

std::vector<bool> extremal_flags(const std::vector<Atom>& atoms) {
  std::vector<bool> flags(atoms.size(), false);
  for (std::size_t f = 0; f < atoms.size(); ++f) {
    const VertexSet& F = atoms[f].vertices;
    VertexSet touched(F.universe());
    for (std::size_t o = 0; o < atoms.size(); ++o) {
      if (o != f) touched |= F & atoms[o].vertices;
    }
    for (std::size_t o = 0; o < atoms.size() && !flags[f]; ++o) {
      if (o != f && touched.is_subset_of(F & atoms[o].vertices)) flags[f] = true;
    }
  }
  return flags;
}

std::vector<Atom> extremal_atoms(const AtomDecomposition& d) {
  if (d.atoms.size() < 2) throw GraphError("extremal_atoms: the graph is prime");
  std::vector<Atom> out;
  for (std::size_t i = 0; i < d.atoms.size(); ++i) {
    if (d.extremal[i]) out.push_back(d.atoms[i]);
  }
  return out;
}

}  // namespace tollhull
