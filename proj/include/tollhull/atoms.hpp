#pragma once

#include <vector>

#include "tollhull/graph.hpp"
#include "tollhull/toll_convexity.hpp"

namespace tollhull {

/// A maximal induced subgraph without a clique separator.
struct Atom {
  VertexSet vertices;
};

struct AtomDecomposition {
  std::vector<Atom> atoms;
  std::vector<bool> extremal;  // parallel to atoms; all false for a prime graph
};

/// Clique minimal separator decomposition. Atoms are ordered by smallest
/// vertex, then by size. Requires a connected graph.
AtomDecomposition atoms(const Graph& g);

/// True iff the connected graph g has no clique separator.
bool is_prime(const Graph& g);

/// Atoms F for which another atom F' contains F's intersection with every
/// other atom. Throws GraphError for a single-atom decomposition.
std::vector<Atom> extremal_atoms(const AtomDecomposition& d);

/// Extremal flags computed straight from the definition.
std::vector<bool> extremal_flags(const std::vector<Atom>& atoms);

}  // namespace tollhull
