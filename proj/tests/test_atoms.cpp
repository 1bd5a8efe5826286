#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "tollhull/atoms.hpp"
#include "tollhull/oracles.hpp"

using namespace tollhull;

namespace {

std::vector<VertexSet> vertex_sets(const AtomDecomposition& d) {
  std::vector<VertexSet> out;
  for (const auto& a : d.atoms) out.push_back(a.vertices);
  return out;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("atom_decomposition") {
  TEST_CASE("primality") {
    CHECK(is_prime(named_fixture("C5")));
    CHECK(is_prime(named_fixture("K4")));
    CHECK(is_prime(named_fixture("PETERSEN")));
    CHECK_FALSE(is_prime(named_fixture("THETA7")));
    CHECK_THROWS_AS(is_prime(parse_edge_list("a b\nc d\n")), GraphError);
  }

  TEST_CASE("G12 atoms and extremal atoms") {
    const Graph g = named_fixture("G12");
    const AtomDecomposition d = atoms(g);
    REQUIRE(d.atoms.size() == 4);
    CHECK(d.atoms[0].vertices == g.vertex_set({"v1", "v2", "v3", "v4", "v5"}));
    CHECK(d.atoms[1].vertices == g.vertex_set({"v4", "v5", "v6", "v7"}));
    CHECK(d.atoms[2].vertices == g.vertex_set({"v6", "v7", "v8", "v9"}));
    CHECK(d.atoms[3].vertices == g.vertex_set({"v8", "v9", "v10", "v11", "v12"}));
    CHECK(d.extremal == std::vector<bool>{true, false, false, true});
    const auto ext = extremal_atoms(d);
    REQUIRE(ext.size() == 2);
    CHECK(ext[0].vertices == d.atoms[0].vertices);
    CHECK(ext[1].vertices == d.atoms[3].vertices);
  }

  TEST_CASE("complete graphs are one atom") {
    for (std::size_t n = 1; n <= 6; ++n) {
      const Graph k = complete_graph(n);
      const AtomDecomposition d = atoms(k);
      REQUIRE(d.atoms.size() == 1);
      CHECK(d.atoms[0].vertices == k.vertices());
      CHECK_THROWS_AS(extremal_atoms(d), GraphError);
    }
  }

  TEST_CASE("paths split into edges with extremal ends") {
    const Graph p = parse_edge_list("a b\nb c\nc d\n");
    const AtomDecomposition d = atoms(p);
    REQUIRE(d.atoms.size() == 3);
    CHECK(d.atoms[0].vertices == p.vertex_set({"a", "b"}));
    CHECK(d.atoms[1].vertices == p.vertex_set({"b", "c"}));
    CHECK(d.atoms[2].vertices == p.vertex_set({"c", "d"}));
    CHECK(d.extremal == std::vector<bool>{true, false, true});
  }

  TEST_CASE("THETA7 atoms are both extremal") {
    const Graph g = named_fixture("THETA7");
    const AtomDecomposition d = atoms(g);
    CHECK(sorted(vertex_sets(d)) ==
          sorted({g.vertex_set({"s", "t", "z1", "z2"}), g.vertex_set({"s", "t", "p", "r", "q"})}));
    CHECK(d.extremal == std::vector<bool>{true, true});
  }

  TEST_CASE("atoms match the brute-force oracle on the corpus") {
    for (const Graph& g : testing::corpus()) {
      const AtomDecomposition d = atoms(g);
      REQUIRE(sorted(vertex_sets(d)) == oracles::bf_atoms(g));
      CHECK(is_prime(g) == oracles::bf_is_prime(g));
    }
  }

  TEST_CASE("decomposition invariants on random graphs") {
    for (const Graph& g : testing::random_connected(200, 6, 9, 5)) {
      const AtomDecomposition d = atoms(g);
      CHECK(sorted(vertex_sets(d)) == oracles::bf_atoms(g));
      VertexSet all = g.empty_set();
      for (const auto& a : d.atoms) all |= a.vertices;
      CHECK(all == g.vertices());
      for (auto [u, v] : g.edges()) {
        CHECK(std::any_of(d.atoms.begin(), d.atoms.end(), [&](const Atom& a) {
          return a.vertices.contains(u) && a.vertices.contains(v);
        }));
      }
      for (std::size_t i = 0; i < d.atoms.size(); ++i) {
        CHECK(is_prime(induced_subgraph(g, d.atoms[i].vertices)));
        for (std::size_t j = i + 1; j < d.atoms.size(); ++j) {
          CHECK(is_clique(g, d.atoms[i].vertices & d.atoms[j].vertices));
        }
        if (d.atoms.size() > 1 && !d.extremal[i]) CHECK(components(g, d.atoms[i].vertices).size() >= 2);
      }
      if (d.atoms.size() > 1) {
        CHECK(std::count(d.extremal.begin(), d.extremal.end(), true) >= 2);
      }
      CHECK(d.extremal == (d.atoms.size() > 1 ? extremal_flags(d.atoms) : std::vector<bool>(1, false)));
    }
  }

  TEST_CASE("larger graphs keep the structural invariants") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Graph g = generate(GraphModel::kRandomTree, 30, std::nullopt, seed);
      const AtomDecomposition d = atoms(g);
      CHECK(d.atoms.size() == 29);
    }
    for (const Graph& g : testing::random_connected(20, 20, 40, 9)) {
      const AtomDecomposition d = atoms(g);
      for (std::size_t i = 0; i < d.atoms.size(); ++i) {
        CHECK(is_prime(induced_subgraph(g, d.atoms[i].vertices)));
        for (std::size_t j = i + 1; j < d.atoms.size(); ++j) {
          CHECK(is_clique(g, d.atoms[i].vertices & d.atoms[j].vertices));
          CHECK_FALSE(d.atoms[i].vertices.is_subset_of(d.atoms[j].vertices));
        }
      }
    }
  }
}
