#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "support.hpp"
#include "tollhull/generators.hpp"
#include "tollhull/graph.hpp"
#include "tollhull/io.hpp"

using namespace tollhull;

TEST_SUITE("graph_core") {
  TEST_CASE("vertex set algebra and ordering") {
    VertexSet a(10, {1, 3, 5});
    VertexSet b(10, {3, 4});
    CHECK((a | b) == VertexSet(10, {1, 3, 4, 5}));
    CHECK((a & b) == VertexSet(10, {3}));
    CHECK((a - b) == VertexSet(10, {1, 5}));
    CHECK(a.size() == 3);
    CHECK(a.min() == 1u);
    CHECK_FALSE(VertexSet(10).min().has_value());
    CHECK(a.to_vector() == std::vector<Vertex>{1, 3, 5});
    CHECK(VertexSet(10, {1, 3}) < VertexSet(10, {1, 4}));
    CHECK(VertexSet(10, {0, 9}) < VertexSet(10, {1}));
    CHECK(a.complement().size() == 7);
    CHECK_THROWS_AS(a | VertexSet(11), std::invalid_argument);
    CHECK_THROWS_AS(a.insert(10), std::out_of_range);
  }

  TEST_CASE("vertex sets spanning several words") {
    VertexSet s(130, {0, 63, 64, 129});
    CHECK(s.to_vector() == std::vector<Vertex>{0, 63, 64, 129});
    CHECK(VertexSet::full(130).size() == 130);
    CHECK(s.is_subset_of(VertexSet::full(130)));
  }

  TEST_CASE("edge list parsing") {
    const Graph g = parse_edge_list("a b\nb c");
    CHECK(g.order() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.label(2) == "c");

    const Graph dup = parse_edge_list("# comment\nx y\ny x\nx y\n");
    CHECK(dup.edge_count() == 1);

    const Graph isolated = parse_edge_list("a b\nz\n");
    CHECK(isolated.order() == 3);
    CHECK(isolated.degree(2) == 0);

    CHECK_THROWS_AS(parse_edge_list("a a\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("a b c\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list(""), GraphError);
    CHECK_THROWS_AS(parse_edge_list("# only a comment\n"), GraphError);
  }

  TEST_CASE("G12 fixture") {
    const Graph g = named_fixture("G12");
    CHECK(g.order() == 12);
    CHECK(g.edge_count() == 26);
    CHECK(g.neighbors(g.vertex("v11")) == g.vertex_set({"v10", "v12"}));
    CHECK(g.neighbors(g.vertex("v5")) == g.vertex_set({"v1", "v2", "v3", "v4", "v6", "v7"}));
    CHECK(g.closed_neighbors(g.vertex("v11")) == g.vertex_set({"v10", "v11", "v12"}));
    CHECK_THROWS_AS(g.neighbors(12), GraphError);
    CHECK_THROWS_AS(g.vertex("v13"), GraphError);
  }

  TEST_CASE("isolated vertex neighborhoods") {
    const Graph g = parse_edge_list("a b\nc\n");
    CHECK(g.neighbors(2).empty());
    CHECK(g.closed_neighbors(2) == VertexSet(3, {2}));
  }

  TEST_CASE("graph construction errors") {
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), GraphError);
    const std::vector<Edge> range{{0, 3}};
    CHECK_THROWS_AS(Graph(3, range), GraphError);
  }

  TEST_CASE("separates") {
    const Graph g = named_fixture("G12");
    CHECK(separates(g, g.vertex_set({"v4", "v5"}), g.vertex("v1"), g.vertex("v6")));
    CHECK_FALSE(separates(g, g.vertex_set({"v8"}), g.vertex("v7"), g.vertex("v10")));
    CHECK_FALSE(separates(g, g.empty_set(), g.vertex("v1"), g.vertex("v12")));
    CHECK_THROWS_AS(separates(g, g.vertex_set({"v8"}), g.vertex("v8"), g.vertex("v1")), GraphError);
  }

  TEST_CASE("components") {
    const Graph g = named_fixture("G12");
    const auto parts = components(g, g.vertex_set({"v1", "v2", "v3", "v4", "v5"}));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == g.vertex_set({"v6", "v7", "v8", "v9", "v10", "v11", "v12"}));

    const Graph p = parse_edge_list("a b\nb c\n");
    const auto split = components(p, p.vertex_set({"b"}));
    REQUIRE(split.size() == 2);
    CHECK(split[0] == p.vertex_set({"a"}));
    CHECK(split[1] == p.vertex_set({"c"}));
    CHECK(components(g, g.empty_set()).size() == 1);
  }

  TEST_CASE("cliques and simplicial vertices") {
    const Graph g = named_fixture("G12");
    CHECK(is_clique(g, g.vertex_set({"v1", "v2", "v3", "v4", "v5"})));
    CHECK(is_clique(g, g.empty_set()));
    CHECK(is_clique(g, g.vertex_set({"v7"})));
    CHECK_FALSE(is_clique(g, g.vertex_set({"v1", "v6"})));
    CHECK(is_simplicial(g, g.vertex("v1")));
    CHECK_FALSE(is_simplicial(g, g.vertex("v10")));
  }

  TEST_CASE("open neighborhood and induced subgraph") {
    const Graph g = named_fixture("G12");
    CHECK(open_neighborhood(g, g.vertex_set({"v10", "v11", "v12"})) == g.vertex_set({"v8", "v9"}));
    const Graph h = induced_subgraph(g, g.vertex_set({"v8", "v9", "v10", "v11", "v12"}));
    CHECK(h.order() == 5);
    CHECK(h.edge_count() == 7);
    CHECK(h.label(0) == "v8");
  }

  TEST_CASE("generators") {
    const Graph k4 = generate(GraphModel::kComplete, 4, std::nullopt, 0);
    CHECK(k4.edge_count() == 6);
    CHECK(is_clique(k4, k4.vertices()));
    const Graph c = generate(GraphModel::kCycle, 6, std::nullopt, 0);
    CHECK(c.edge_count() == 6);
    for (Vertex v = 0; v < 6; ++v) CHECK(c.degree(v) == 2);
    CHECK(is_caterpillar(path_graph(6)));
    const Graph spider = parse_edge_list("c a1\na1 a2\nc b1\nb1 b2\nc d1\nd1 d2\n");
    CHECK_FALSE(is_caterpillar(spider));
    CHECK_THROWS_AS(is_caterpillar(cycle_graph(5)), GraphError);
    CHECK_THROWS_AS(generate(GraphModel::kGnp, 5, 1.5, 0), GraphError);
    CHECK_THROWS_AS(generate(GraphModel::kGnp, 5, std::nullopt, 0), GraphError);
  }

  TEST_CASE("generation is deterministic per seed") {
    const Graph a = generate(GraphModel::kGnp, 30, 0.2, 42);
    const Graph b = generate(GraphModel::kGnp, 30, 0.2, 42);
    const Graph c = generate(GraphModel::kGnp, 30, 0.2, 43);
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() != c.edges());
  }

  TEST_CASE("random trees are spanning trees") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const std::size_t n = 1 + seed % 40;
      const Graph t = generate(GraphModel::kRandomTree, n, std::nullopt, seed);
      CHECK(t.order() == n);
      CHECK(t.edge_count() == n - 1);
      CHECK(is_connected(t));
    }
  }

  TEST_CASE("random trees cover every labelled tree on four vertices") {
    std::set<std::vector<Edge>> seen;
    for (std::uint64_t seed = 0; seed < 2000; ++seed) seen.insert(generate(GraphModel::kRandomTree, 4, std::nullopt, seed).edges());
    CHECK(seen.size() == 16);
  }

  TEST_CASE("graph6 round trip over the corpus") {
    const std::string text = read_text(TOLLHULL_TEST_DATA "/connected_upto7.g6");
    std::istringstream in(text);
    std::string line;
    std::size_t count = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const Graph g = parse_graph6(line);
      CHECK(to_graph6(g) == line);
      CHECK(is_connected(g));
      ++count;
    }
    CHECK(count == 996);
  }

  TEST_CASE("graph6 details") {
    CHECK(parse_graph6(">>graph6<<A_").edge_count() == 1);
    CHECK_THROWS_AS(parse_graph6("D?"), GraphError);
    const Graph big = generate(GraphModel::kGnp, 70, 0.1, 5);
    CHECK(parse_graph6(to_graph6(big)).edges() == big.edges());
    const Graph g = named_fixture("THETA7");
    const Graph back = parse_edge_list(to_edge_list(g));
    auto labelled_edges = [](const Graph& h) {
      std::set<std::pair<std::string, std::string>> out;
      for (auto [u, v] : h.edges()) out.emplace(std::minmax(h.label(u), h.label(v)));
      return out;
    };
    CHECK(back.order() == g.order());
    CHECK(labelled_edges(back) == labelled_edges(g));
  }

  TEST_CASE("separation agrees with components") {
    for (const Graph& g : testing::random_connected(60, 5, 10, 11)) {
      for (Vertex a = 0; a < g.order(); ++a) {
        VertexSet s = g.closed_neighbors(a);
        const auto labels = component_labels(g, s);
        for (Vertex u = 0; u < g.order(); ++u) {
          for (Vertex v = u + 1; v < g.order(); ++v) {
            if (s.contains(u) || s.contains(v)) continue;
            CHECK(separates(g, s, u, v) == (labels[u] != labels[v]));
          }
        }
      }
    }
  }

  TEST_CASE("connectivity requirements") {
    const Graph g = parse_edge_list("a b\nc d\n");
    CHECK_FALSE(is_connected(g));
    CHECK_THROWS_AS(require_connected(g, "test"), GraphError);
    CHECK(induces_connected(g, g.vertex_set({"a", "b"})));
  }
}
