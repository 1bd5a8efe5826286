#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "tollhull/enumeration.hpp"
#include "tollhull/oracles.hpp"

using namespace tollhull;

TEST_SUITE("enumeration") {
  TEST_CASE("G12 menu and sets") {
    const Graph g = named_fixture("G12");
    const HullResult r = solve(g);
    const SelectionMenu menu = selection_menu(g, r);
    REQUIRE(menu.blocks.size() == 2);
    CHECK(menu.blocks[0].selections == std::vector<VertexSet>{g.vertex_set({"v1", "v2", "v3"})});
    CHECK(menu.blocks[1].selections == std::vector<VertexSet>{g.vertex_set({"v11"})});
    const auto sets = enumerate_min_hull_sets(g);
    CHECK(std::find(sets.begin(), sets.end(), g.vertex_set({"v1", "v2", "v3", "v11"})) != sets.end());
    for (const auto& s : sets) {
      CHECK(s.size() == 4);
      CHECK(g.vertex_set({"v1", "v2", "v3"}).is_subset_of(s));
    }
  }

  TEST_CASE("complete graphs give one set") {
    const Graph k4 = named_fixture("K4");
    CHECK(enumerate_min_hull_sets(k4) == std::vector<VertexSet>{k4.vertices()});
  }

  TEST_CASE("THETA7 menu") {
    const Graph g = named_fixture("THETA7");
    const SelectionMenu menu = selection_menu(g, solve(g));
    REQUIRE(menu.blocks.size() == 1);
    CHECK(menu.blocks[0].type == ConcaveType::kType2);
    // Selections come from the recorded rules: one of {p,r,q} and one of {z1,z2}.
    CHECK(menu.blocks[0].selections.size() == 6);
    for (const auto& s : menu.blocks[0].selections) {
      CHECK(s.size() == 2);
      CHECK(s.intersects(g.vertex_set({"z1", "z2"})));
    }
    const auto report = compare_with_brute_force(g);
    CHECK(report.unexpected.empty());
    CHECK(report.emitted.size() == 6);
    CHECK(report.brute_force.size() == 11);
  }

  TEST_CASE("prime graphs use their own block") {
    const Graph g = named_fixture("C5");
    const SelectionMenu menu = selection_menu(g, solve(g));
    REQUIRE(menu.blocks.size() == 1);
    CHECK_FALSE(menu.blocks[0].type.has_value());
    CHECK(menu.blocks[0].selections.size() == 5);
  }

  TEST_CASE("limit and stream state") {
    const Graph g = named_fixture("C5");
    MinHullSetEnumerator e(g, {2, false});
    CHECK(e.next().has_value());
    CHECK(e.next().has_value());
    CHECK_FALSE(e.next().has_value());
    CHECK(e.stats().emitted == 2);
    CHECK(e.solution().hull_number == 2);
    CHECK(enumerate_min_hull_sets(g, 3).size() == 3);
  }

  TEST_CASE("emissions are valid, distinct and ordered for small graphs") {
    std::size_t complete = 0;
    std::size_t graphs = 0;
    for (const Graph& g : testing::corpus()) {
      if (g.order() > 6) continue;
      ++graphs;
      const CompletenessReport rep = compare_with_brute_force(g);
      CHECK(rep.unexpected.empty());
      CHECK(rep.stats.rejected == 0);
      CHECK_FALSE(rep.emitted.empty());
      CHECK(std::is_sorted(rep.emitted.begin(), rep.emitted.end()));
      CHECK(std::adjacent_find(rep.emitted.begin(), rep.emitted.end()) == rep.emitted.end());
      for (const auto& s : rep.emitted) {
        CHECK(s.size() == rep.hull_number);
        CHECK(toll_hull(g, s) == g.vertices());
      }
      if (rep.complete()) ++complete;
    }
    CHECK(graphs == 143);
    MESSAGE("complete against brute force on " << complete << " of " << graphs << " graphs");
  }

  TEST_CASE("delay stays polynomial") {
    for (const Graph& g : testing::random_connected(40, 8, 16, 77)) {
      MinHullSetEnumerator e(g);
      while (e.next()) {
      }
      const std::size_t n = g.order();
      CHECK(e.stats().max_delay <= 4 * n * n * n * n);
      CHECK(e.stats().emitted >= 1);
      CHECK(e.stats().rejected <= e.stats().emitted);
    }
  }

  TEST_CASE("strict mode throws on a rejected combination") {
    // Its menu holds one combination whose hull misses a vertex.
    const Graph g = parse_graph6("GBIgIC");
    MinHullSetEnumerator lenient(g);
    while (lenient.next()) {
    }
    CHECK(lenient.stats().rejected == 1);
    CHECK(lenient.stats().emitted == 7);
    MinHullSetEnumerator strict(g, {std::nullopt, true});
    CHECK_THROWS_AS(
        [&] {
          while (strict.next()) {
          }
        }(),
        InvariantViolation);
  }

  TEST_CASE("disconnected input") {
    CHECK_THROWS_AS(enumerate_min_hull_sets(parse_edge_list("a b\nc d\n")), GraphError);
  }
}
