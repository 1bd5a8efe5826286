#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "tollhull/graph.hpp"
#include "tollhull/hull_solver.hpp"

namespace tollhull {

/// Alternatives for one selection record of a solve.
struct MenuEntry {
  std::size_t record = 0;
  int rule = 0;
  std::vector<std::vector<Vertex>> options;
};

/// t(C) for one block: the admissible selections of every record the block
/// owns, and their combinations. Records that belong to no block of the
/// characteristic family (the prime route, for instance) get a block of
/// their own with no type.
struct MenuBlock {
  VertexSet interior;
  std::optional<ConcaveType> type;
  std::vector<MenuEntry> entries;
  std::vector<VertexSet> selections;  // ascending, distinct
};

struct SelectionMenu {
  std::vector<MenuBlock> blocks;
};

SelectionMenu selection_menu(const Graph& g, const HullResult& result);

struct EnumerationOptions {
  std::optional<std::size_t> limit;
  /// Throw InvariantViolation on a combination that is not a minimum hull
  /// set instead of skipping it.
  bool strict = false;
};

struct EnumerationStats {
  std::size_t emitted = 0;
  std::size_t rejected = 0;       // combinations that failed verification
  std::size_t operations = 0;     // option scans and closure checks so far
  std::size_t max_delay = 0;      // most operations between two emissions
  bool factorized = true;         // false when record supports overlap
};

/// Streams minimum toll hull sets built from the selection menu, in
/// lexicographic order, each verified before it is returned.
class MinHullSetEnumerator {
 public:
  explicit MinHullSetEnumerator(const Graph& g, EnumerationOptions options = {});
  ~MinHullSetEnumerator();
  MinHullSetEnumerator(MinHullSetEnumerator&&) noexcept;
  MinHullSetEnumerator& operator=(MinHullSetEnumerator&&) noexcept;

  std::optional<VertexSet> next();

  const HullResult& solution() const;
  const SelectionMenu& menu() const;
  const EnumerationStats& stats() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

std::vector<VertexSet> enumerate_min_hull_sets(const Graph& g, std::optional<std::size_t> limit = std::nullopt);

/// Enumerated sets against every minimum hull set found by brute force.
struct CompletenessReport {
  std::size_t hull_number = 0;
  std::vector<VertexSet> emitted;
  std::vector<VertexSet> brute_force;
  std::vector<VertexSet> missing;     // found by brute force only
  std::vector<VertexSet> unexpected;  // emitted but not minimum (never expected)
  EnumerationStats stats;
  bool complete() const { return missing.empty() && unexpected.empty(); }
};

CompletenessReport compare_with_brute_force(const Graph& g);

}  // namespace tollhull
