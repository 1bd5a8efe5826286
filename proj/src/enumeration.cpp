#include "tollhull/enumeration.hpp"

#include <algorithm>
#include <set>

#include "tollhull/oracles.hpp"
#include "tollhull/toll_convexity.hpp"

namespace tollhull {

namespace {

VertexSet to_set(const Graph& g, const std::vector<Vertex>& vs) {
  return VertexSet(g.order(), std::span<const Vertex>(vs));
}

// Unions of one option per entry, ascending and distinct.
std::vector<VertexSet> combine(const Graph& g, const std::vector<MenuEntry>& entries) {
  std::set<VertexSet> out;
  std::vector<std::size_t> odometer(entries.size(), 0);
  for (const auto& e : entries) {
    if (e.options.empty()) return {};
  }
  while (true) {
    VertexSet s = g.empty_set();
    for (std::size_t i = 0; i < entries.size(); ++i) s |= to_set(g, entries[i].options[odometer[i]]);
    out.insert(std::move(s));
    std::size_t i = 0;
    while (i < odometer.size() && ++odometer[i] == entries[i].options.size()) odometer[i++] = 0;
    if (i == odometer.size()) break;
  }
  return {out.begin(), out.end()};
}

MenuEntry entry_for(const Graph& g, const HullResult& result, std::size_t index) {
  const SelectionRecord& record = result.records[index];
  return {index, record.rule, record_options(g, record)};
}

}  // namespace

SelectionMenu selection_menu(const Graph& g, const HullResult& result) {
  SelectionMenu menu;
  std::vector<bool> owned(result.records.size(), false);
  for (const auto& block : result.family) {
    MenuBlock mb{block.interior, block.type, {}, {}};
    for (std::size_t r : block.records) {
      owned[r] = true;
      mb.entries.push_back(entry_for(g, result, r));
    }
    mb.selections = combine(g, mb.entries);
    menu.blocks.push_back(std::move(mb));
  }
  for (std::size_t r = 0; r < result.records.size(); ++r) {
    if (owned[r]) continue;
    MenuBlock mb{result.records[r].context.target.interior, std::nullopt, {entry_for(g, result, r)}, {}};
    mb.selections = combine(g, mb.entries);
    menu.blocks.push_back(std::move(mb));
  }
  return menu;
}

struct MinHullSetEnumerator::State {
  const Graph* graph;
  EnumerationOptions options;
  HullResult result;
  SelectionMenu menu;
  EnumerationStats stats;

  // One row per record: its options as sets and the vertices they touch.
  std::vector<std::vector<VertexSet>> record_options;
  std::vector<VertexSet> supports;

  // Flashlight search over the support vertices in ascending order.
  std::vector<Vertex> order;
  std::vector<int> branch;
  std::size_t depth = 0;
  VertexSet in;
  VertexSet out;
  bool finished = false;
  std::size_t since_emission = 0;

  // Used instead when supports overlap.
  std::vector<VertexSet> pending;
  std::size_t pending_index = 0;

  State(const Graph& g, EnumerationOptions opts)
      : graph(&g), options(opts), result(solve(g)), menu(selection_menu(g, result)) {
    VertexSet all = g.empty_set();
    for (const auto& block : menu.blocks) {
      for (const auto& entry : block.entries) {
        std::vector<VertexSet> sets;
        VertexSet support = g.empty_set();
        for (const auto& o : entry.options) {
          sets.push_back(to_set(g, o));
          support |= sets.back();
        }
        if (support.intersects(all)) stats.factorized = false;
        all |= support;
        record_options.push_back(std::move(sets));
        supports.push_back(std::move(support));
      }
    }
    in = g.empty_set();
    out = g.empty_set();
    if (stats.factorized) {
      order = all.to_vector();
      branch.assign(order.size() + 1, 0);
      finished = !feasible();
    } else {
      expand_product();
    }
  }

  void count(std::size_t ops) {
    stats.operations += ops;
    since_emission += ops;
  }

  bool feasible() {
    for (std::size_t r = 0; r < record_options.size(); ++r) {
      const VertexSet needed = in & supports[r];
      bool any = false;
      for (const auto& o : record_options[r]) {
        count(1);
        if (!o.intersects(out) && needed.is_subset_of(o)) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
    return true;
  }

  void expand_product() {
    std::set<VertexSet> seen;
    std::vector<std::size_t> odometer(record_options.size(), 0);
    for (const auto& opts : record_options) {
      if (opts.empty()) return;
    }
    while (true) {
      VertexSet s = graph->empty_set();
      for (std::size_t r = 0; r < record_options.size(); ++r) s |= record_options[r][odometer[r]];
      count(record_options.size());
      seen.insert(std::move(s));
      std::size_t i = 0;
      while (i < odometer.size() && ++odometer[i] == record_options[i].size()) odometer[i++] = 0;
      if (i == odometer.size()) break;
    }
    pending.assign(seen.begin(), seen.end());
  }

  bool verified(const VertexSet& s) {
    count(1);
    if (s.size() == result.hull_number && toll_hull(*graph, s) == graph->vertices()) return true;
    if (options.strict) throw InvariantViolation("combination " + format_set(*graph, s) + " is not a minimum hull set");
    ++stats.rejected;
    return false;
  }

  void undo(std::size_t d) {
    in.erase(order[d]);
    out.erase(order[d]);
  }

  std::optional<VertexSet> next_leaf() {
    while (!finished) {
      if (depth == order.size()) {
        VertexSet leaf = in;
        if (depth == 0) {
          finished = true;
        } else {
          --depth;
          undo(depth);
        }
        if (verified(leaf)) return leaf;
        continue;
      }
      const Vertex v = order[depth];
      if (branch[depth] == 0) {
        branch[depth] = 1;
        in.insert(v);
      } else if (branch[depth] == 1) {
        branch[depth] = 2;
        out.insert(v);
      } else {
        if (depth == 0) {
          finished = true;
          break;
        }
        --depth;
        undo(depth);
        continue;
      }
      if (feasible()) {
        ++depth;
        branch[depth] = 0;
      } else {
        undo(depth);
      }
    }
    return std::nullopt;
  }

  std::optional<VertexSet> next_pending() {
    while (pending_index < pending.size()) {
      VertexSet s = pending[pending_index++];
      if (verified(s)) return s;
    }
    return std::nullopt;
  }

  std::optional<VertexSet> next() {
    if (options.limit && stats.emitted >= *options.limit) return std::nullopt;
    auto s = stats.factorized ? next_leaf() : next_pending();
    stats.max_delay = std::max(stats.max_delay, since_emission);
    since_emission = 0;
    if (s) ++stats.emitted;
    return s;
  }
};

MinHullSetEnumerator::MinHullSetEnumerator(const Graph& g, EnumerationOptions options)
    : state_(std::make_unique<State>(g, options)) {}
MinHullSetEnumerator::~MinHullSetEnumerator() = default;
MinHullSetEnumerator::MinHullSetEnumerator(MinHullSetEnumerator&&) noexcept = default;
MinHullSetEnumerator& MinHullSetEnumerator::operator=(MinHullSetEnumerator&&) noexcept = default;

std::optional<VertexSet> MinHullSetEnumerator::next() { return state_->next(); }
const HullResult& MinHullSetEnumerator::solution() const { return state_->result; }
const SelectionMenu& MinHullSetEnumerator::menu() const { return state_->menu; }
const EnumerationStats& MinHullSetEnumerator::stats() const { return state_->stats; }

std::vector<VertexSet> enumerate_min_hull_sets(const Graph& g, std::optional<std::size_t> limit) {
  MinHullSetEnumerator e(g, {limit, false});
  std::vector<VertexSet> out;
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

CompletenessReport compare_with_brute_force(const Graph& g) {
  CompletenessReport report;
  report.brute_force = oracles::bf_all_min_hull_sets(g);
  MinHullSetEnumerator e(g);
  while (auto s = e.next()) report.emitted.push_back(std::move(*s));
  report.stats = e.stats();
  report.hull_number = e.solution().hull_number;
  std::set_difference(report.brute_force.begin(), report.brute_force.end(), report.emitted.begin(),
                      report.emitted.end(), std::back_inserter(report.missing));
  std::set_difference(report.emitted.begin(), report.emitted.end(), report.brute_force.begin(),
                      report.brute_force.end(), std::back_inserter(report.unexpected));
  return report;
}

}  // namespace tollhull
