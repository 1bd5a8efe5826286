#include "tollhull/hull_solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tollhull {

int type_number(ConcaveType t) { return static_cast<int>(t); }

ConcaveType classify_concave_set(const Graph& g, const VertexSet& c) {
  const VertexSet nb = open_neighborhood(g, c);
  bool complete = true;
  for (Vertex v : c) {
    if (!nb.is_subset_of(g.neighbors(v))) {
      complete = false;
      break;
    }
  }
  if (!complete) return ConcaveType::kType1;
  if (!is_clique(g, c)) return ConcaveType::kType2;
  if (is_clique(g, c | nb)) return ConcaveType::kType3;
  throw InvariantViolation("concave clique with a non-clique neighborhood " + format_set(g, c));
}

ConcaveType classify_type(const Graph& g, const Block& b) {
  if (b.interior.empty()) throw GraphError("classify_type: empty interior");
  if (!interior_is_concave(g, b)) throw GraphError("classify_type: interior is not t-concave");
  return classify_concave_set(g, b.interior);
}

namespace {

// Component labels of g - N[u], computed on demand.
class SeparatorCache {
 public:
  explicit SeparatorCache(const Graph& g) : g_(g) {}

  // True iff N[u] does not separate a from b (both outside N[u]).
  bool joined_avoiding(Vertex u, Vertex a, Vertex b) {
    const VertexSet& closed = closed_of(u);
    if (closed.contains(a) || closed.contains(b)) return false;
    const auto& lab = labels(u);
    return lab[a] == lab[b];
  }

 private:
  const VertexSet& closed_of(Vertex u) {
    auto it = closed_.find(u);
    if (it == closed_.end()) it = closed_.emplace(u, g_.closed_neighbors(u)).first;
    return it->second;
  }
  const std::vector<int>& labels(Vertex u) {
    auto it = labels_.find(u);
    if (it == labels_.end()) it = labels_.emplace(u, component_labels(g_, closed_of(u))).first;
    return it->second;
  }

  const Graph& g_;
  std::map<Vertex, VertexSet> closed_;
  std::map<Vertex, std::vector<int>> labels_;
};

std::optional<Vertex> least_non_neighbor(const Graph& g, Vertex u, const VertexSet& pool) {
  return (pool - g.closed_neighbors(u)).min();
}

std::optional<std::size_t> member_with_interior(const ChoiceContext& ctx, Vertex u) {
  for (std::size_t i = 0; i < ctx.members.size(); ++i) {
    if (ctx.members[i].interior.contains(u)) return i;
  }
  return std::nullopt;
}

// Least u' in the outer border that is a non-neighbor of u and such that
// N[u] does not separate other from u'.
std::optional<Vertex> separation_witness(const Graph& g, SeparatorCache& cache, const ChoiceContext& ctx,
                                         Vertex u, Vertex other) {
  for (Vertex w : ctx.outer.border - g.closed_neighbors(u)) {
    if (cache.joined_avoiding(u, other, w)) return w;
  }
  return std::nullopt;
}

std::vector<ChoiceOutcome> interior_with_border_gap(const Graph& g, const ChoiceContext& ctx, int rule) {
  // Rules 1, 2 and 3 all pick one interior vertex of the target with a
  // non-neighbor on its border; 2 and 3 also need a member pair (F1, F2) with
  // u interior to F1 and the target border inside F2, and 2 further needs a
  // non-neighbor on the outer border.
  std::vector<ChoiceOutcome> out;
  for (Vertex u : ctx.target.interior) {
    auto gap = least_non_neighbor(g, u, ctx.target.border);
    if (!gap) continue;
    ChoiceOutcome o{rule, {u}, {*gap}, {}};
    if (rule >= 2) {
      auto f1 = member_with_interior(ctx, u);
      if (!f1) continue;
      std::optional<std::size_t> f2;
      for (std::size_t i = 0; i < ctx.members.size(); ++i) {
        if (i != *f1 && ctx.target.border.is_subset_of(ctx.members[i].members)) {
          f2 = i;
          break;
        }
      }
      if (!f2) continue;
      if (rule == 2) {
        auto outer_gap = least_non_neighbor(g, u, ctx.outer.border);
        if (!outer_gap) continue;
        o.witnesses.push_back(*outer_gap);
      }
      o.members = {*f1, *f2};
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<ChoiceOutcome> non_adjacent_interior_pairs(const Graph& g, const ChoiceContext& ctx) {
  std::vector<ChoiceOutcome> out;
  const auto inner = ctx.target.interior.to_vector();
  for (std::size_t i = 0; i < inner.size(); ++i) {
    for (std::size_t j = i + 1; j < inner.size(); ++j) {
      if (!g.adjacent(inner[i], inner[j])) out.push_back({4, {inner[i], inner[j]}, {}, {}});
    }
  }
  return out;
}

std::vector<ChoiceOutcome> separated_pairs(const Graph& g, const ChoiceContext& ctx, bool same_member) {
  SeparatorCache cache(g);
  std::vector<ChoiceOutcome> out;
  auto consider = [&](Vertex a, std::size_t fa, Vertex b, std::size_t fb) {
    if (a == b || g.adjacent(a, b)) return;
    auto wa = separation_witness(g, cache, ctx, a, b);
    if (!wa) return;
    auto wb = separation_witness(g, cache, ctx, b, a);
    if (!wb) return;
    if (a < b) {
      out.push_back({same_member ? 5 : 6, {a, b}, {*wa, *wb}, {fa, fb}});
    } else {
      out.push_back({same_member ? 5 : 6, {b, a}, {*wb, *wa}, {fb, fa}});
    }
  };
  for (std::size_t f1 = 0; f1 < ctx.members.size(); ++f1) {
    const auto first = ctx.members[f1].interior.to_vector();
    if (same_member) {
      for (std::size_t i = 0; i < first.size(); ++i) {
        for (std::size_t j = i + 1; j < first.size(); ++j) consider(first[i], f1, first[j], f1);
      }
      continue;
    }
    for (std::size_t f2 = f1 + 1; f2 < ctx.members.size(); ++f2) {
      for (Vertex a : first) {
        for (Vertex b : ctx.members[f2].interior) consider(a, f1, b, f2);
      }
    }
  }
  return out;
}

std::vector<ChoiceOutcome> other_member_vertices(const Graph& g, const ChoiceContext& ctx, bool need_gap) {
  if (!ctx.concave_member) {
    throw InvariantViolation("rules 7 and 8 need the concave member of the merge");
  }
  std::vector<ChoiceOutcome> out;
  for (std::size_t f = 0; f < ctx.members.size(); ++f) {
    if (f == *ctx.concave_member) continue;
    for (Vertex u : ctx.members[f].interior) {
      ChoiceOutcome o{need_gap ? 7 : 8, {u}, {}, {*ctx.concave_member, f}};
      if (need_gap) {
        auto gap = least_non_neighbor(g, u, ctx.outer.border);
        if (!gap) continue;
        o.witnesses.push_back(*gap);
      }
      out.push_back(std::move(o));
    }
  }
  return out;
}

}  // namespace

std::vector<ChoiceOutcome> choice_candidates(int rule, const Graph& g, const ChoiceContext& ctx) {
  std::vector<ChoiceOutcome> out;
  switch (rule) {
    case 1:
    case 2:
    case 3:
      out = interior_with_border_gap(g, ctx, rule);
      break;
    case 4:
      out = non_adjacent_interior_pairs(g, ctx);
      break;
    case 5:
      out = separated_pairs(g, ctx, true);
      break;
    case 6:
      out = separated_pairs(g, ctx, false);
      break;
    case 7:
      out = other_member_vertices(g, ctx, true);
      break;
    case 8:
      out = other_member_vertices(g, ctx, false);
      break;
    default:
      throw GraphError("unknown selection rule " + std::to_string(rule));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ChoiceOutcome& a, const ChoiceOutcome& b) { return a.chosen < b.chosen; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const ChoiceOutcome& a, const ChoiceOutcome& b) { return a.chosen == b.chosen; }),
            out.end());
  return out;
}

std::optional<ChoiceOutcome> apply_choice(int rule, const Graph& g, const ChoiceContext& ctx) {
  auto all = choice_candidates(rule, g, ctx);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<std::vector<Vertex>> record_options(const Graph& g, const SelectionRecord& record) {
  if (record.rule == 0) return {record.context.target.interior.to_vector()};
  std::vector<std::vector<Vertex>> out;
  for (auto& c : choice_candidates(record.rule, g, record.context)) {
    bool ok = true;
    for (const auto& border : record.gap_borders) {
      for (Vertex v : c.chosen) ok = ok && !(border - g.closed_neighbors(v)).empty();
    }
    if (ok) out.push_back(std::move(c.chosen));
  }
  return out;
}

namespace {

struct Member {
  VertexSet set;
  Block block;
  bool extremal = false;
  bool alive = true;
  bool concave = false;
  std::optional<ConcaveType> type;
  std::vector<std::size_t> records;
};

std::size_t granularity_of(ConcaveType t, const VertexSet& c) {
  switch (t) {
    case ConcaveType::kType1:
      return 1;
    case ConcaveType::kType2:
      return 2;
    case ConcaveType::kType3:
      return c.size();
  }
  return 0;
}

// Cap on the local hull checks spent on one merge.
constexpr std::size_t kSearchBudget = 4096;

class Solver {
 public:
  Solver(const Graph& g, const SolverOptions& options) : g_(g), options_(options) {}

  HullResult run() {
    require_connected(g_, "solve");
    const VertexSet all = g_.vertices();
    if (is_clique(g_, all)) return complete_case();
    const AtomDecomposition decomposition = atoms(g_);
    if (decomposition.atoms.size() == 1) return prime_case();

    for (std::size_t i = 0; i < decomposition.atoms.size(); ++i) {
      Member m;
      m.set = decomposition.atoms[i].vertices;
      m.block = block_of(g_, m.set);
      m.extremal = decomposition.extremal[i];
      if (options_.check_invariants && !m.extremal && components(g_, m.set).size() < 2) {
        violation("non-extremal atom " + format_set(g_, m.set) + " does not disconnect the graph");
      }
      members_.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i].extremal) initial_selection(i);
    }
    check_state();
    while (merge_step()) {
    }
    return finish();
  }

 private:
  HullResult complete_case() {
    result_.route = SolveRoute::kComplete;
    const Block whole = block_of(g_, g_.vertices());
    ChoiceContext ctx{whole, whole, {whole}, {true}, std::nullopt, ConcaveType::kType3, 0};
    result_.records.push_back({0, ctx, whole.interior.to_vector(), {}});
    result_.hull_set = whole.interior;
    result_.hull_number = g_.order();
    result_.final_extremal = {whole.members};
    result_.final_concave = {true};
    result_.family.push_back({whole.interior, ConcaveType::kType3, g_.order(), whole.interior, {0}});
    result_.extreme_vertices = whole.interior;
    return std::move(result_);
  }

  HullResult prime_case() {
    result_.route = SolveRoute::kPrime;
    const Block whole = block_of(g_, g_.vertices());
    ChoiceContext ctx{whole, whole, {whole}, {true}, std::nullopt, ConcaveType::kType2, 0};
    auto pick = apply_choice(4, g_, ctx);
    if (!pick) throw InvariantViolation("prime non-complete graph without a non-adjacent pair");
    result_.records.push_back({4, ctx, pick->chosen, {}});
    result_.hull_set = VertexSet(g_.order(), std::span<const Vertex>(pick->chosen));
    result_.hull_number = 2;
    result_.final_extremal = {whole.members};
    result_.final_concave = {true};
    result_.extreme_vertices = g_.empty_set();
    TraceRecord t;
    t.outer = whole.members;
    t.merged = whole.members;
    t.concave = true;
    t.type = ConcaveType::kType2;
    t.rule = 4;
    t.chosen = pick->chosen;
    t.note = "prime graph";
    result_.trace.push_back(std::move(t));
    return std::move(result_);
  }

  void violation(const std::string& what) const { throw InvariantViolation(what); }

  void diagnostic(std::string what) {
    if (options_.strict) violation(what);
    result_.diagnostics.push_back(std::move(what));
  }

  void mark_concavity(Member& m) {
    m.concave = !m.block.interior.empty() && interior_is_concave(g_, m.block);
    if (!m.concave) return;
    m.type = classify_concave_set(g_, m.block.interior);
    if (!options_.check_invariants || !m.extremal) return;
    // A concave member of the extremal family has a clique border equal to
    // N(interior) and a connected interior.
    if (!is_clique(g_, m.block.border)) violation("concave member with non-clique border " + format_set(g_, m.set));
    if (!induces_connected(g_, m.block.interior)) {
      violation("concave member with disconnected interior " + format_set(g_, m.set));
    }
    if (!(open_neighborhood(g_, m.block.interior) == m.block.border)) {
      violation("concave member whose border is not N(interior) " + format_set(g_, m.set));
    }
  }

  std::size_t add_record(int rule, const ChoiceContext& ctx, std::vector<Vertex> chosen) {
    result_.records.push_back({rule, ctx, std::move(chosen), {}});
    return result_.records.size() - 1;
  }

  void initial_selection(std::size_t index) {
    Member& m = members_[index];
    mark_concavity(m);
    TraceRecord t;
    t.phase = TraceRecord::Phase::kInitial;
    t.outer = m.set;
    t.merged = m.set;
    t.concave = m.concave;
    t.type = m.type;
    if (m.concave) {
      ChoiceContext ctx{m.block, m.block, {m.block}, {true}, std::nullopt, *m.type, 0};
      std::vector<Vertex> chosen;
      int rule = 0;
      if (*m.type == ConcaveType::kType3) {
        chosen = m.block.interior.to_vector();
      } else {
        rule = *m.type == ConcaveType::kType1 ? 1 : 4;
        auto pick = apply_choice(rule, g_, ctx);
        if (!pick) violation("rule " + std::to_string(rule) + " found no candidate in " + format_set(g_, m.set));
        chosen = pick->chosen;
      }
      m.records.push_back(add_record(rule, ctx, chosen));
      t.rule = rule;
      t.chosen = chosen;
    }
    result_.trace.push_back(std::move(t));
  }

  std::vector<std::size_t> alive_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i].alive) out.push_back(i);
    }
    return out;
  }

  // Member to merge next: a non-concave extremal-family member whose border
  // lies inside some other live member; smallest minimum vertex first.
  std::optional<std::size_t> pick_outer() const {
    std::optional<std::size_t> best;
    for (std::size_t i : alive_indices()) {
      const Member& m = members_[i];
      if (!m.extremal || m.concave) continue;
      bool covered = false;
      for (std::size_t j : alive_indices()) {
        if (j != i && m.block.border.is_subset_of(members_[j].set)) {
          covered = true;
          break;
        }
      }
      if (!covered) continue;
      if (!best) {
        best = i;
        continue;
      }
      const Member& b = members_[*best];
      auto mi = *m.set.min();
      auto mb = *b.set.min();
      if (mi < mb || (mi == mb && m.set < b.set)) best = i;
    }
    return best;
  }

  bool merge_step() {
    auto outer_index = pick_outer();
    if (!outer_index) return false;
    ++iteration_;
    const Member outer = members_[*outer_index];
    const VertexSet& border = outer.block.border;

    std::vector<std::size_t> merged;
    std::vector<VertexSet> merged_extremal;
    std::vector<VertexSet> merged_other;
    for (std::size_t i : alive_indices()) {
      if (border.is_subset_of(members_[i].set)) merged.push_back(i);
    }
    // Non-extremal members first, then extremal ones, each in creation order.
    std::stable_partition(merged.begin(), merged.end(), [&](std::size_t i) { return !members_[i].extremal; });
    if (merged.size() < 2) violation("merge step with fewer than two members");

    Member joined;
    joined.set = g_.empty_set();
    joined.extremal = true;
    std::size_t concave_count = 0;
    std::optional<std::size_t> concave_position;
    ChoiceContext ctx;
    ctx.outer = outer.block;
    for (std::size_t pos = 0; pos < merged.size(); ++pos) {
      Member& m = members_[merged[pos]];
      m.alive = false;
      joined.set |= m.set;
      ctx.members.push_back(m.block);
      ctx.member_from_extremal.push_back(m.extremal);
      (m.extremal ? merged_extremal : merged_other).push_back(m.set);
      if (m.extremal && m.concave) {
        ++concave_count;
        concave_position = pos;
      }
    }
    joined.block = block_of(g_, joined.set);
    mark_concavity(joined);
    ctx.target = joined.block;
    ctx.concave_count = concave_count;

    TraceRecord t;
    t.phase = TraceRecord::Phase::kMerge;
    t.iteration = iteration_;
    t.outer = outer.set;
    t.merged_extremal = merged_extremal;
    t.merged_other = merged_other;
    t.merged = joined.set;
    t.concave = joined.concave;
    t.type = joined.type;
    t.concave_count = concave_count;

    if (!joined.concave) {
      for (std::size_t i : merged) {
        const auto& r = members_[i].records;
        joined.records.insert(joined.records.end(), r.begin(), r.end());
      }
    } else {
      const ConcaveType type = *joined.type;
      ctx.type = type;
      if (concave_count == 1) ctx.concave_member = concave_position;
      if (options_.check_invariants) {
        if (concave_count > 2) violation("more than two concave members merged into a concave set");
        if (type == ConcaveType::kType1 && concave_count > 1) {
          violation("type 1 merge with more than one concave member");
        }
        for (std::size_t i : merged) {
          const Member& m = members_[i];
          if (m.extremal && m.concave && m.type != ConcaveType::kType1) {
            violation("concave member of a concave merge is not of type 1");
          }
        }
      }
      for (std::size_t i : merged) {
        if (members_[i].concave) {
          const auto& r = members_[i].records;
          joined.records.insert(joined.records.end(), r.begin(), r.end());
        }
      }
      settle_concave_merge(ctx, merged, joined, t);
    }
    result_.trace.push_back(std::move(t));
    members_.push_back(std::move(joined));
    check_state();
    return true;
  }

  // Rules for a concave merge of type i with k concave members: the first
  // rule is used when it has a candidate, the second otherwise. Empty pairs
  // add nothing.
  std::pair<int, int> merge_rules(ConcaveType type, std::size_t k) const {
    if (type == ConcaveType::kType1 && k == 0) return {2, 3};
    if (type == ConcaveType::kType2 && k == 0) return {5, 6};
    if (type == ConcaveType::kType2 && k == 1) return {7, 8};
    if ((type == ConcaveType::kType1 && k == 1) || (type == ConcaveType::kType2 && k == 2)) return {0, 0};
    violation("no selection branch for type " + std::to_string(type_number(type)) + " with " + std::to_string(k) +
              " concave members");
    return {0, 0};
  }

  void settle_concave_merge(const ChoiceContext& ctx, const std::vector<std::size_t>& merged, Member& joined,
                            TraceRecord& t) {
    const ConcaveType type = *joined.type;
    if (type == ConcaveType::kType3) {
      diagnostic("merged set " + format_set(g_, joined.set) + " has a type 3 interior");
      joined.records = {add_record(0, ctx, joined.block.interior.to_vector())};
      t.rule = 0;
      t.chosen = joined.block.interior.to_vector();
      t.note = "type 3 merge; whole interior added";
      return;
    }
    const auto [first, second] = merge_rules(type, ctx.concave_count);
    std::vector<ChoiceOutcome> fresh;
    if (first != 0) {
      fresh = choice_candidates(first, g_, ctx);
      if (fresh.empty() || options_.repair_selections) {
        auto more = choice_candidates(second, g_, ctx);
        fresh.insert(fresh.end(), more.begin(), more.end());
      }
      if (fresh.empty()) {
        violation("rules " + std::to_string(first) + " and " + std::to_string(second) + " found no candidate for " +
                  format_set(g_, joined.set));
      }
    }
    std::size_t pick = 0;
    if (options_.repair_selections) {
      const bool needs_gap = type == ConcaveType::kType1;
      std::vector<std::size_t> inherited;
      std::vector<std::vector<SelectionRecord>> variants;
      for (std::size_t i : merged) {
        const Member& m = members_[i];
        if (!m.concave) continue;
        for (std::size_t r : m.records) {
          if (result_.records[r].rule < 1 || result_.records[r].rule > 3) continue;
          inherited.push_back(r);
          variants.push_back(record_variants(result_.records[r], m.block, needs_gap ? &joined.block.border : nullptr));
        }
      }
      pick = search_closing(joined, inherited, variants, fresh, t);
    }
    if (!fresh.empty()) {
      const ChoiceOutcome& chosen = fresh[pick];
      joined.records.push_back(add_record(chosen.rule, ctx, chosen.chosen));
      t.rule = chosen.rule;
      t.chosen = chosen.chosen;
    }
  }

  // Alternatives for an inherited selection, the current one first. With a
  // border given, every alternative needs a non-neighbor on it; when the
  // recorded rule admits none, the type 1 selection on the member alone is
  // used instead.
  std::vector<SelectionRecord> record_variants(const SelectionRecord& record, const Block& member,
                                               const VertexSet* border) {
    SelectionRecord base = record;
    if (border) base.gap_borders.push_back(*border);
    auto options = record_options(g_, base);
    if (options.empty() && border) {
      base = SelectionRecord{1, ChoiceContext{member, member, {member}, {true}, std::nullopt, ConcaveType::kType1, 0},
                             {}, base.gap_borders};
      options = record_options(g_, base);
    }
    if (options.empty()) {
      diagnostic("no option of an inherited selection has a non-neighbor on " + format_set(g_, *border));
      return {record};
    }
    auto current = std::find(options.begin(), options.end(), record.chosen);
    if (current != options.end()) std::rotate(options.begin(), current, current + 1);
    std::vector<SelectionRecord> out;
    for (auto& o : options) {
      out.push_back(base);
      out.back().chosen = std::move(o);
    }
    return out;
  }

  // First combination of inherited alternatives and fresh candidates whose
  // hull, with every vertex outside the merged interior and everything else
  // already chosen inside, covers the merged set. Inherited records are updated in place; the index
  // of the fresh candidate is returned.
  std::size_t search_closing(const Member& joined, const std::vector<std::size_t>& inherited,
                             const std::vector<std::vector<SelectionRecord>>& variants,
                             const std::vector<ChoiceOutcome>& fresh, TraceRecord& t) {
    VertexSet fixed = joined.block.interior.complement();
    for (std::size_t r = 0; r < result_.records.size(); ++r) {
      if (std::find(inherited.begin(), inherited.end(), r) != inherited.end()) continue;
      for (Vertex v : result_.records[r].chosen) {
        if (joined.block.interior.contains(v)) fixed.insert(v);
      }
    }
    const std::size_t fresh_count = std::max<std::size_t>(fresh.size(), 1);
    std::vector<std::size_t> odometer(inherited.size(), 0);
    std::size_t budget = kSearchBudget;
    std::optional<std::size_t> found;
    while (!found && budget > 0) {
      VertexSet base = fixed;
      for (std::size_t i = 0; i < inherited.size(); ++i) {
        for (Vertex v : variants[i][odometer[i]].chosen) base.insert(v);
      }
      for (std::size_t f = 0; f < fresh_count && budget > 0; ++f, --budget) {
        VertexSet trial = base;
        if (!fresh.empty()) {
          for (Vertex v : fresh[f].chosen) trial.insert(v);
        }
        if (joined.set.is_subset_of(toll_hull(g_, trial))) {
          found = f;
          break;
        }
      }
      if (found) break;
      std::size_t i = 0;
      while (i < odometer.size() && ++odometer[i] == variants[i].size()) odometer[i++] = 0;
      if (i == odometer.size()) break;
    }
    if (!found) {
      std::fill(odometer.begin(), odometer.end(), 0);
      t.note = "no selection covers the merged set locally";
    }
    for (std::size_t i = 0; i < inherited.size(); ++i) {
      SelectionRecord& record = result_.records[inherited[i]];
      const SelectionRecord& next = variants[i][odometer[i]];
      if (next.chosen != record.chosen && t.note.empty()) t.note = "inherited selection replaced";
      record = next;
    }
    return found.value_or(0);
  }

  void check_state() const {
    if (!options_.check_invariants) return;
    const auto live = alive_indices();
    for (std::size_t a = 0; a < live.size(); ++a) {
      const Member& ma = members_[live[a]];
      if (ma.extremal && ma.block.interior.empty()) {
        violation("extremal-family member with empty interior " + format_set(g_, ma.set));
      }
      for (std::size_t b = a + 1; b < live.size(); ++b) {
        const Member& mb = members_[live[b]];
        if (ma.block.interior.intersects(mb.block.interior)) {
          violation("overlapping interiors " + format_set(g_, ma.set) + " and " + format_set(g_, mb.set));
        }
        if (!is_clique(g_, ma.set & mb.set)) {
          violation("non-clique intersection of " + format_set(g_, ma.set) + " and " + format_set(g_, mb.set));
        }
      }
    }
  }

  HullResult finish() {
    result_.route = SolveRoute::kDecomposition;
    VertexSet hull = g_.empty_set();
    for (const auto& r : result_.records) {
      for (Vertex v : r.chosen) hull.insert(v);
    }
    std::vector<bool> owned(result_.records.size(), false);
    for (std::size_t i : alive_indices()) {
      const Member& m = members_[i];
      if (m.extremal) {
        result_.final_extremal.push_back(m.set);
        result_.final_concave.push_back(m.concave);
        if (m.concave) {
          CharacteristicBlock block;
          block.interior = m.block.interior;
          block.type = *m.type;
          block.granularity = granularity_of(block.type, block.interior);
          block.chosen = hull & block.interior;
          block.records = m.records;
          for (std::size_t r : m.records) owned[r] = true;
          result_.family.push_back(std::move(block));
        }
      } else {
        result_.final_other.push_back(m.set);
      }
    }
    std::sort(result_.family.begin(), result_.family.end(),
              [](const CharacteristicBlock& a, const CharacteristicBlock& b) { return a.interior < b.interior; });
    for (std::size_t r = 0; r < owned.size(); ++r) {
      if (!owned[r]) diagnostic("selection record " + std::to_string(r) + " lies outside the characteristic family");
    }
    std::size_t total = 0;
    for (const auto& block : result_.family) {
      total += block.granularity;
      if (block.chosen.size() != block.granularity) {
        diagnostic("block " + format_set(g_, block.interior) + " holds " + std::to_string(block.chosen.size()) +
                   " selected vertices, granularity " + std::to_string(block.granularity));
      }
    }
    if (total != hull.size()) {
      diagnostic("hull set size " + std::to_string(hull.size()) + " differs from total granularity " +
                 std::to_string(total));
    }
    if (options_.check_invariants && !(toll_hull(g_, hull) == g_.vertices())) {
      diagnostic("selected set " + format_set(g_, hull) + " does not generate the graph");
    }
    result_.hull_set = hull;
    result_.hull_number = hull.size();
    result_.extreme_vertices = extreme_vertices_via_family(result_);
    return std::move(result_);
  }

  const Graph& g_;
  SolverOptions options_;
  std::vector<Member> members_;
  std::size_t iteration_ = 0;
  HullResult result_;
};

}  // namespace

HullResult solve(const Graph& g, const SolverOptions& options) { return Solver(g, options).run(); }

CharacteristicFamily characteristic_family(const HullResult& result) { return result.family; }

VertexSet extreme_vertices_via_family(const HullResult& result) {
  VertexSet out(result.hull_set.universe());
  for (const auto& block : result.family) {
    if (block.type == ConcaveType::kType3) out |= block.interior;
  }
  return out;
}

}  // namespace tollhull
