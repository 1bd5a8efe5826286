#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tollhull/atoms.hpp"
#include "tollhull/graph.hpp"
#include "tollhull/toll_convexity.hpp"

namespace tollhull {

/// Raised when one of the structural guarantees the solver relies on fails.
/// It always indicates a defect, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Classification of a t-concave set C with neighborhood N(C):
///   type 1: (C, N(C)) is not complete;
///   type 2: (C, N(C)) is complete and C is not a clique;
///   type 3: C together with N(C) is a clique.
enum class ConcaveType { kType1 = 1, kType2 = 2, kType3 = 3 };

int type_number(ConcaveType t);

/// Type of a non-empty t-concave set. Throws GraphError when the interior is
/// empty or not t-concave.
ConcaveType classify_type(const Graph& g, const Block& b);

/// Type of a set already known to be t-concave.
ConcaveType classify_concave_set(const Graph& g, const VertexSet& c);

/// Everything a selection rule may look at when a t-concave set is formed.
/// For the initial pass over extremal atoms, outer == target and members holds
/// the atom alone.
struct ChoiceContext {
  Block outer;                                // the non-concave member that triggered the merge
  Block target;                               // the merged set whose interior is concave
  std::vector<Block> members;                 // the merged members, in merge order
  std::vector<bool> member_from_extremal;     // whether each member came from the extremal family
  std::optional<std::size_t> concave_member;  // index of the single concave member (k = 1)
  ConcaveType type = ConcaveType::kType1;
  std::size_t concave_count = 0;              // k
};

/// One admissible selection of a rule.
struct ChoiceOutcome {
  int rule = 0;
  std::vector<Vertex> chosen;       // one or two vertices, ascending
  std::vector<Vertex> witnesses;    // non-neighbors that justify the selection
  std::vector<std::size_t> members; // indices into ChoiceContext::members
};

/// Every selection satisfying rule `rule` (1..8), ordered by the chosen
/// vertices. Distinct chosen sets appear once, with their least witnesses.
std::vector<ChoiceOutcome> choice_candidates(int rule, const Graph& g, const ChoiceContext& ctx);

/// The lexicographically least selection of `rule`, or nullopt when the rule
/// is not applicable.
std::optional<ChoiceOutcome> apply_choice(int rule, const Graph& g, const ChoiceContext& ctx);

/// Vertices a block contributes to the hull set, with the context needed to
/// re-derive every alternative later. Rule 0 stands for "the whole interior"
/// (type 3 sets and complete graphs).
struct SelectionRecord {
  int rule = 0;
  ChoiceContext context;
  std::vector<Vertex> chosen;
  /// Borders added when the record was inherited by a larger type 1 set:
  /// each chosen vertex must have a non-neighbor in every one of them.
  std::vector<VertexSet> gap_borders;
};

/// Every selection the record admits: the candidates of its rule that also
/// satisfy its gap borders. Rule 0 admits the whole interior only.
std::vector<std::vector<Vertex>> record_options(const Graph& g, const SelectionRecord& record);

struct CharacteristicBlock {
  VertexSet interior;
  ConcaveType type = ConcaveType::kType1;
  std::size_t granularity = 0;
  VertexSet chosen;
  std::vector<std::size_t> records;  // indices into HullResult::records
};

using CharacteristicFamily = std::vector<CharacteristicBlock>;

struct TraceRecord {
  enum class Phase { kInitial, kMerge };
  Phase phase = Phase::kInitial;
  std::size_t iteration = 0;
  VertexSet outer;                  // F (initial pass) or the triggering member
  std::vector<VertexSet> merged_extremal;
  std::vector<VertexSet> merged_other;
  VertexSet merged;                 // the resulting member
  bool concave = false;
  std::optional<ConcaveType> type;
  std::size_t concave_count = 0;
  int rule = -1;                    // -1 none, 0 whole interior, 1..8 rule number
  std::vector<Vertex> chosen;
  std::string note;
};

enum class SolveRoute { kComplete, kPrime, kDecomposition };

struct HullResult {
  SolveRoute route = SolveRoute::kDecomposition;
  VertexSet hull_set;
  std::size_t hull_number = 0;
  std::vector<VertexSet> final_extremal;   // members of the extremal family at the end
  std::vector<bool> final_concave;         // parallel to final_extremal
  std::vector<VertexSet> final_other;      // remaining non-extremal atoms
  CharacteristicFamily family;
  VertexSet extreme_vertices;
  std::vector<SelectionRecord> records;
  std::vector<TraceRecord> trace;
  std::vector<std::string> diagnostics;    // non-fatal anomalies; empty on every known input
};

struct SolverOptions {
  /// Re-check the structural invariants after every merge.
  bool check_invariants = true;
  /// Turn anomalies that have a fallback into InvariantViolation as well.
  bool strict = false;
  /// Guard the merge branches against selections that leave the merged set
  /// uncovered: an inherited type 1 vertex must keep a non-neighbor on the
  /// new border, and the selections inside a concave merged set, inherited
  /// or new, are the first combination among the rules' candidates whose
  /// hull together with everything outside the merged interior covers it.
  /// Switching this off gives the literal algorithm.
  bool repair_selections = true;
};

/// Minimum toll hull set of a connected graph.
HullResult solve(const Graph& g, const SolverOptions& options = {});

/// The concave interiors of the final extremal family with type, granularity
/// and selected vertices.
CharacteristicFamily characteristic_family(const HullResult& result);

/// Union of the type-3 members of the characteristic family.
VertexSet extreme_vertices_via_family(const HullResult& result);

}  // namespace tollhull
