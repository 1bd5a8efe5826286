#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "tollhull/atoms.hpp"
#include "tollhull/enumeration.hpp"
#include "tollhull/generators.hpp"
#include "tollhull/hull_solver.hpp"
#include "tollhull/io.hpp"
#include "tollhull/oracles.hpp"
#include "tollhull/toll_convexity.hpp"

namespace tollhull::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kFixturePrefix = "fixture:";

struct Globals {
  std::string format = "text";
  std::string input_format = "auto";
  bool trace = false;
  bool timing = false;
};

// Graphs named on the command line: a path, "-" for stdin, or
// "fixture:NAME" for a built-in graph. graph6 input may hold many graphs.
std::vector<Graph> load_graphs(const std::string& source, const Globals& globals) {
  if (source.starts_with(kFixturePrefix)) return {named_fixture(source.substr(kFixturePrefix.size()))};
  GraphFormat format = GraphFormat::kEdgeList;
  if (globals.input_format == "auto") {
    if (source.ends_with(".g6") || source.ends_with(".graph6")) format = GraphFormat::kGraph6;
  } else {
    format = parse_format_name(globals.input_format);
  }
  const std::string text = read_text(source);
  if (format == GraphFormat::kGraph6) {
    auto graphs = parse_graph6_corpus(text);
    if (graphs.empty()) throw GraphError("no graph6 records in " + source);
    return graphs;
  }
  return {parse_edge_list(text)};
}

Graph load_graph(const std::string& source, const Globals& globals) { return load_graphs(source, globals).front(); }

std::string digest(const Graph& g) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : to_edge_list(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Json input_json(const Graph& g) {
  return Json{{"order", g.order()}, {"size", g.edge_count()}, {"fnv1a64", digest(g)}};
}

Json labels_json(const Graph& g, const VertexSet& s) { return labels_of(g, s); }

Json labels_json(const Graph& g, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

std::string labels_text(const Graph& g, const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += g.label(v);
  }
  return out;
}

std::string labels_text(const Graph& g, const std::vector<Vertex>& vs) {
  return labels_text(g, VertexSet(g.order(), std::span<const Vertex>(vs)));
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

const char* route_name(SolveRoute r) {
  switch (r) {
    case SolveRoute::kComplete:
      return "complete";
    case SolveRoute::kPrime:
      return "prime";
    case SolveRoute::kDecomposition:
      return "decomposition";
  }
  return "";
}

std::string rule_name(int rule) {
  if (rule < 0) return "none";
  if (rule == 0) return "whole-interior";
  return "choice-" + std::to_string(rule);
}

Json trace_json(const Graph& g, const HullResult& r) {
  Json out = Json::array();
  for (const auto& t : r.trace) {
    Json row{{"phase", t.phase == TraceRecord::Phase::kInitial ? "initial" : "merge"},
             {"iteration", t.iteration},
             {"outer", labels_json(g, t.outer)}};
    if (t.phase == TraceRecord::Phase::kMerge) {
      Json ext = Json::array();
      Json other = Json::array();
      for (const auto& s : t.merged_extremal) ext.push_back(labels_json(g, s));
      for (const auto& s : t.merged_other) other.push_back(labels_json(g, s));
      row["merged_extremal"] = ext;
      row["merged_other"] = other;
    }
    row["merged"] = labels_json(g, t.merged);
    row["concave"] = t.concave;
    row["type"] = t.type ? Json(type_number(*t.type)) : Json(nullptr);
    row["k"] = t.concave_count;
    row["rule"] = rule_name(t.rule);
    row["chosen"] = labels_json(g, t.chosen);
    if (!t.note.empty()) row["note"] = t.note;
    out.push_back(std::move(row));
  }
  return out;
}

void trace_text(std::ostream& out, const Graph& g, const HullResult& r) {
  for (const auto& t : r.trace) {
    out << "trace: " << (t.phase == TraceRecord::Phase::kInitial ? "initial" : "merge") << ' ' << t.iteration
        << " outer {" << labels_text(g, t.outer) << "} merged {" << labels_text(g, t.merged) << "}";
    if (t.concave) out << " type " << type_number(*t.type) << " k " << t.concave_count;
    else out << " not-concave";
    out << " rule " << rule_name(t.rule) << " chosen {" << labels_text(g, t.chosen) << "}";
    if (!t.note.empty()) out << " note " << t.note;
    out << '\n';
  }
}

class Output {
 public:
  Output(std::ostream& out, const Globals& globals) : out_(out), globals_(globals) {
    start_ = std::chrono::steady_clock::now();
  }

  bool json() const { return globals_.format == "json"; }

  void emit(const std::string& command, const Graph* g, Json result, Json trace = nullptr) {
    if (!json()) return;
    Json doc{{"command", command}};
    if (g) doc["input"] = input_json(*g);
    doc["result"] = std::move(result);
    if (globals_.trace && !trace.is_null()) doc["trace"] = std::move(trace);
    if (globals_.timing) doc["timing_ms"] = elapsed_ms();
    out_ << doc.dump(2) << '\n';
  }

  void text_timing() {
    if (!json() && globals_.timing) out_ << "timing_ms: " << elapsed_ms() << '\n';
  }

  std::ostream& stream() { return out_; }

 private:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

  std::ostream& out_;
  const Globals& globals_;
  std::chrono::steady_clock::time_point start_;
};

int cmd_hull(const std::string& file, const Globals& globals, Output& o) {
  const Graph g = load_graph(file, globals);
  const HullResult r = solve(g);
  if (o.json()) {
    Json family = Json::array();
    for (const auto& b : r.family) {
      family.push_back({{"interior", labels_json(g, b.interior)},
                        {"type", type_number(b.type)},
                        {"granularity", b.granularity},
                        {"chosen", labels_json(g, b.chosen)}});
    }
    o.emit("hull", &g,
           {{"hull_number", r.hull_number},
            {"hull_set", labels_json(g, r.hull_set)},
            {"route", route_name(r.route)},
            {"family", family},
            {"extreme_vertices", labels_json(g, r.extreme_vertices)},
            {"diagnostics", r.diagnostics}},
           trace_json(g, r));
    return kOk;
  }
  auto& out = o.stream();
  out << "hull_number: " << r.hull_number << '\n';
  out << "hull_set: " << labels_text(g, r.hull_set) << '\n';
  out << "route: " << route_name(r.route) << '\n';
  for (const auto& b : r.family) {
    out << "block: " << labels_text(g, b.interior) << " | type " << type_number(b.type) << " | granularity "
        << b.granularity << " | chosen " << labels_text(g, b.chosen) << '\n';
  }
  out << "extreme: " << labels_text(g, r.extreme_vertices) << '\n';
  for (const auto& d : r.diagnostics) out << "diagnostic: " << d << '\n';
  if (globals.trace) trace_text(out, g, r);
  o.text_timing();
  return kOk;
}

int cmd_atoms(const std::string& file, const Globals& globals, Output& o) {
  const Graph g = load_graph(file, globals);
  require_connected(g, "atoms");
  const AtomDecomposition d = atoms(g);
  if (o.json()) {
    Json list = Json::array();
    for (std::size_t i = 0; i < d.atoms.size(); ++i) {
      list.push_back({{"vertices", labels_json(g, d.atoms[i].vertices)}, {"extremal", bool(d.extremal[i])}});
    }
    o.emit("atoms", &g, {{"prime", d.atoms.size() == 1}, {"atoms", list}});
    return kOk;
  }
  for (std::size_t i = 0; i < d.atoms.size(); ++i) {
    o.stream() << "atom: " << labels_text(g, d.atoms[i].vertices) << (d.extremal[i] ? " | extremal" : "") << '\n';
  }
  o.text_timing();
  return kOk;
}

int cmd_interval(const std::string& file, const std::string& x, const std::string& y, const Globals& globals,
                 Output& o) {
  const Graph g = load_graph(file, globals);
  const VertexSet iv = toll_interval(g, g.vertex(x), g.vertex(y));
  if (o.json()) {
    o.emit("interval", &g, {{"x", x}, {"y", y}, {"interval", labels_json(g, iv)}});
  } else {
    o.stream() << "interval: " << labels_text(g, iv) << '\n';
    o.text_timing();
  }
  return kOk;
}

int cmd_closure(const std::string& file, const std::string& set_text, const Globals& globals, Output& o) {
  const Graph g = load_graph(file, globals);
  require_connected(g, "closure");
  VertexSet s = g.empty_set();
  for (const auto& name : split_labels(set_text)) s.insert(g.vertex(name));
  const VertexSet once = interval_of_set(g, s);
  const VertexSet hull = toll_hull(g, s);
  if (o.json()) {
    o.emit("closure", &g,
           {{"set", labels_json(g, s)},
            {"interval", labels_json(g, once)},
            {"hull", labels_json(g, hull)},
            {"convex", hull == s},
            {"hull_set", hull == g.vertices()}});
  } else {
    o.stream() << "interval: " << labels_text(g, once) << '\n'
               << "hull: " << labels_text(g, hull) << '\n'
               << "convex: " << (hull == s ? "yes" : "no") << '\n'
               << "hull_set: " << (hull == g.vertices() ? "yes" : "no") << '\n';
    o.text_timing();
  }
  return kOk;
}

int cmd_extreme(const std::string& file, const Globals& globals, Output& o) {
  const Graph g = load_graph(file, globals);
  require_connected(g, "extreme");
  const VertexSet direct = extreme_vertices(g);
  const VertexSet via = solve(g).extreme_vertices;
  if (o.json()) {
    o.emit("extreme", &g,
           {{"extreme_vertices", labels_json(g, direct)},
            {"via_family", labels_json(g, via)},
            {"agree", direct == via}});
  } else {
    o.stream() << "extreme: " << labels_text(g, direct) << '\n'
               << "via_family: " << labels_text(g, via) << '\n';
    o.text_timing();
  }
  return direct == via ? kOk : kMismatch;
}

int cmd_enumerate(const std::string& file, std::optional<std::size_t> limit, bool compare, const Globals& globals,
                  Output& o, std::ostream& err) {
  const Graph g = load_graph(file, globals);
  require_connected(g, "enumerate");
  MinHullSetEnumerator e(g, {limit, false});
  Json sets = Json::array();
  while (auto s = e.next()) {
    if (o.json()) {
      sets.push_back(labels_json(g, *s));
    } else {
      o.stream() << Json(labels_json(g, *s)).dump() << '\n';
      o.stream().flush();
    }
  }
  const auto& st = e.stats();
  Json result{{"hull_number", e.solution().hull_number},
              {"count", st.emitted},
              {"sets", sets},
              {"stats",
               {{"rejected", st.rejected},
                {"operations", st.operations},
                {"max_delay", st.max_delay},
                {"factorized", st.factorized}}}};
  int code = kOk;
  if (compare) {
    const CompletenessReport rep = compare_with_brute_force(g);
    Json missing = Json::array();
    for (const auto& s : rep.missing) missing.push_back(labels_json(g, s));
    result["completeness"] = {{"complete", rep.complete()},
                              {"emitted", rep.emitted.size()},
                              {"brute_force", rep.brute_force.size()},
                              {"missing", missing},
                              {"unexpected", rep.unexpected.size()}};
    if (!rep.unexpected.empty()) code = kMismatch;
    if (!o.json()) {
      err << "completeness: " << (rep.complete() ? "complete" : "incomplete") << " (emitted "
          << rep.emitted.size() << ", brute force " << rep.brute_force.size() << ")\n";
    }
  }
  if (o.json()) o.emit("enumerate", &g, std::move(result));
  return code;
}

struct VerifyOutcome {
  Json report;
  std::vector<std::string> warnings;
  bool mismatch = false;
  std::string error;
  int error_code = kOk;
};

VerifyOutcome verify_graph(const Graph& g) {
  VerifyOutcome v;
  Json& rep = v.report;
  rep["order"] = g.order();
  rep["size"] = g.edge_count();
  try {
    const HullResult r = solve(g);
    const bool closure = toll_hull(g, r.hull_set) == g.vertices();
    rep["solver"] = r.hull_number;
    rep["hull_set"] = labels_json(g, r.hull_set);
    rep["closure"] = closure;
    v.mismatch |= !closure || !r.diagnostics.empty();
    if (!r.diagnostics.empty()) rep["diagnostics"] = r.diagnostics;
    const VertexSet extreme = extreme_vertices(g);
    rep["extreme_agree"] = extreme == r.extreme_vertices;
    v.mismatch |= !(extreme == r.extreme_vertices);
    if (g.order() <= oracles::kMaxHullOrder) {
      const oracles::IntervalTable table(g);
      bool intervals = true;
      for (Vertex x = 0; x < g.order(); ++x) {
        for (Vertex y = x + 1; y < g.order(); ++y) intervals = intervals && toll_interval(g, x, y) == table.interval(x, y);
      }
      const std::size_t oracle = oracles::bf_hull_number(g);
      const bool extreme_bf = oracles::bf_extreme_vertices(g) == extreme;
      rep["oracle"] = oracle;
      rep["intervals_agree"] = intervals;
      rep["extreme_oracle_agree"] = extreme_bf;
      v.mismatch |= oracle != r.hull_number || !intervals || !extreme_bf;
    } else {
      rep["oracle"] = nullptr;
      v.warnings.push_back("order " + std::to_string(g.order()) + " above " +
                           std::to_string(oracles::kMaxHullOrder) + ": hull oracle skipped");
    }
    if (g.order() <= oracles::kMaxEnumerationOrder) {
      const CompletenessReport c = compare_with_brute_force(g);
      rep["enumeration"] = {{"emitted", c.emitted.size()},
                            {"brute_force", c.brute_force.size()},
                            {"complete", c.complete()},
                            {"unexpected", c.unexpected.size()}};
      v.mismatch |= !c.unexpected.empty();
    } else {
      v.warnings.push_back("order " + std::to_string(g.order()) + " above " +
                           std::to_string(oracles::kMaxEnumerationOrder) + ": enumeration oracle skipped");
    }
  } catch (const InvariantViolation& e) {
    v.error = e.what();
    v.error_code = kInvariant;
  } catch (const GraphError& e) {
    v.error = e.what();
    v.error_code = kUserError;
  }
  rep["agree"] = !v.mismatch && v.error.empty();
  if (!v.error.empty()) rep["error"] = v.error;
  return v;
}

int cmd_verify(const std::vector<std::string>& files, std::size_t jobs, const Globals& globals, Output& o,
               std::ostream& err) {
  struct Item {
    std::string source;
    std::size_t index;
    Graph graph;
  };
  std::vector<Item> items;
  for (const auto& f : files) {
    auto graphs = load_graphs(f, globals);
    for (std::size_t i = 0; i < graphs.size(); ++i) items.push_back({f, i, std::move(graphs[i])});
  }
  std::vector<VerifyOutcome> outcomes(items.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < items.size(); i = cursor++) outcomes[i] = verify_graph(items[i].graph);
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(items.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kOk;
  std::size_t mismatches = 0;
  Json reports = Json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto& oc = outcomes[i];
    for (const auto& w : oc.warnings) err << "warning: " << items[i].source << '#' << items[i].index << ": " << w << '\n';
    if (oc.error_code != kOk) code = std::max(code, oc.error_code);
    if (oc.mismatch) {
      ++mismatches;
      if (code == kOk) code = kMismatch;
    }
    if (o.json()) {
      Json row{{"source", items[i].source}, {"index", items[i].index}};
      row.update(oc.report);
      reports.push_back(std::move(row));
      continue;
    }
    const Json& r = oc.report;
    auto& out = o.stream();
    out << items[i].source << '#' << items[i].index << ": n=" << r["order"].get<std::size_t>();
    if (!oc.error.empty()) {
      out << " error " << oc.error << '\n';
      continue;
    }
    out << " solver=" << r["solver"].get<std::size_t>() << " oracle=";
    if (r["oracle"].is_null()) out << "skipped";
    else out << r["oracle"].get<std::size_t>();
    out << " closure=" << (r["closure"].get<bool>() ? "ok" : "FAIL");
    if (r.contains("intervals_agree")) out << " intervals=" << (r["intervals_agree"].get<bool>() ? "ok" : "FAIL");
    out << " extreme=" << (r["extreme_agree"].get<bool>() ? "ok" : "FAIL");
    if (r.contains("enumeration")) {
      const Json& e = r["enumeration"];
      out << " enumeration=" << (e["unexpected"].get<std::size_t>() == 0 ? "ok" : "FAIL") << '('
          << (e["complete"].get<bool>() ? "complete" : "incomplete") << ')';
    }
    out << (oc.mismatch ? " MISMATCH" : " agree") << '\n';
  }
  if (o.json()) {
    o.emit("verify", items.size() == 1 ? &items.front().graph : nullptr,
           {{"graphs", items.size()}, {"mismatches", mismatches}, {"reports", reports}});
  } else {
    o.stream() << "verified " << items.size() << " graph(s), " << mismatches << " mismatch(es)\n";
    o.text_timing();
  }
  return code;
}

int cmd_gen(const std::string& model, std::size_t n, std::optional<double> p, std::uint64_t seed,
            const std::string& out_path, const std::string& as, const Globals& globals, Output& o) {
  (void)globals;
  const Graph g = generate(parse_model_name(model), n, p, seed);
  const GraphFormat format = parse_format_name(as);
  const std::string body = format == GraphFormat::kGraph6 ? to_graph6(g) + "\n" : to_edge_list(g);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw GraphError("cannot write " + out_path);
    f << body;
  }
  if (o.json()) {
    Json result{{"model", model}, {"n", n}, {"p", p ? Json(*p) : Json(nullptr)}, {"seed", seed},
                {"connected", is_connected(g)}};
    if (out_path.empty()) result["graph"] = body;
    else result["out"] = out_path;
    o.emit("gen", &g, std::move(result));
  } else if (out_path.empty()) {
    o.stream() << body;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toll hull number, minimum toll hull sets and toll convexity tools", "tollhull"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--input-format", globals.input_format, "Input format (auto picks graph6 for .g6 files)")
      ->check(CLI::IsMember({"auto", "edge-list", "graph6"}));
  app.add_flag("--trace", globals.trace, "Include the solver trace");
  app.add_flag("--timing", globals.timing, "Include wall-clock timing");

  std::string file;
  auto* hull = app.add_subcommand("hull", "Toll hull number and a minimum toll hull set");
  hull->add_option("file", file, "Graph file, - for stdin, or fixture:NAME")->required();
  auto* atoms_cmd = app.add_subcommand("atoms", "Clique-separator atoms with extremal flags");
  atoms_cmd->add_option("file", file)->required();
  std::string x, y, set_text;
  auto* interval = app.add_subcommand("interval", "Toll interval of two vertices");
  interval->add_option("file", file)->required();
  interval->add_option("--x", x)->required();
  interval->add_option("--y", y)->required();
  auto* closure = app.add_subcommand("closure", "Interval and hull of a vertex set");
  closure->add_option("file", file)->required();
  closure->add_option("--set", set_text, "Comma-separated labels")->required();
  auto* extreme = app.add_subcommand("extreme", "Toll extreme vertices");
  extreme->add_option("file", file)->required();
  std::optional<std::size_t> limit;
  bool compare = false;
  auto* enumerate = app.add_subcommand("enumerate", "Stream minimum toll hull sets");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--limit", limit);
  enumerate->add_flag("--compare", compare, "Report completeness against brute force");
  std::vector<std::string> files;
  std::size_t jobs = 1;
  auto* verify = app.add_subcommand("verify", "Cross-check the solver against the brute-force oracles");
  verify->add_option("files", files, "Graph files (graph6 files may hold many graphs)")->required();
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  std::string model, out_path, as = "edge-list";
  std::size_t n = 0;
  std::optional<double> p;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a random or structured graph");
  gen->add_option("--model", model)->required()->check(CLI::IsMember({"gnp", "tree", "random-tree", "complete", "cycle"}));
  gen->add_option("--n", n)->required();
  gen->add_option("--p", p)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed)->required();
  gen->add_option("--out", out_path);
  gen->add_option("--as", as, "Output graph format")->check(CLI::IsMember({"edge-list", "graph6"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  }

  Output o(out, globals);
  try {
    if (*hull) return cmd_hull(file, globals, o);
    if (*atoms_cmd) return cmd_atoms(file, globals, o);
    if (*interval) return cmd_interval(file, x, y, globals, o);
    if (*closure) return cmd_closure(file, set_text, globals, o);
    if (*extreme) return cmd_extreme(file, globals, o);
    if (*enumerate) return cmd_enumerate(file, limit, compare, globals, o, err);
    if (*verify) return cmd_verify(files, jobs, globals, o, err);
    if (*gen) return cmd_gen(model, n, p, seed, out_path, as, globals, o);
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const oracles::OracleLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  }
  return kUserError;
}

}  // namespace tollhull::cli
