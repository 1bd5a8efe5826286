#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "tollhull/generators.hpp"
#include "tollhull/io.hpp"

using namespace tollhull;
using Json = nlohmann::json;

namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Invocation r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("tollhull_cli_" + name);
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("hull on a fixture in both formats") {
    const Invocation text = invoke({"hull", "fixture:G12"});
    CHECK(text.code == cli::kOk);
    CHECK(text.out.find("hull_number: 4") != std::string::npos);

    const Invocation json = invoke({"--format", "json", "hull", "fixture:G12"});
    REQUIRE(json.code == cli::kOk);
    const Json doc = Json::parse(json.out);
    CHECK(doc["command"] == "hull");
    CHECK(doc["input"]["order"] == 12);
    CHECK(doc["input"]["size"] == 26);
    CHECK(doc["result"]["hull_number"] == 4);
    CHECK(doc["result"]["hull_set"] == Json::array({"v1", "v2", "v3", "v11"}));
    CHECK(doc["result"]["family"].size() == 2);
    CHECK_FALSE(doc.contains("trace"));
    CHECK_FALSE(doc.contains("timing_ms"));
  }

  TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"--format", "json", "--trace", "hull", "fixture:THETA7"};
    const Invocation a = invoke(args);
    const Invocation b = invoke(args);
    CHECK(a.out == b.out);
    const Json doc = Json::parse(a.out);
    CHECK(doc["trace"].is_array());
    CHECK(doc["trace"].back()["phase"] == "merge");
    const Json timed = Json::parse(invoke({"--format", "json", "--timing", "hull", "fixture:K4"}).out);
    CHECK(timed.contains("timing_ms"));
  }

  TEST_CASE("interval, closure, atoms and extreme") {
    const Json iv = Json::parse(invoke({"--format", "json", "interval", "fixture:STAR3", "--x", "x", "--y", "y"}).out);
    CHECK(iv["result"]["interval"] == Json::array({"c", "x", "y"}));
    const Json cl = Json::parse(invoke({"--format", "json", "closure", "fixture:G12", "--set", "v1,v2,v3,v11"}).out);
    CHECK(cl["result"]["hull_set"] == true);
    CHECK(cl["result"]["convex"] == false);
    const Json at = Json::parse(invoke({"--format", "json", "atoms", "fixture:G12"}).out);
    CHECK(at["result"]["atoms"].size() == 4);
    CHECK(at["result"]["prime"] == false);
    const Invocation ex = invoke({"--format", "json", "extreme", "fixture:G12"});
    CHECK(ex.code == cli::kOk);
    CHECK(Json::parse(ex.out)["result"]["agree"] == true);
  }

  TEST_CASE("enumerate streams one set per line") {
    const Invocation r = invoke({"enumerate", "fixture:THETA7", "--compare"});
    CHECK(r.code == cli::kOk);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
      const Json set = Json::parse(line);
      CHECK(set.size() == 2);
      ++count;
    }
    CHECK(count >= 1);
    CHECK(r.err.find("completeness") != std::string::npos);
    const Json limited = Json::parse(invoke({"--format", "json", "enumerate", "fixture:G12", "--limit", "1"}).out);
    CHECK(limited["result"]["count"] == 1);
  }

  TEST_CASE("files, graph6 input and stdin") {
    const auto edges = scratch("theta.txt", to_edge_list(named_fixture("THETA7")));
    const Invocation r = invoke({"--format", "json", "hull", edges.string()});
    CHECK(r.code == cli::kOk);
    CHECK(Json::parse(r.out)["result"]["hull_number"] == 2);

    const auto g6 = scratch("pair.g6", to_graph6(named_fixture("C5")) + "\n" + to_graph6(complete_graph(3)) + "\n");
    const Invocation v = invoke({"--format", "json", "verify", g6.string()});
    CHECK(v.code == cli::kOk);
    const Json doc = Json::parse(v.out);
    CHECK(doc["result"]["graphs"] == 2);
    CHECK(doc["result"]["mismatches"] == 0);

    std::istringstream in("a b\nb c\nc a\n");
    auto* saved = std::cin.rdbuf(in.rdbuf());
    const Invocation s = invoke({"--format", "json", "hull", "-"});
    std::cin.rdbuf(saved);
    CHECK(s.code == cli::kOk);
    CHECK(Json::parse(s.out)["result"]["hull_number"] == 3);
    std::filesystem::remove(edges);
    std::filesystem::remove(g6);
  }

  TEST_CASE("verify reports on a fixture") {
    const Invocation r = invoke({"verify", "fixture:THETA7"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("solver=2 oracle=2") != std::string::npos);
  }

  TEST_CASE("gen") {
    const Invocation a = invoke({"gen", "--model", "gnp", "--n", "12", "--p", "0.3", "--seed", "7"});
    const Invocation b = invoke({"gen", "--model", "gnp", "--n", "12", "--p", "0.3", "--seed", "7"});
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    const Json tree = Json::parse(invoke({"--format", "json", "gen", "--model", "tree", "--n", "9", "--seed", "1"}).out);
    CHECK(tree["result"]["connected"] == true);
    CHECK(parse_edge_list(tree["result"]["graph"].get<std::string>()).edge_count() == 8);
  }

  TEST_CASE("user errors exit with 1") {
    CHECK(invoke({}).code == cli::kUserError);
    CHECK(invoke({"hull"}).code == cli::kUserError);
    CHECK(invoke({"hull", "/nonexistent/graph.txt"}).code == cli::kUserError);
    CHECK(invoke({"hull", "fixture:NOPE"}).code == cli::kUserError);
    CHECK(invoke({"--format", "xml", "hull", "fixture:K4"}).code == cli::kUserError);
    CHECK(invoke({"interval", "fixture:K4", "--x", "a", "--y", "zz"}).code == cli::kUserError);
    const auto split = scratch("split.txt", "a b\nc d\n");
    const Invocation r = invoke({"hull", split.string()});
    CHECK(r.code == cli::kUserError);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(invoke({"verify", split.string()}).code != cli::kOk);
    std::filesystem::remove(split);
    const auto big = scratch("big.txt", to_edge_list(generate(GraphModel::kGnp, 14, 0.5, 3)));
    CHECK(invoke({"enumerate", big.string(), "--compare"}).code == cli::kUserError);
    std::filesystem::remove(big);
  }

  TEST_CASE("help exits cleanly") {
    const Invocation r = invoke({"--help"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("hull") != std::string::npos);
  }
}
