#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "support/fixtures.hpp"

using nlohmann::json;

namespace {

constexpr const char* kFigure1 = "1 2 3 5 6\n1 2 4 7 8\n1 2 3 4 9\n";

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cliquecover::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count subcommand") {
  const auto r = run_cli({"count", "-r", "3"}, kFigure1);
  CHECK(r.code == 0);
  CHECK(r.out == "{\"count\":\"28\",\"r\":3}\n");

  CHECK(run_cli({"count", "--all"}, kFigure1).out == "{\"count\":\"79\",\"mode\":\"all\"}\n");
  CHECK(run_cli({"count", "--nontrivial"}, kFigure1).out ==
        "{\"count\":\"46\",\"mode\":\"nontrivial\"}\n");
  CHECK(run_cli({"count", "--edges"}, kFigure1).out ==
        "{\"count\":\"24\",\"mode\":\"edges\"}\n");
}

TEST_CASE("clique-number subcommand") {
  const auto r = run_cli({"clique-number"}, "1 2 3 4 5\n");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"clique_number\":5}\n");
}

TEST_CASE("gamma subcommand lists cells with display names") {
  const auto r = run_cli({"--names", "A,B,C", "gamma"}, kFigure1);
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["cells"].size() == 6);
  CHECK(doc["cells"][0] == json::parse(R"({"J":["A"],"gamma":2,"nodes":["5","6"]})"));
  CHECK(doc["cells"][3] == json::parse(R"({"J":["A","C"],"gamma":1,"nodes":["3"]})"));
  CHECK(doc["cells"][5] == json::parse(R"({"J":["A","B","C"],"gamma":2,"nodes":["1","2"]})"));
}

TEST_CASE("quotient subcommand formats") {
  const auto csv = run_cli({"--names", "A,B,C", "quotient", "--format", "csv"}, kFigure1);
  CHECK(csv.code == 0);
  CHECK(csv.out.substr(0, csv.out.find('\n')) == "A,B,C,AC,BC,ABC");

  const auto dot = run_cli({"quotient", "--format", "dot"}, kFigure1);
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph") != std::string::npos);

  const auto js = run_cli({"quotient"}, kFigure1);
  const json doc = json::parse(js.out);
  CHECK(doc["B"][5] == json::parse("[2,2,1,1,1,1]"));
}

TEST_CASE("maximal subcommand orders by size then labels") {
  const auto r = run_cli({"maximal"}, kFigure1);
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["maximal_cliques"].size() == 3);
  CHECK(doc["maximal_cliques"][0]["nodes"] == json::parse(R"(["1","2","3","4","9"])"));
  CHECK(doc["maximal_cliques"][1]["nodes"] == json::parse(R"(["1","2","3","5","6"])"));
  CHECK(doc["maximal_cliques"][2]["nodes"] == json::parse(R"(["1","2","4","7","8"])"));
  CHECK(doc["maximal_cliques"][1]["support"] ==
        json::parse(R"([["1"],["1","3"],["1","2","3"]])"));
}

TEST_CASE("containing and extent subcommands") {
  CHECK(run_cli({"containing", "--nodes", "1,2"}, kFigure1).out ==
        "{\"count\":\"20\",\"nodes\":[\"1\",\"2\"]}\n");
  CHECK(run_cli({"extent", "--nodes", "5,6"}, kFigure1).out ==
        "{\"extent\":[\"1\",\"2\",\"3\",\"5\",\"6\"],\"nodes\":[\"5\",\"6\"]}\n");
  const auto r = run_cli({"extent", "--nodes", "1,2"}, kFigure1);
  CHECK(json::parse(r.out)["extent"].size() == 9);
}

TEST_CASE("gf and connected subcommands") {
  CHECK(json::parse(run_cli({"gf"}, kFigure1).out)["coefficients"] ==
        json::parse(R"(["0","9","24","28","15","3"])"));
  CHECK(json::parse(run_cli({"connected", "--gf"}, kFigure1).out)["coefficients"] ==
        json::parse(R"(["0","9","24","60","103","115","82","36","9","1"])"));
  CHECK(run_cli({"connected"}, kFigure1).out == "{\"connected_signatures\":\"179\"}\n");
}

TEST_CASE("families subcommand is standalone") {
  const auto r = run_cli({"families", "--maximal", "-m", "3"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["count"] == 4);
  CHECK(doc["families"].size() == 4);
  CHECK(run_cli({"families", "-m", "3"}).code == 2);  // --maximal required
  CHECK(run_cli({"families", "--maximal", "-m", "9"}).code == 2);  // over the cap
}

TEST_CASE("verify subcommand exits zero on success") {
  const auto r = run_cli({"verify", "--seed", "7", "--instances", "5"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["all_pass"] == true);
  CHECK(doc["seed"] == 7);
  CHECK(doc["instances"] == 5);
}

TEST_CASE("file and json input") {
  const std::string path = "cli_input_test.cliques";
  {
    std::ofstream f(path);
    f << kFigure1;
  }
  CHECK(run_cli({"--input", path, "count", "-r", "5"}).out == "{\"count\":\"3\",\"r\":5}\n");
  std::remove(path.c_str());

  CHECK(run_cli({"--format", "json", "count", "-r", "2"},
                R"({"cliques": [["1","2","3"], ["2","3","4"]]})")
            .out == "{\"count\":\"5\",\"r\":2}\n");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({}, kFigure1).code == 2);                                  // no subcommand
  CHECK(run_cli({"count"}, kFigure1).code == 2);                           // no mode
  CHECK(run_cli({"count", "-r", "3", "--all"}, kFigure1).code == 2);       // two modes
  CHECK(run_cli({"nonsense"}, kFigure1).code == 2);                        // bad subcommand
  CHECK(run_cli({"--names", "A,B", "gamma"}, kFigure1).code == 2);         // name count
  CHECK(run_cli({"--input", "missing.cliques", "gamma"}).code == 2);       // bad path
  CHECK(run_cli({"containing", "--nodes", "1,99"}, kFigure1).code == 2);   // bad label
  CHECK(run_cli({"count", "-r", "3"}, "").code == 2);                      // empty input
  CHECK(run_cli({"--max-cliques", "2", "gamma"}, kFigure1).code == 2);     // cap lowered
  const auto r = run_cli({"--max-cliques", "2", "gamma"}, kFigure1);
  CHECK(r.err.find("capped") != std::string::npos);
}

TEST_CASE("help exits zero") {
  const auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("gamma") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  const auto a = run_cli({"--names", "A,B,C", "gamma"}, kFigure1);
  const auto b = run_cli({"--names", "A,B,C", "gamma"}, kFigure1);
  CHECK(a.out == b.out);
  const auto v1 = run_cli({"verify", "--seed", "3", "--instances", "5"});
  const auto v2 = run_cli({"verify", "--seed", "3", "--instances", "5"});
  CHECK(v1.out == v2.out);
}
