#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace ita;
using namespace ita::test;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Temporary KB file removed on scope exit.
struct TempFile {
  std::string path;
  explicit TempFile(std::string_view text) {
    static int counter = 0;
    path = "ita_cli_test_" + std::to_string(counter++) + ".kb";
    std::ofstream(path) << text;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("check") {
  TempFile ex1(kExample1);
  Run r = run({"check", ex1.path});
  CHECK(r.code == 1);
  CHECK(r.out == "inconsistent\n");
  r = run({"check", ex1.path, "--conflicts"});
  CHECK(r.out ==
        "inconsistent\nconflict {A(a), B(a)}\nconflict {A(a), C(a)}\nconflict {B(a), C(a)}\n");
  TempFile ok("@tbox A(X) -> B(X). @abox A(a).");
  r = run({"check", ok.path});
  CHECK(r.code == 0);
  CHECK(r.out == "consistent\n");
  TempFile cyc("@tbox p(X,Y) -> p(Y,Z). A(X), B(X) -> !. @abox p(a,b).");
  CHECK(run({"--depth", "1", "check", cyc.path}).code == 3);
  CHECK(run({"check", cyc.path, "--depth", "1"}).code == 3);
  CHECK(run({"check", cyc.path, "--depth", "1", "--json"}).out.find("\"unknown\"") !=
        std::string::npos);
}

TEST_CASE("check json") {
  TempFile ex1(kExample1);
  auto j = nlohmann::json::parse(run({"--json", "check", ex1.path, "--conflicts"}).out);
  CHECK(j["verdict"] == "inconsistent");
  CHECK(j["consistent"] == false);
  CHECK(j["conflicts"].size() == 3);
}

TEST_CASE("input errors") {
  Run r = run({"check", "does-not-exist.kb"});
  CHECK(r.code == 2);
  TempFile bad("@tbox\nA(X) -> B(X)\n@abox A(a).");
  r = run({"check", bad.path});
  CHECK(r.code == 2);
  CHECK(r.err.find(bad.path + ":3:1:") != std::string::npos);
  TempFile clash("@tbox p(X,Y) -> A(X). @abox p(a).");
  CHECK(run({"check", clash.path}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"ask", bad.path}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("modify") {
  TempFile ex1(kExample1);
  Run r = run({"modify", ex1.path, "--modifier", "CR"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "CR\n"
        "{A(a), A(b), D(a), D(b)}\n"
        "{A(b), B(a), D(a), D(b), E(a)}\n"
        "{A(b), C(a), D(a), D(b), E(a)}\n");
  Run word = run({"modify", ex1.path, "--modifier", "RMC"});
  Run rc = run({"modify", ex1.path, "--modifier", "RC"});
  CHECK(word.code == 0);
  CHECK(word.out.starts_with("RC\n"));
  CHECK(word.out == rc.out);
  r = run({"modify", ex1.path, "--modifier", "CCM"});
  CHECK(r.code == 2);
  CHECK(r.err.find("word contains no R") != std::string::npos);
  CHECK(run({"modify", ex1.path, "-m", "XR"}).code == 2);

  auto j = nlohmann::json::parse(run({"--json", "modify", ex1.path, "-m", "MCR"}).out);
  CHECK(j["modifier"] == "MCR");
  CHECK(j["aboxes"].size() == 2);
  CHECK(j["aboxes"][0][0] == "A(b)");
}

TEST_CASE("ask") {
  TempFile ex1(kExample1);
  Run r = run({"ask", ex1.path, "--query", "E(a)", "--semantics", "R:maj"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = run({"ask", ex1.path, "--query", "A(a)", "--semantics", "AR"});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");
  CHECK(run({"ask", ex1.path, "-q", "D(b)", "-s", "IAR"}).code == 0);
  CHECK(run({"ask", ex1.path, "-q", "D(b)", "-s", "XYZ"}).code == 2);
  CHECK(run({"ask", ex1.path, "-q", "D()", "-s", "AR"}).code == 2);
  auto j = nlohmann::json::parse(run({"--json", "ask", ex1.path, "-q", "D(a)", "-s", "ICR"}).out);
  CHECK(j["answer"] == "true");
  CHECK(j["semantics"] == "CR:safe");
  TempFile cyc("@tbox p(X,Y) -> p(Y,Z). @abox p(a,b).");
  CHECK(run({"--depth", "2", "ask", cyc.path, "-q", "A(a)", "-s", "AR"}).code == 3);
}

TEST_CASE("matrix") {
  TempFile ex1(kExample1);
  Run r = run({"matrix", ex1.path, "--query", "D(b)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("false") == std::string::npos);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 9);
  auto j = nlohmann::json::parse(run({"--json", "matrix", ex1.path, "-q", "A(a)"}).out);
  REQUIRE(j["rows"].size() == 8);
  CHECK(j["rows"][0]["modifier"] == "R");
  CHECK(j["rows"][0]["exist"] == "true");
  CHECK(j["rows"][0]["maj"] == "false");
  CHECK(j["rows"][5]["exist"] == "false");
}

TEST_CASE("compare") {
  CHECK(run({"compare", "--sem1", "IAR", "--sem2", "AR"}).out ==
        "strictly less productive\n");
  CHECK(run({"compare", "--sem1", "R:univ", "--sem2", "CR:univ"}).out.find("equivalent") !=
        std::string::npos);
  CHECK(run({"compare", "--sem1", "CR:maj", "--sem2", "MCR:maj"}).out.find("incomparable") !=
        std::string::npos);
  auto j = nlohmann::json::parse(run({"--json", "compare", "--sem1", "ICR", "--sem2", "ICAR"}).out);
  CHECK(j["verdict"] == "incomparable");
  j = nlohmann::json::parse(
      run({"--json", "compare", "--sem1", "ICR", "--sem2", "ICAR", "--published"}).out);
  CHECK(j["verdict"] == "strictly less productive");
  CHECK(run({"compare", "--graph", "dot"}).out.starts_with("digraph"));
  CHECK(nlohmann::json::parse(run({"compare", "--graph", "json"}).out)["nodes"].size() == 32);
  CHECK(run({"compare", "--sem1", "IAR"}).code == 2);
  CHECK(run({"compare", "--graph", "svg"}).code == 2);
}

TEST_CASE("fuzz") {
  Run r = run({"fuzz", "--seed", "0", "--trials", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations 0") != std::string::npos);
  r = run({"fuzz", "--seed", "0", "--trials", "100", "--published"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(run({"--json", "fuzz", "--trials", "20"}).out);
  CHECK(j["trials"] == 20);
  CHECK(j["violations"].empty());
}

TEST_CASE("paper-examples") {
  Run r = run({"paper-examples"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"paper-examples", "--only", "Ex6.2"});
  CHECK(r.code == 0);
  CHECK(r.out == "PASS Ex6.2\n1/1 passed\n");
  CHECK(run({"paper-examples", "--only", "Ex6.2", "--corrupt"}).code == 1);
  CHECK(run({"paper-examples", "--corrupt"}).code == 1);
  CHECK(run({"paper-examples", "--only", "nope"}).code == 2);
}

TEST_CASE("normalize") {
  CHECK(run({"normalize", "CMCR"}).out == "MCR\n");
  CHECK(run({"normalize", "RMC"}).out == "RC\n");
  CHECK(run({"normalize", "CCM"}).code == 2);
  CHECK(run({"normalize", "ABC"}).code == 2);
  auto j = nlohmann::json::parse(run({"--json", "normalize", "RR"}).out);
  CHECK(j["modifier"] == "R");
  CHECK(j["ordinal"] == 1);
}

TEST_CASE("output is deterministic") {
  TempFile ex1(kExample1);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"matrix", ex1.path, "-q", "A(a)"},
           {"--json", "matrix", ex1.path, "-q", "E(a)"},
           {"modify", ex1.path, "-m", "MRC"},
           {"--json", "modify", ex1.path, "-m", "CR"}}) {
    Run a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}
