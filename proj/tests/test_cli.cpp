#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "cmpoly/cli.hpp"
#include "cmpoly/io.hpp"

using namespace cmpoly;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cmpoly");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("cmpoly_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

const std::string kCounterexample =
    "n=6\nx1*x3\nx1*x4\nx1*x5\nx1*x6\nx2*x3\nx2*x4\nx2*x5\nx2*x6\n"
    "x3*x5\nx3*x6\nx4*x5\nx4*x6\n";

}  // namespace

TEST_CASE("invariants") {
  const Result r = run({"invariants", write_file("ce.ideal", kCounterexample)});
  CHECK(r.code == 0);
  CHECK(r.out == "n=6 h=4 unmixed=yes q=4 dim=2 depth=1 CM=no\n");

  const Result s = run({"invariants", write_file("bad.ideal", "n=4\nx1*x2\nx3*x4\n")});
  CHECK(s.code == 0);
  CHECK(s.out.find("q=none") != std::string::npos);
  CHECK(s.out.find("CM=unknown") != std::string::npos);
  CHECK(s.out.find("no linear quotients") != std::string::npos);
}

TEST_CASE("classify") {
  const Result r = run({"classify", write_file("v22.ideal", "n=2\nx1^2\nx1*x2\nx2^2\n")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("verdict=Veronese vars={1,2} d=2 h=2 q=1 ", 0) == 0);
}

TEST_CASE("check") {
  CHECK(run({"check", write_file("ce2.ideal", kCounterexample)}).out ==
        "polymatroidal=yes matroidal=yes\n");
  const Result r = run({"check", write_file("bad2.ideal", "n=4\nx1*x2\nx3*x4\n")});
  CHECK(r.code == 0);
  CHECK(r.out == "polymatroidal=no matroidal=no\nwitness: u=x1*x2 v=x3*x4 i=1\n");
}

TEST_CASE("radical output re-parses") {
  const Result r = run({"radical", write_file("rad.ideal", "n=3\nx1^2*x2\nx2^2*x3\n")});
  CHECK(r.code == 0);
  CHECK(r.out == "n=3\nx1*x2\nx2*x3\n");
  CHECK(parse_ideal(r.out) == parse_ideal("n=3\nx1*x2\nx2*x3\n"));
}

TEST_CASE("shrink") {
  const std::string f = write_file("shrink.ideal", "n=5\nx2^2\nx2*x4\nx4^2\n");
  CHECK(run({"invariants", f}).out.rfind("n=5 h=2 ", 0) == 0);
  CHECK(run({"--shrink", "invariants", f}).out.rfind("n=2 h=2 ", 0) == 0);
  CHECK(run({"radical", f, "--shrink"}).out == "n=2\nx1\nx2\n");
}

TEST_CASE("product") {
  const std::string m = write_file("m.ideal", "n=2\nx1\nx2\n");
  const Result r = run({"product", m, m});
  CHECK(r.code == 0);
  CHECK(r.out == "n=2\nx1^2\nx1*x2\nx2^2\n");
  CHECK(run({"product", m, write_file("m3.ideal", "n=3\nx1\n")}).code == kExitInputError);
}

TEST_CASE("path") {
  const std::string f = write_file("sv.ideal", "n=4\nx1*x2\nx1*x3\nx1*x4\nx2*x3\nx2*x4\nx3*x4\n");
  const Result r = run({"path", f, "--u", "x1*x2", "--v", "x3*x4", "--i", "3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "u=x1*x2 v=x3*x4 i=3\nstep 0 w=x3*x4 dist=2\nstep 1 w=x1*x3 dist=1\n"
        "terminal=x1*x3 j0=2 result=x1*x3\n");
  CHECK(run({"path", f, "--u", "x1*x2", "--v", "x3*x4", "--i", "1"}).code == kExitInputError);
  const std::string bad = write_file("bad3.ideal", "n=4\nx1*x2\nx3*x4\n");
  CHECK(run({"path", bad, "--u", "x1*x2", "--v", "x3*x4", "--i", "3"}).code ==
        kExitViolation);
}

TEST_CASE("verify and enumerate") {
  const Result r = run({"verify", "--n", "4", "--d", "2", "--cap", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("ideals=63 polymatroidal=36 violations=0\n", 0) == 0);

  const Result e = run({"enumerate", "--n", "3", "--d", "2", "--cap", "2", "--filter", "unmixed"});
  CHECK(e.code == 0);
  std::istringstream lines(e.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("index\tn\tgens", 0) == 0);
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++rows;
    CHECK(line.find("\tNotCohenMacaulay") != std::string::npos);
  }
  CHECK(rows == 15);

  const Result big = run({"verify", "--n", "9", "--d", "2", "--cap", "1"});
  CHECK(big.code == kExitInputError);
  CHECK(big.err.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("structured output matches text") {
  const std::string f = write_file("ce3.ideal", kCounterexample);
  const auto doc = nlohmann::json::parse(run({"--format", "structured", "invariants", f}).out);
  CHECK(doc["n"] == 6);
  CHECK(doc["h"] == 4);
  CHECK(doc["q"] == 4);
  CHECK(doc["dim"] == 2);
  CHECK(doc["depth"] == 1);
  CHECK(doc["unmixed"] == true);
  CHECK(doc["cm"] == false);

  const auto cls = nlohmann::json::parse(run({"classify", f, "--format", "structured"}).out);
  CHECK(cls["verdict"] == "NotCohenMacaulay");
  CHECK(cls["vars"] == nlohmann::json({1, 2, 3, 4, 5, 6}));

  const auto ver = nlohmann::json::parse(
      run({"--format", "structured", "verify", "--n", "2", "--d", "3", "--cap", "3"}).out);
  CHECK(ver["ideals"] == 15);
  CHECK(ver["violations"] == 0);
  CHECK(ver["verdicts"]["Veronese"] == 1);

  const auto rad = run({"--format", "structured", "radical", f}).out;
  CHECK(parse_ideal(rad) == parse_ideal(kCounterexample));
}

TEST_CASE("input errors exit with 2") {
  const Result missing = run({"invariants", "/nonexistent/file.ideal"});
  CHECK(missing.code == kExitInputError);
  const Result parse = run({"invariants", write_file("syntax.ideal", "n=2\nx1*x3\n")});
  CHECK(parse.code == kExitInputError);
  CHECK(parse.err.find("line 2, column 5") != std::string::npos);
  const Result zero = run({"classify", write_file("zero.ideal", "n=2\n")});
  CHECK(zero.code == kExitInputError);
  CHECK(zero.err.find("zero ideal") != std::string::npos);
  const Result mixed = run({"check", write_file("mixed.ideal", "n=2\nx1\nx2^2\n")});
  CHECK(mixed.code == kExitInputError);
  CHECK(mixed.err.find("NotEquigenerated") != std::string::npos);
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
}
