#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hgpd/cli.hpp"

using hgpd::dispatch;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count and poly") {
  CHECK(run({"count", "--m", "4", "--n", "5", "--beta", "WWWW", "--pi", "1,2,5,3"}).out == "78\n");
  CHECK(run({"count", "--m", "3", "--n", "3", "--beta", "EWE", "--pi", "3,1,2"}).out == "2\n");
  Run p = run({"poly", "--m", "1", "--n", "1", "--beta", "W", "--pi", "1"});
  CHECK(p.code == hgpd::kExitOk);
  CHECK(p.out == "A + B\n");
  CHECK(run({"schubert", "--m", "3", "--n", "3", "--pi", "3,1,2"}).out == "x1^2 - x1*y1 - x1*y2 + y1*y2\n");
}

TEST_CASE("poly is the same for every hybridization") {
  std::string first;
  for (const char* beta : {"WWW", "WEW", "EEW", "EEE"}) {
    Run r = run({"poly", "--m", "3", "--n", "3", "--beta", beta, "--pi", "2,3,1"});
    CHECK(r.code == 0);
    if (first.empty()) first = r.out;
    CHECK(r.out == first);
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == hgpd::kExitUsage);
  CHECK(run({"frobnicate"}).code == hgpd::kExitUsage);
  CHECK(run({"count", "--m", "2", "--n", "2", "--beta", "WZ"}).code == hgpd::kExitUsage);
  CHECK(run({"count", "--m", "2", "--n", "2", "--pi", "1,1"}).code == hgpd::kExitUsage);
  CHECK(run({"count", "--m", "3", "--n", "2"}).code == hgpd::kExitUsage);
  CHECK(run({"count", "--m", "2", "--n", "2", "--format", "xml"}).code == hgpd::kExitUsage);
  CHECK(run({"verify", "nonsense", "--m", "2", "--n", "2"}).code == hgpd::kExitUsage);
  Run big = run({"enumerate", "--m", "6", "--n", "6"});
  CHECK(big.code == hgpd::kExitUsage);
  CHECK(big.err.find("max-work") != std::string::npos);
}

TEST_CASE("enumerate output is deterministic") {
  std::vector<std::string> args = {"enumerate", "--m", "2", "--n", "3", "--beta", "EW"};
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"enumerate", "--m", "2", "--n", "2", "--beta", "WE", "--pi", "1,2"}).out ==
        "2 2\nWE\nbn\nn-\n\n2 2\nWE\nn|\n.n\n");
}

TEST_CASE("verify prints one line per check") {
  Run r = run({"verify", "all", "--m", "2", "--n", "3"});
  CHECK(r.code == hgpd::kExitOk);
  for (const char* name : {"beta-independence", "recurrence", "leading-form", "mirror", "ybe-ww", "ybe-we",
                           "flux-conservation", "flux-round-trip", "crossing-flip"}) {
    CHECK(r.out.find(std::string("PASS ") + name) != std::string::npos);
  }
  CHECK(r.out.find("FAIL") == std::string::npos);
  Run single = run({"verify", "ybe", "--mode", "ww"});
  CHECK(single.code == 0);
  CHECK(single.out.find("ybe-we") == std::string::npos);
}

TEST_CASE("jobs do not change output") {
  Run a = run({"verify", "all", "--m", "2", "--n", "3", "--jobs", "1"});
  Run b = run({"verify", "all", "--m", "2", "--n", "3", "--jobs", "3"});
  CHECK(a.out == b.out);
}

TEST_CASE("json output") {
  Run r = run({"count", "--m", "3", "--n", "3", "--beta", "EWE", "--pi", "3,1,2", "--format", "json"});
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["count"] == 2);
  CHECK(doc["beta"] == "EWE");
  Run v = run({"verify", "flip", "--m", "1", "--n", "3", "--format", "json"});
  auto vd = nlohmann::json::parse(v.out);
  CHECK(vd["passed"] == true);
  CHECK(vd["checks"][0]["name"] == "crossing-flip");
}

TEST_CASE("flux subcommand") {
  Run r = run({"flux", "--m", "2", "--n", "2", "--beta", "WE", "--zero", "x21,x12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 2\nWE\nn|\n.n\n") != std::string::npos);
  Run s = run({"flux", "--m", "2", "--n", "2", "--beta", "WE", "--zero", "y22", "--rewrite", "12>21"});
  CHECK(s.out.find("2 2\nWE\nbn\nn-\n") != std::string::npos);
  CHECK(run({"flux", "--m", "2", "--n", "2", "--zero", "q1"}).code == hgpd::kExitUsage);
}

TEST_CASE("out flag writes a file") {
  std::string path = "hgpd_cli_test_out.txt";
  Run r = run({"poly", "--m", "1", "--n", "1", "--pi", "1", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "A + B");
  std::remove(path.c_str());
}
