#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = mahonian::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) {
    n += c == '\n' ? 1 : 0;
  }
  return n;
}

}  // namespace

TEST_CASE("help exits cleanly") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Usage:") != std::string::npos);
  CHECK(run({"poly", "--help"}).code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({"enumerate", "--n", "2", "--k", "3"}).code == 2);
  CHECK(run({"stats", "--word", "1 1 *"}).code == 2);
  CHECK(run({"stats", "--word", "1 *", "--multiset", "1 1"}).code == 2);
  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({"verify", "thm2.1", "--n-max", "99"}).code == 2);
  CHECK(run({"--format", "xml", "enumerate", "--n", "1"}).code == 2);
  CHECK(run({"--format", "dot", "enumerate", "--n", "1"}).code == 2);
  CHECK(run({"poly", "mu", "--preset", "nope", "--order", "2"}).code == 2);
}

TEST_CASE("enumerate") {
  const Result r = run({"enumerate", "--n", "3", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 18);
  CHECK(r.out.rfind("* 1 2\n", 0) == 0);
  CHECK(run({"enumerate", "--n", "2", "--k", "1"}).out == "* 1\n* 2\n1 *\n2 *\n");
  CHECK(run({"enumerate", "--n", "0"}).out == "\n");
  CHECK(run({"--format", "json", "enumerate", "--n", "1"}).out == "[1]\n");
  CHECK(run({"--format", "csv", "enumerate", "--n", "1", "--k", "1", "--as", "digraph"}).out ==
        "index,digraph\n0,-\n");
}

TEST_CASE("stats of the worked example") {
  const Result r = run({"stats", "--word", "3 2 5 * 1 8 6 *"});
  CHECK(r.code == 0);
  CHECK(r.out.find("des_set=[1,4,6]\n") != std::string::npos);
  CHECK(r.out.find("\ninv=12\n") != std::string::npos);
  CHECK(r.out.find("\nmaj=15\n") != std::string::npos);
  const Result j = run({"--format", "json", "stats", "--word", "3 2 5 * 1 8 6 *"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["inv"] == 12);
  CHECK(parsed["matrix_maj"] == 15);
  const Result m = run({"stats", "--matrix",
                        R"({"n":8,"ones":[[1,3],[2,2],[3,5],[5,1],[6,8],[7,6]]})"});
  CHECK(m.code == 0);
  CHECK(m.out.find("word=3 2 5 * 1 8 6 *\n") != std::string::npos);
}

TEST_CASE("digraph stats and dot") {
  const std::string json = R"({"n":2,"succ":{"1":2}})";
  CHECK(run({"stats", "--digraph", json}).code == 0);
  const Result dot = run({"--format", "dot", "stats", "--digraph", json});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("1 -> 2;") != std::string::npos);
  CHECK(run({"stats", "--digraph", R"({"n":2,"succ":{"1":5}})"}).code == 2);
}

TEST_CASE("poly subcommands") {
  CHECK(run({"poly", "qbinom", "--n", "3", "--k", "1"}).out == "1+q+q^2\n");
  CHECK(run({"poly", "dist", "--n", "2", "--k", "1", "--stat", "maj"}).out == "b+q+bq+q^2\n");
  CHECK(run({"poly", "hrw", "--n", "2", "--k", "0"}).out ==
        "lhs=1+q+z\nrhs=1+q+z\nequal=true\n");
  CHECK(run({"poly", "moments", "--preset", "euler", "--order", "3"}).out ==
        "mu_0=1\nmu_1=1\nmu_2=2\nmu_3=6\n");
  const Result mu = run({"poly", "mu", "--preset", "euler", "--order", "2"});
  CHECK(mu.out.find("mu[2][1]=4\n") != std::string::npos);
  const Result json = run({"--format", "json", "poly", "qbinom", "--n", "2", "--k", "1"});
  CHECK(nlohmann::json::parse(json.out)["terms"].size() == 2);
}

TEST_CASE("output does not depend on --jobs") {
  const std::vector<std::string> cmd = {"poly", "ld", "--n", "5", "--k", "2"};
  std::vector<std::string> one = {"--jobs", "1"};
  std::vector<std::string> many = {"--jobs", "7"};
  one.insert(one.end(), cmd.begin(), cmd.end());
  many.insert(many.end(), cmd.begin(), cmd.end());
  CHECK(run(one).out == run(many).out);
  CHECK(run({"--jobs", "1", "verify", "thm2.1"}).out ==
        run({"--jobs", "4", "verify", "thm2.1"}).out);
}

TEST_CASE("verify output formats") {
  const Result text = run({"verify", "table1", "zhu"});
  CHECK(text.code == 0);
  CHECK(text.out == "PASS table1 fixed cases=8\nPASS zhu n_max=5 cases=6\n2/2 passed\n");
  const Result json = run({"--format", "json", "verify", "table1"});
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed["pass"] == true);
  CHECK(parsed["reports"][0]["id"] == "table1");
  const Result csv = run({"--format", "csv", "verify", "table1"});
  CHECK(csv.out == "id,bounds,status,cases,object,lhs,rhs\ntable1,fixed,pass,8,,,\n");
  CHECK(run({"--timing", "verify", "table1"}).out.find("time=") != std::string::npos);
  const Result small = run({"verify", "thm2.1", "--n-max", "3"});
  CHECK(small.out.rfind("PASS thm2.1 n_max=3", 0) == 0);
  CHECK(run({"verify", "--list"}).out.rfind("thm2.1 n_max=6\n", 0) == 0);
}
