#include "g2rs/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "g2rs");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = g2rs::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"oracle", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"closed-form", "--eps", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("unfold-cosets") {
  Run r = run({"unfold-cosets"});
  CHECK(r.code == 0);
  CHECK(r.out.find("s_b s_a s_b s_a") != std::string::npos);
  CHECK(r.out.find("V^w = {a+b}") != std::string::npos);
}

TEST_CASE("closed-form prints the product formula") {
  Run r = run({"closed-form", "--eps", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(1 - b1 q^-1 X)(1 - b2 q^-1 X)") != std::string::npos);
  CHECK(r.out.find("(1 + a b1 q^-1/2 X)") != std::string::npos);
}

TEST_CASE("json output") {
  Run a = run({"verify-group", "--json", "--samples", "5"});
  Run b = run({"verify-group", "--json", "--samples", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["pass"] == true);
  for (const auto &rep : doc["sections"][0]["reports"]) CHECK(rep["pass"] == true);

  Run o1 = run({"oracle", "--points", "2", "--json"});
  Run o2 = run({"oracle", "--points", "2", "--json"});
  CHECK(o1.code == 0);
  CHECK(o1.out == o2.out);
  auto od = nlohmann::json::parse(o1.out);
  CHECK(od["sections"][0]["reports"].size() == 28);
}

TEST_CASE("verify-lemmas") {
  Run r = run({"verify-lemmas", "--nmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("inconclusive oracle runs are not passes") {
  Run r = run({"oracle", "--s", "0.6", "--points", "1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("inconclusive") != std::string::npos);
}
