#include <set>

#include <doctest.h>

#include "coplab/suites.hpp"

using namespace coplab;

namespace {

// Small sizes for the two expensive suites.
Params quick(const std::string& suite, std::uint64_t seed) {
  Params p;
  p.seed = seed;
  if (suite == "sym.exhaustive") {
    p.depth = 2;
    p.n = 50;
  }
  if (suite == "path.product") p.bound = 2;
  return p;
}

}  // namespace

TEST_CASE("every module owns a suite") {
  std::set<std::string> covered;
  for (const auto& s : suite_registry()) covered.insert(s.module);
  for (const auto& m : module_names()) CHECK_MESSAGE(covered.count(m), m);
  std::set<std::string> names;
  for (const auto& s : suite_registry()) CHECK(names.insert(s.name).second);
}

TEST_CASE("unknown suites are rejected") {
  CHECK(find_suite("nope") == nullptr);
  CHECK_THROWS_AS(run_suite("nope", {}), UnknownSuite);
}

TEST_CASE("every suite passes at small sizes") {
  for (const auto& s : suite_registry()) {
    RunReport r = run_suite(s.name, quick(s.name, 1));
    CHECK_MESSAGE(r.pass(), r.to_json().dump());
    CHECK(r.suite == s.name);
    CHECK(r.module == s.module);
    CHECK_FALSE(r.properties.empty());
    for (const auto& p : r.properties) CHECK_MESSAGE(p.checked > 0, (s.name + " " + p.name));
  }
}

TEST_CASE("same seed gives byte-identical reports") {
  for (const auto& s : suite_registry()) {
    std::string a = run_suite(s.name, quick(s.name, 9)).to_json().dump();
    std::string b = run_suite(s.name, quick(s.name, 9)).to_json().dump();
    CHECK_MESSAGE(a == b, s.name);
  }
}

TEST_CASE("report schema") {
  RunReport r;
  r.suite = "x";
  r.module = "m";
  r.wall_ms = 1.5;
  auto& ok = r.add("ok");
  ok.check(true);
  auto& bad = r.add("bad");
  bad.check(true);
  bad.check(false, "{(0,1)}");
  bad.check(false, "later");
  CHECK_FALSE(r.pass());
  auto j = r.to_json();
  CHECK(j["pass"] == false);
  CHECK_FALSE(j.contains("wall_ms"));
  CHECK(r.to_json(true)["wall_ms"] == 1.5);
  CHECK(j["properties"][0].contains("counterexample") == false);
  CHECK(j["properties"][1]["counterexample"] == "{(0,1)}");
  CHECK(j["properties"][1]["checked"] == 3);
  CHECK(r.find("bad") == &bad);
}

TEST_CASE("suite exceptions are reported, not thrown") {
  Params p;
  p.n = 1;
  p.bound = 0;  // no lattice has at most 0 elements
  RunReport r = run_suite("lattice.completeness", p);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.error.empty());
  CHECK(r.params["bound"] == 0);
  CHECK(r.params["n"] == 1);
}
