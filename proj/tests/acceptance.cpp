// Acceptance gate: one PASS/FAIL line per criterion, each under its time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "coplab/suites.hpp"

using namespace coplab;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void need(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    note += (note.empty() ? "" : "; ") + what;
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_ms;
  std::function<void(Outcome&)> run;
};

RunReport run(const std::string& suite, std::optional<std::uint64_t> n = {},
              std::optional<std::uint64_t> depth = {},
              std::optional<std::uint64_t> bound = {}) {
  Params p;
  p.n = n;
  p.depth = depth;
  p.bound = bound;
  return run_suite(suite, p);
}

// The named properties pass; `at_least` pins the number of cases.
void require(Outcome& o, const RunReport& r,
             std::initializer_list<std::pair<const char*, std::uint64_t>> props) {
  o.need(r.error.empty(), r.suite + ": " + r.error);
  for (const auto& [name, at_least] : props) {
    const Property* p = r.find(name);
    if (!p) {
      o.need(false, r.suite + ": no property " + name);
      continue;
    }
    o.need(p->pass, r.suite + "/" + name + " failed: " + p->counterexample);
    o.need(p->checked >= at_least, r.suite + "/" + name + " checked " +
                                       std::to_string(p->checked) + " < " +
                                       std::to_string(at_least));
  }
}

std::uint64_t detail_u64(const RunReport& r, const char* prop, const char* key) {
  const Property* p = r.find(prop);
  if (!p || !p->detail.contains(key)) return 0;
  return p->detail[key].get<std::uint64_t>();
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "coproduct normal form", 1000,
       [](Outcome& o) {
         auto r = run("coproduct.normal-form", 1000, {}, 4);
         require(o, r, {{"reduce-idempotent", 1000},
                        {"multiply-associative", 1000},
                        {"group-inverse", 1000}});
       }},
      {2, "sym witness, exhaustive and random", 10000,
       [](Outcome& o) {
         auto r = run("sym.exhaustive", 500, 3, 6);
         std::uint64_t words = detail_u64(r, "exhaustive-separated", "words");
         std::uint64_t pairs = words * (words - 1) / 2;
         o.need(words == 16841, "word count " + std::to_string(words));
         require(o, r, {{"exhaustive-separated", pairs},
                        {"exhaustive-top-level", pairs},
                        {"random-valid", 500}});
       }},
      {3, "endo witness on random tensors", 30000,
       [](Outcome& o) {
         auto r = run("endo.random", 200, {}, 3);
         require(o, r, {{"certified", 200}, {"t-involution", 200}, {"target-level", 200}});
       }},
      {4, "Vandermonde ranks and rows", 1000,
       [](Outcome& o) {
         auto r = run("endo.vandermonde", 8);
         require(o, r, {{"rank-equals-k", 8}, {"row-multiplicative", 8}});
       }},
      {5, "path product", 30000,
       [](Outcome& o) {
         auto r = run("path.product", {}, 2, 4);
         require(o, r, {{"four-cases", 1},
                        {"action-laws", 1},
                        {"phi-round-trip", 1},
                        {"faithful-witness", 1},
                        {"non-cancellative-control", 1}});
         std::uint64_t words = detail_u64(r, "faithful-witness", "words");
         const Property* f = r.find("faithful-witness");
         o.need(f && f->checked == words * (words - 1) / 2, "faithful-witness not exhaustive");
       }},
      {6, "two-class relation identities", 5000,
       [](Outcome& o) {
         auto r4 = run("rel.two-class", 4);
         o.need(detail_u64(r4, "partition-count", "partitions") == 7, "n=4 partitions");
         require(o, r4, {{"triple-identity", 42}, {"idempotent-not-full", 7}});
         const Property* t = r4.find("triple-identity");
         o.need(t && t->checked == 42, "n=4 ordered pairs");
         for (std::uint64_t n : {3, 5}) {
           require(o, run("rel.two-class", n), {{"triple-identity", 1}, {"idempotent-not-full", 1}});
         }
       }},
      {7, "theta map", 10000,
       [](Outcome& o) {
         auto r = run("rel.theta", 200);
         require(o, r, {{"homomorphism-rel2", 256},
                        {"homomorphism-rel3", 200},
                        {"diagonal-counterexample", 1},
                        {"declawed-cure", 1}});
       }},
      {8, "lattice counts and chains", 60000,
       [](Outcome& o) {
         auto eq = run("lattice.eq-size", 5);
         require(o, eq, {{"eq-size", 1}, {"maximal-chain-jumps", 5}});
         o.need(detail_u64(run("lattice.eq-size", 4), "eq-size", "elements") == 15, "|Eq(4)|");
         auto c = run("lattice.centralizer", 5);
         require(o, c, {{"s3-centralizers", 1}, {"cmxcm-chain", 1}});
         o.need(detail_u64(c, "s3-centralizers", "elements") == 6, "S3 centralizers");
         o.need(detail_u64(c, "cmxcm-chain", "jumps") == 5, "cmxcm jumps");
         require(o, run("lattice.debruijn", 4),
                 {{"orders", 1}, {"full-product-cycle", 1}, {"gcd-collapse", 1}});
       }},
      {9, "completeness maps", 10000,
       [](Outcome& o) {
         auto r = run("lattice.completeness", 50, {}, 8);
         require(o, r, {{"generator-round-trip", 100},
                        {"embedding-isomorphism", 100},
                        {"downset-embedding", 50},
                        {"antichain", 4}});
       }},
      {10, "gzz, Cayley, Eq meet into Se", 5000,
       [](Outcome& o) {
         auto r = run("rel.gzz", {}, {}, 3);
         require(o, r, {{"gzz-associative", 64 + 512 + 2744},
                        {"gzz-rules", 1},
                        {"cayley-faithful", 3},
                        {"eq-meet-to-se", 64}});
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    o.need(ms < c.limit_ms, "over the time limit");
    if (!o.ok) ++failures;
    std::printf("criterion %2d %-38s %s  %9.1f ms / %.0f ms%s%s\n", c.id, c.title,
                o.ok ? "PASS" : "FAIL", ms, c.limit_ms, o.note.empty() ? "" : "  ",
                o.note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
