#include "coplab/suites.hpp"

#include <algorithm>
#include <chrono>

#include "suite_impl.hpp"

namespace coplab {

void Property::check(bool ok, const std::string& payload) {
  ++checked;
  if (ok || !pass) {
    if (!ok) pass = false;
    return;
  }
  pass = false;
  counterexample = payload.empty() ? "case " + std::to_string(checked) : payload;
}

bool RunReport::pass() const {
  if (!error.empty()) return false;
  return std::all_of(properties.begin(), properties.end(),
                     [](const Property& p) { return p.pass; });
}

Property& RunReport::add(const std::string& name) {
  properties.emplace_back();
  properties.back().name = name;
  return properties.back();
}

const Property* RunReport::find(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

nlohmann::json RunReport::to_json(bool timing) const {
  nlohmann::json out;
  out["suite"] = suite;
  out["module"] = module;
  out["params"] = params;
  out["pass"] = pass();
  auto& props = out["properties"] = nlohmann::json::array();
  for (const auto& p : properties) {
    nlohmann::json j{{"name", p.name}, {"pass", p.pass}, {"checked", p.checked}};
    if (!p.pass) j["counterexample"] = p.counterexample;
    if (!p.detail.empty()) j["detail"] = p.detail;
    props.push_back(std::move(j));
  }
  if (!error.empty()) out["error"] = error;
  if (timing && wall_ms) out["wall_ms"] = *wall_ms;
  return out;
}

const std::vector<std::string>& module_names() {
  static const std::vector<std::string> names{
      "ground-model", "coproduct-words", "functorial-embeddings",
      "sym-witness",  "endo-witness",    "path-product",
      "rel-lab",      "lattice-lab"};
  return names;
}

const std::vector<SuiteInfo>& suite_registry() {
  using namespace suites;
  static const std::vector<SuiteInfo> registry{
      {"ground.laws", "ground-model",
       "endomap composition, permutations, block embeddings, involutions",
       ground_laws},
      {"coproduct.normal-form", "coproduct-words",
       "reduction, associativity and inverses in S3 u Z4; tensor words",
       coproduct_normal_form},
      {"functorial.separator", "functorial-embeddings",
       "separators, free tuples, codes, cuts, min monoid, Eq products",
       functorial_separator},
      {"sym.exhaustive", "sym-witness",
       "distinguish() on all pool words up to --depth plus --n random pairs",
       sym_exhaustive},
      {"endo.random", "endo-witness",
       "endo witness on --n random tensor elements", endo_random},
      {"endo.vandermonde", "endo-witness",
       "Vandermonde ranks up to --n, row multiplicativity, idempotents",
       endo_vandermonde},
      {"path.product", "path-product",
       "action cases and laws, phi_j, faithfulness over S3 u S3, control",
       path_product},
      {"rel.two-class", "rel-lab",
       "two-class partition identities and the solution-set chain",
       rel_two_class},
      {"rel.theta", "rel-lab",
       "theta homomorphism on Rel(2) and random Rel(3), counterexample",
       rel_theta},
      {"rel.embeddings", "rel-lab",
       "composition laws, embeddings, factorization, double witness",
       rel_embeddings},
      {"rel.gzz", "rel-lab",
       "gzz monoids, Cayley embedding, Eq meet into Se", rel_gzz},
      {"lattice.eq-size", "lattice-lab",
       "|Eq(n)|, partition operations vs oracle, maximal chain jumps",
       lattice_eq_size},
      {"lattice.centralizer", "lattice-lab",
       "centralizer lattices and the chain in (S3)^n", lattice_centralizer},
      {"lattice.debruijn", "lattice-lab",
       "transposition family orders, collapse, meet/join families",
       lattice_debruijn},
      {"lattice.solutions", "lattice-lab",
       "solution sets, their lattice, eqprod chain, lower solution sets",
       lattice_solutions},
      {"lattice.completeness", "lattice-lab",
       "generator/embedding maps, downsets, antichains, jump model",
       lattice_completeness},
  };
  return registry;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suite_registry()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

RunReport run_suite(const std::string& name, const Params& params) {
  const SuiteInfo* info = find_suite(name);
  if (!info) throw UnknownSuite("unknown suite '" + name + "'");
  auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  try {
    report = info->run(params);
  } catch (const std::exception& e) {
    report = RunReport{};
    report.error = e.what();
    if (params.n) report.params["n"] = *params.n;
    if (params.depth) report.params["depth"] = *params.depth;
    if (params.bound) report.params["bound"] = *params.bound;
    report.params["seed"] = params.seed;
  }
  report.suite = info->name;
  report.module = info->module;
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

}  // namespace coplab
