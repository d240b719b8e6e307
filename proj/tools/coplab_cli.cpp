#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coplab/endo_witness.hpp"
#include "coplab/lattice.hpp"
#include "coplab/path_product.hpp"
#include "coplab/suites.hpp"
#include "coplab/sym_witness.hpp"

using namespace coplab;
using nlohmann::json;

namespace {

constexpr int kFail = 1;
constexpr int kError = 2;

// Human-readable output; moves to stderr when the JSON goes to stdout.
std::ostream* g_text = &std::cout;
std::ostream& text() { return *g_text; }

json level_json(const LevelPoint& x) { return json::array({x.p, x.k}); }

json trace_json(const std::vector<LevelPoint>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(level_json(x));
  return out;
}

// "-" is stdout.
void emit_json(const std::string& path, const json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void print_report(const RunReport& r, bool timing) {
  text() << r.suite << " [" << r.module << "] " << (r.pass() ? "PASS" : "FAIL");
  if (timing && r.wall_ms) text() << " " << *r.wall_ms << " ms";
  text() << "\n";
  if (!r.error.empty()) text() << "  error: " << r.error << "\n";
  for (const auto& p : r.properties) {
    text() << "  " << (p.pass ? "ok   " : "FAIL ") << p.name << " (" << p.checked
              << " checked)";
    if (!p.detail.empty()) text() << " " << p.detail.dump();
    text() << "\n";
    if (!p.pass) text() << "       counterexample: " << p.counterexample << "\n";
  }
}

struct RunOptions {
  Params params;
  std::string json_path;
  bool timing = false;
};

void add_param_flags(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--n", o.params.n, "size or sample count");
  cmd->add_option("--depth", o.params.depth, "depth");
  cmd->add_option("--bound", o.params.bound, "length or size bound");
  cmd->add_option("--seed", o.params.seed, "random seed")->capture_default_str();
  cmd->add_option("--json", o.json_path, "write the JSON report here ('-' for stdout)");
  cmd->add_flag("--timing", o.timing, "include wall time");
}

std::vector<std::string> suite_names(const std::string& prefix = {}) {
  std::vector<std::string> out;
  for (const auto& s : suite_registry()) {
    if (s.name.rfind(prefix, 0) == 0) out.push_back(s.name.substr(prefix.size()));
  }
  return out;
}

json lattice_json(const FinLattice& lat, const std::vector<Bits>* sets) {
  json elems = json::array();
  for (std::size_t x = 0; x < lat.size(); ++x) {
    elems.push_back(sets ? to_string((*sets)[x]) : lat.name(x));
  }
  json covers = json::array();
  for (const auto& [a, b] : lat.covering_pairs()) covers.push_back({a, b});
  return {{"elements", elems}, {"covers", covers}};
}

// The lattice a lattice suite is built around, when there is a single one.
std::optional<json> suite_lattice(const std::string& suite, const Params& p) {
  if (suite == "eq-size") {
    auto n = static_cast<std::uint32_t>(std::clamp<std::uint64_t>(p.n.value_or(4), 1, 6));
    return lattice_json(FinLattice::partition_lattice(n), nullptr);
  }
  if (suite == "centralizer") {
    auto sl = centralizer_lattice(FiniteMonoid::symmetric_group(3));
    return lattice_json(sl.lattice, &sl.sets);
  }
  if (suite == "solutions") {
    auto sl = solution_lattice(FiniteMonoid::symmetric_group(3), 1, p.bound.value_or(4));
    return lattice_json(sl.lattice, &sl.sets);
  }
  if (suite == "completeness") {
    Rng rng(p.seed);
    auto sl = random_closure_lattice(rng, 4, p.bound.value_or(8));
    return lattice_json(sl.lattice, &sl.sets);
  }
  return std::nullopt;
}

int run_and_report(const std::string& suite, const RunOptions& o,
                   const std::optional<json>& extra = std::nullopt) {
  RunReport r = run_suite(suite, o.params);
  print_report(r, o.timing);
  if (extra) text() << "lattice: " << extra->dump() << "\n";
  if (!o.json_path.empty()) {
    json j = r.to_json(o.timing);
    if (extra) j["lattice"] = *extra;
    emit_json(o.json_path, j);
  }
  return r.pass() ? 0 : kFail;
}

// "S3", "Z4": symmetric or cyclic group acting on its natural points.
MSet parse_factor(const std::string& spec) {
  if (spec.size() < 2 || (spec[0] != 'S' && spec[0] != 'Z')) {
    throw std::invalid_argument("factor '" + spec + "': expected S<n> or Z<n>");
  }
  auto n = static_cast<Point>(std::stoul(spec.substr(1)));
  if (n < 1 || n > 6) throw std::invalid_argument("factor '" + spec + "': n in 1..6");
  if (spec[0] == 'S') return MSet::natural(FiniteMonoid::symmetric_group(n));
  std::vector<Point> rot(n);
  for (Point i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return MSet::natural(FiniteMonoid::transformation_monoid(n, {rot}));
}

int witness_sym(const std::string& gtext, const std::string& htext,
                const std::string& json_path) {
  auto cop = endo_coproduct();
  EndoWord g = cop.parse(gtext), h = cop.parse(htext);
  SymWitness w = distinguish(g, h);
  text() << "g = " << cop.format(g) << "\nh = " << cop.format(h) << "\n";
  text() << "swapped: " << (w.swapped ? "yes" : "no") << "\npoints:";
  for (auto p : w.points) text() << " " << p;
  text() << "\nt:";
  for (const auto& [a, b] : w.t.pairs()) {
    text() << " " << to_string(a) << "<->" << to_string(b);
  }
  auto print_trace = [](const char* label, const std::vector<LevelPoint>& tr) {
    text() << "\n" << label << ":";
    for (const auto& x : tr) text() << " " << to_string(x);
  };
  print_trace("traceG", w.trace_g);
  print_trace("traceH", w.trace_h);
  text() << "\nseparated: " << (w.valid() ? "yes" : "no") << "\n";
  if (!json_path.empty()) {
    json t = json::array();
    for (const auto& [a, b] : w.t.pairs()) t.push_back({level_json(a), level_json(b)});
    emit_json(json_path, {{"t", t},
                          {"traceG", trace_json(w.trace_g)},
                          {"traceH", trace_json(w.trace_h)}});
  }
  return w.valid() ? 0 : kFail;
}

int witness_endo(const std::string& xtext, const std::string& json_path) {
  TensorElem x = parse_tensor(xtext);
  EndoWitness w = endo_witness(x);
  std::string sigma;
  for (auto p : w.sigma) sigma += (sigma.empty() ? "" : ",") + std::to_string(p);
  std::string word = w.word.letters.empty() ? "" : to_string(TensorElem::word(w.word.letters));
  text() << "x = " << to_string(x) << "\nSigma: {" << sigma << "}\n";
  text() << "word: " << word << "  coefficient " << to_string(w.word.coefficient)
            << "\nt:";
  json tj = json::array();
  for (const auto& [from, image] : w.t.images()) {
    text() << " " << to_string(from) << "->" << to_string(image);
    tj.push_back({to_string(from), to_string(image)});
  }
  text() << "\nresult: " << to_string(w.result) << "\ntarget " << to_string(w.target)
            << " coefficient " << to_string(w.target_coefficient) << "\n";
  if (!json_path.empty()) {
    emit_json(json_path, {{"sigma", w.sigma},
                          {"word", word},
                          {"coefficient", to_string(w.word.coefficient)},
                          {"t", tj},
                          {"result", to_string(w.result)},
                          {"target", level_json(w.target)},
                          {"targetCoefficient", to_string(w.target_coefficient)}});
  }
  return w.certified() ? 0 : kFail;
}

int witness_path(const std::string& factor_text, const std::string& gtext,
                 const std::string& htext, std::size_t max_depth,
                 const std::string& json_path) {
  std::vector<MSet> base;
  std::vector<FiniteMonoid> monoids;
  std::stringstream ss(factor_text);
  for (std::string item; std::getline(ss, item, ',');) {
    base.push_back(parse_factor(item));
    monoids.push_back(base.back().monoid());
  }
  if (base.size() < 2) throw std::invalid_argument("--factors needs two or more factors");
  auto cop = table_coproduct(monoids);
  TableWord g = cop.parse(gtext), h = cop.parse(htext);
  text() << "g = " << cop.format(g) << "\nh = " << cop.format(h) << "\n";
  for (std::size_t depth = 0; depth <= max_depth; ++depth) {
    std::vector<MSet> closed;
    for (const auto& s : base) closed.push_back(strong_closure(s, depth).mset);
    auto w = faithful_witness(g, h, closed);
    if (!w) continue;
    text() << "depth: " << depth << "\nx: " << to_string(w->x) << "\ng.x: "
              << to_string(w->gx) << "\nh.x: " << to_string(w->hx) << "\n";
    if (!json_path.empty()) {
      emit_json(json_path, {{"depth", depth},
                            {"x", to_string(w->x)},
                            {"gx", to_string(w->gx)},
                            {"hx", to_string(w->hx)}});
    }
    return 0;
  }
  text() << "no witness up to depth " << max_depth << "\n";
  if (!json_path.empty()) emit_json(json_path, {{"depth", nullptr}});
  return kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coplab: coproduct embeddings, witnesses and lattice checks"};
  app.require_subcommand(1);
  int code = 0;

  auto* list = app.add_subcommand("list", "list suites");

  RunOptions verify_opts;
  std::string verify_suite;
  auto* verify = app.add_subcommand("verify", "run a suite; exit 0 iff every property passes");
  verify->add_option("suite", verify_suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  add_param_flags(verify, verify_opts);

  auto* witness = app.add_subcommand("witness", "build a single witness");
  witness->require_subcommand(1);
  std::string g, h, x, factors = "S3,S3", witness_json;
  std::size_t path_depth = 2;
  auto* wsym = witness->add_subcommand("sym", "separating involution for two endomap words");
  wsym->set_help_flag("--help", "print this help");  // --h is a word
  wsym->add_option("--g", g, "first word, e.g. \"A:(0 1)|B:(1 2)\"")->required();
  wsym->add_option("--h", h, "second word")->required();
  wsym->add_option("--json", witness_json, "write JSON here ('-' for stdout)");
  auto* wendo = witness->add_subcommand("endo", "level witness for a tensor element");
  wendo->add_option("--x", x, "e.g. \"2*A:E(1,0)|B:E(2,1) - B:U(0,0)\"")->required();
  wendo->add_option("--json", witness_json, "write JSON here ('-' for stdout)");
  auto* wpath = witness->add_subcommand("path", "separating path for two table words");
  wpath->set_help_flag("--help", "print this help");
  wpath->add_option("--factors", factors, "comma-separated S<n> or Z<n>")->capture_default_str();
  wpath->add_option("--g", g, "first word, e.g. \"A:(0 1)|B:(1 2)\"")->required();
  wpath->add_option("--h", h, "second word")->required();
  wpath->add_option("--depth", path_depth, "largest closure depth tried")->capture_default_str();
  wpath->add_option("--json", witness_json, "write JSON here ('-' for stdout)");

  auto* rel = app.add_subcommand("rel", "relation suites");
  rel->require_subcommand(1);
  RunOptions rel_opts;
  std::string rel_suite;
  auto* rel_check = rel->add_subcommand("check", "run a rel suite");
  rel_check->add_option("--suite", rel_suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names("rel.")));
  add_param_flags(rel_check, rel_opts);

  RunOptions lat_opts;
  std::string lat_suite;
  auto* lattice = app.add_subcommand("lattice", "run a lattice suite and print its lattice");
  lattice->add_option("suite", lat_suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names("lattice.")));
  add_param_flags(lattice, lat_opts);

  CLI11_PARSE(app, argc, argv);
  for (const auto* path : {&verify_opts.json_path, &rel_opts.json_path, &lat_opts.json_path,
                           &witness_json}) {
    if (*path == "-") g_text = &std::cerr;
  }

  try {
    if (*list) {
      for (const auto& s : suite_registry()) {
        std::cout << s.name << "  [" << s.module << "]  " << s.description << "\n";
      }
    } else if (*verify) {
      code = run_and_report(verify_suite, verify_opts);
    } else if (*wsym) {
      code = witness_sym(g, h, witness_json);
    } else if (*wendo) {
      code = witness_endo(x, witness_json);
    } else if (*wpath) {
      code = witness_path(factors, g, h, path_depth, witness_json);
    } else if (*rel_check) {
      code = run_and_report("rel." + rel_suite, rel_opts);
    } else if (*lattice) {
      code = run_and_report("lattice." + lat_suite, lat_opts,
                            suite_lattice(lat_suite, lat_opts.params));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return code;
}
