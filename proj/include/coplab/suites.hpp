#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace coplab {

// Unset fields take the suite's defaults.
struct Params {
  std::optional<std::uint64_t> n, depth, bound;
  std::uint64_t seed = 1;
};

struct Property {
  std::string name;
  bool pass = true;
  std::uint64_t checked = 0;
  std::string counterexample;  // first failure, in module text formats
  nlohmann::json detail = nlohmann::json::object();

  // Counts one case; records the payload of the first failing one.
  void check(bool ok, const std::string& payload = {});
};

struct RunReport {
  std::string suite;
  std::string module;
  nlohmann::json params = nlohmann::json::object();
  std::deque<Property> properties;  // add() keeps references valid
  std::optional<double> wall_ms;
  std::string error;  // exception text when the suite aborted

  bool pass() const;
  Property& add(const std::string& name);
  const Property* find(const std::string& name) const;
  // wall_ms is written only when timing is requested.
  nlohmann::json to_json(bool timing = false) const;
};

struct SuiteInfo {
  std::string name;
  std::string module;
  std::string description;
  std::function<RunReport(const Params&)> run;
};

// Modules that must each own at least one suite.
const std::vector<std::string>& module_names();
const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(const std::string& name);

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws UnknownSuite. Exceptions inside the suite end up in report.error.
RunReport run_suite(const std::string& name, const Params& params);

}  // namespace coplab
