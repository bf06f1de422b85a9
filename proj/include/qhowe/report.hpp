#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace qhowe {

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;  // failure detail; empty on pass
};

// Verification result container. JSON rendering is deterministic for a fixed
// configuration except for the "timing" key, which callers may exclude when
// comparing runs.
struct Report {
  std::string suite;
  std::map<std::string, std::string> config;
  std::vector<Check> checks;
  double seconds = 0.0;

  void add(const std::string& name, bool ok, const std::string& witness = "") {
    checks.push_back(Check{name, ok, ok ? "" : witness});
  }

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  int failed_count() const {
    int n = 0;
    for (const auto& c : checks)
      if (!c.passed) ++n;
    return n;
  }

  nlohmann::json to_json(bool include_timing = true) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["config"] = config;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json cj;
      cj["name"] = c.name;
      cj["status"] = c.passed ? "pass" : "fail";
      if (!c.passed) cj["witness"] = c.witness;
      arr.push_back(cj);
    }
    j["checks"] = arr;
    j["summary"] = {{"total", checks.size()},
                    {"failed", failed_count()},
                    {"verdict", all_pass() ? "pass" : "fail"}};
    if (include_timing) j["timing"] = {{"seconds", seconds}};
    return j;
  }

  std::string pretty() const {
    std::string s = "suite: " + suite + "\n";
    for (const auto& [k, v] : config) s += "  " + k + " = " + v + "\n";
    for (const auto& c : checks) {
      s += std::string(c.passed ? "  [pass] " : "  [FAIL] ") + c.name;
      if (!c.passed && !c.witness.empty()) s += "\n         " + c.witness;
      s += "\n";
    }
    s += all_pass() ? "result: pass" : "result: FAIL";
    s += " (" + std::to_string(checks.size()) + " checks, " +
         std::to_string(failed_count()) + " failed)\n";
    return s;
  }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace qhowe
