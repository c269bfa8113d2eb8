#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lg36/serialize.hpp"

namespace lg36 {

struct SessionConfig {
  std::uint64_t prime = 10007;
  std::uint64_t seed = 1;
  int resample_budget = 50;
  unsigned threads = 0;  // tangent-hyperplane sampling; 0 = hardware

  // trial counts
  std::size_t sigma_samples = 1000;
  std::size_t ideal_seeds = 5;
  std::size_t bisecant_trials = 200;
  std::size_t bisecant_length_trials = 100;
  std::size_t tangent_trials = 50;
  std::size_t omega_trials = 50;
  std::size_t q_omega_points = 30;
  std::size_t triple_trials = 100;
  std::size_t fibration_trials = 100;
  std::size_t fibration_points = 20;
  std::size_t dq_samples = 2600;
  std::size_t dq_heldout = 500;
  std::size_t dq_lines = 50;
  std::size_t dq_random = 100;
  std::size_t dq_seeds = 3;
  std::size_t group_setups = 50;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "secants", "cubics", "fibration", "dual-quartic", "group"};
  return names;
}

struct CheckResult {
  std::string id;
  std::string description;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::size_t required = 0;  // passes needed; equals total unless a threshold is stated
  std::string detail;
  double seconds = 0;

  bool ok() const { return passed >= required; }
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
  std::size_t resamples = 0;
  double seconds = 0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

struct VerificationReport {
  std::string field;
  std::uint64_t seed = 0;
  std::vector<SuiteReport> suites;
  std::map<std::string, std::string> constants;  // pinned values: N_quad, quartic fingerprint
  double seconds = 0;

  bool ok() const {
    for (const auto& s : suites)
      if (!s.ok()) return false;
    return !suites.empty();
  }
  const CheckResult* find(const std::string& id) const;

  // The body (everything except timings) is a function of the config alone.
  std::string body_text() const;
  std::string timings_text() const;
  std::string text() const { return body_text() + timings_text(); }
  json body_json() const;
  json to_json() const;
};

// suite ∈ suite_names() or "all"; kInvalidArgument otherwise.
VerificationReport run_suite(const SessionConfig& config, const std::string& suite);

}  // namespace lg36
