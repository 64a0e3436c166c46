#pragma once

#include <string>
#include <vector>

#include "upf/error.hpp"
#include "upf/protocol.hpp"
#include "upf/utility.hpp"

namespace upf {

struct ScenarioUser {
  std::string id;
  UtilityFunction utility;

  friend bool operator==(const ScenarioUser&, const ScenarioUser&) = default;
};

// A named user population swept over total rates. The constructor enforces:
// at least one user, unique ids, and non-empty strictly ascending positive
// total rates.
class Scenario {
 public:
  Scenario(std::string name, std::vector<ScenarioUser> users, std::vector<double> total_rates,
           AllocationConfig config);

  const std::string& name() const { return name_; }
  const std::vector<ScenarioUser>& users() const { return users_; }
  const std::vector<double>& total_rates() const { return total_rates_; }
  const AllocationConfig& config() const { return config_; }

  std::vector<UtilityFunction> utilities() const;
  std::vector<std::string> user_ids() const;

  Scenario with_total_rates(std::vector<double> total_rates) const;
  Scenario with_config(AllocationConfig config) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  std::string name_;
  std::vector<ScenarioUser> users_;
  std::vector<double> total_rates_;
  AllocationConfig config_;
};

// Six users, one per application class: three sigmoids (VoIP-like a=5 b=10,
// SD video a=3 b=20, HD video a=1 b=30) and three logs with r_max = 100 and
// k = 15, 3, 0.5. Default config, total rates 5, 10, ..., 100.
Scenario canonical_scenario();

// A per-run failure inside a sweep, tagged with the total rate it happened at.
class SweepError : public Error {
 public:
  SweepError(double total_rate, const std::string& what);
  double total_rate() const { return total_rate_; }

 private:
  double total_rate_;
};

struct SweepEntry {
  double total_rate;
  AllocationResult result;
};

struct SweepResult {
  std::string scenario_name;
  std::vector<std::string> user_ids;
  std::vector<SweepEntry> entries;  // in scenario total-rate order
};

// One independent run_allocation per total rate (no warm start).
SweepResult run_sweep(const Scenario& s);

struct FluctuationReport {
  bool converged_plain;
  bool converged_robust;
  // Largest max-norm bid step over the last 10% (at least one) of the plain run's rounds.
  double max_late_oscillation;
  AllocationResult plain;
  AllocationResult robust;
};

// Runs the scenario at one total rate undamped and with ExponentialDecay{5, 10}.
FluctuationReport fluctuation_probe(const Scenario& s, double total_rate);

// Largest max-norm bid step over the trailing `fraction` of a trajectory.
double late_oscillation(const AllocationResult& r, double fraction = 0.1);

}  // namespace upf
