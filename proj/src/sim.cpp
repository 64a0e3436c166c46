#include "upf/sim.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace upf {

Scenario::Scenario(std::string name, std::vector<ScenarioUser> users, std::vector<double> total_rates,
                   AllocationConfig config)
    : name_(std::move(name)),
      users_(std::move(users)),
      total_rates_(std::move(total_rates)),
      config_(config) {
  if (users_.empty()) throw ParameterError("scenario needs at least one user");
  std::set<std::string> seen;
  for (const auto& u : users_) {
    if (!seen.insert(u.id).second) throw ParameterError("duplicate user id '" + u.id + "'");
  }
  if (total_rates_.empty()) throw ParameterError("scenario needs at least one total rate");
  for (std::size_t i = 0; i < total_rates_.size(); ++i) {
    if (!(total_rates_[i] > 0.0) || !std::isfinite(total_rates_[i])) {
      throw ParameterError("total rates must be positive");
    }
    if (i > 0 && !(total_rates_[i] > total_rates_[i - 1])) {
      throw ParameterError("total rates must be strictly ascending");
    }
  }
  config_.validate();
}

std::vector<UtilityFunction> Scenario::utilities() const {
  std::vector<UtilityFunction> out;
  out.reserve(users_.size());
  for (const auto& u : users_) out.push_back(u.utility);
  return out;
}

std::vector<std::string> Scenario::user_ids() const {
  std::vector<std::string> out;
  out.reserve(users_.size());
  for (const auto& u : users_) out.push_back(u.id);
  return out;
}

Scenario Scenario::with_total_rates(std::vector<double> total_rates) const {
  return Scenario(name_, users_, std::move(total_rates), config_);
}

Scenario Scenario::with_config(AllocationConfig config) const {
  return Scenario(name_, users_, total_rates_, config);
}

Scenario canonical_scenario() {
  std::vector<ScenarioUser> users{
      {"Sig1", make_sigmoid(5.0, 10.0)}, {"Sig2", make_sigmoid(3.0, 20.0)},
      {"Sig3", make_sigmoid(1.0, 30.0)}, {"Log1", make_log(15.0, 100.0)},
      {"Log2", make_log(3.0, 100.0)},    {"Log3", make_log(0.5, 100.0)},
  };
  std::vector<double> rates;
  for (int r = 5; r <= 100; r += 5) rates.push_back(r);
  return Scenario("canonical", std::move(users), std::move(rates), AllocationConfig{});
}

SweepError::SweepError(double total_rate, const std::string& what)
    : Error("R=" + std::to_string(total_rate) + ": " + what), total_rate_(total_rate) {}

SweepResult run_sweep(const Scenario& s) {
  const auto utilities = s.utilities();
  SweepResult out{s.name(), s.user_ids(), {}};
  out.entries.reserve(s.total_rates().size());
  for (double total_rate : s.total_rates()) {
    try {
      out.entries.push_back({total_rate, run_allocation(utilities, total_rate, s.config())});
    } catch (const Error& e) {
      throw SweepError(total_rate, e.what());
    }
  }
  return out;
}

double late_oscillation(const AllocationResult& r, double fraction) {
  const auto& traj = r.trajectory;
  if (traj.empty()) return 0.0;
  const auto tail = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(traj.size()))));
  double m = 0.0;
  for (std::size_t i = traj.size() - std::min(tail, traj.size()); i < traj.size(); ++i) {
    m = std::max(m, traj[i].max_step);
  }
  return m;
}

FluctuationReport fluctuation_probe(const Scenario& s, double total_rate) {
  const auto utilities = s.utilities();

  AllocationConfig plain_cfg = s.config();
  plain_cfg.decay = DecayPolicy::none();
  AllocationConfig robust_cfg = s.config();
  robust_cfg.decay = DecayPolicy::exponential(5.0, 10.0);

  FluctuationReport rep{false, false, 0.0, run_allocation(utilities, total_rate, plain_cfg),
                        run_allocation(utilities, total_rate, robust_cfg)};
  rep.converged_plain = rep.plain.converged();
  rep.converged_robust = rep.robust.converged();
  rep.max_late_oscillation = late_oscillation(rep.plain);
  return rep;
}

}  // namespace upf
