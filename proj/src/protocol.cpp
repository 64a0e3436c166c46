#include "upf/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "upf/error.hpp"

namespace upf {

DecayPolicy DecayPolicy::exponential(double l1, double l2) {
  if (!(l1 > 0.0 && l2 > 0.0)) throw ParameterError("exponential decay needs l1 > 0 and l2 > 0");
  return DecayPolicy(ExponentialDecay{l1, l2});
}

DecayPolicy DecayPolicy::rational(double l3) {
  if (!(l3 > 0.0)) throw ParameterError("rational decay needs l3 > 0");
  return DecayPolicy(RationalDecay{l3});
}

double DecayPolicy::envelope(int n) const {
  if (const auto* e = std::get_if<ExponentialDecay>(&kind_)) {
    return e->l1 * std::exp(-static_cast<double>(n) / e->l2);
  }
  if (const auto* r = std::get_if<RationalDecay>(&kind_)) return r->l3 / static_cast<double>(n);
  return std::numeric_limits<double>::infinity();
}

void AllocationConfig::validate() const {
  if (!(delta > 0.0)) throw ParameterError("delta must be > 0");
  if (max_iter < 1) throw ParameterError("max_iter must be >= 1");
  if (!(initial_bid > 0.0) || !std::isfinite(initial_bid)) throw ParameterError("initial_bid must be > 0");
  solver.validate();
}

double compute_shadow_price(std::span<const double> bids, double total_rate) {
  if (!(total_rate > 0.0) || !std::isfinite(total_rate)) {
    throw ParameterError("total rate must be > 0, got " + std::to_string(total_rate));
  }
  double sum = 0.0;
  for (double w : bids) {
    if (!(w >= 0.0)) throw ParameterError("bids must be >= 0");
    sum += w;
  }
  if (sum == 0.0) throw PriceError("all bids are zero; shadow price would be 0");
  return sum / total_rate;
}

UserResponse user_respond(const UtilityFunction& u, double price, const AllocationConfig& cfg) {
  const RateSolution s = solve_user_rate(u, price, cfg.solver);
  return {s.rate, price * s.rate, s.clamped};
}

double apply_decay(double w_new, double w_old, int n, const DecayPolicy& policy) {
  const double envelope = policy.envelope(n);
  const double step = w_new - w_old;
  if (std::abs(step) > envelope) return w_old + std::copysign(envelope, step);
  return w_new;
}

bool check_convergence(std::span<const double> bids, std::span<const double> prev, double delta) {
  if (bids.size() != prev.size()) throw ParameterError("bid vectors differ in length");
  for (std::size_t i = 0; i < bids.size(); ++i) {
    if (std::abs(bids[i] - prev[i]) > delta) return false;
  }
  return true;
}

namespace {

double max_abs_step(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

AllocationResult run_allocation(std::span<const UtilityFunction> utilities, double total_rate,
                                const AllocationConfig& cfg) {
  if (utilities.empty()) throw ParameterError("allocation needs at least one user");
  if (!(total_rate > 0.0) || !std::isfinite(total_rate)) {
    throw ParameterError("total rate must be > 0, got " + std::to_string(total_rate));
  }
  cfg.validate();

  const std::size_t users = utilities.size();
  std::vector<double> bids(users, cfg.initial_bid);
  std::set<std::size_t> clamped;

  AllocationResult result{};
  result.status = AllocationStatus::IterationCapReached;

  for (int n = 1; n <= cfg.max_iter; ++n) {
    const double price = compute_shadow_price(bids, total_rate);

    IterationRecord rec{n, price, std::vector<double>(users), std::vector<double>(users), 0.0};
    for (std::size_t i = 0; i < users; ++i) {
      const UserResponse resp = user_respond(utilities[i], price, cfg);
      if (resp.clamped) clamped.insert(i);
      rec.rates[i] = resp.rate;
      rec.bids[i] = apply_decay(resp.bid, bids[i], n, cfg.decay);
    }
    rec.max_step = max_abs_step(rec.bids, bids);

    const bool done = check_convergence(rec.bids, bids, cfg.delta);
    bids = rec.bids;
    result.trajectory.push_back(std::move(rec));
    if (done) {
      result.status = AllocationStatus::Converged;
      break;
    }
  }

  const IterationRecord& last = result.trajectory.back();
  result.final_rates = last.rates;
  result.final_bids = last.bids;
  result.final_price = last.price;
  result.iterations_used = last.n;
  result.clamped_users.assign(clamped.begin(), clamped.end());
  return result;
}

}  // namespace upf
