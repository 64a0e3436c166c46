#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "upf/solver.hpp"
#include "upf/utility.hpp"

namespace upf {

struct NoDecay {
  friend bool operator==(const NoDecay&, const NoDecay&) = default;
};

// Envelope l1 * e^{-n / l2}.
struct ExponentialDecay {
  double l1 = 5.0;
  double l2 = 10.0;
  friend bool operator==(const ExponentialDecay&, const ExponentialDecay&) = default;
};

// Envelope l3 / n.
struct RationalDecay {
  double l3 = 5.0;
  friend bool operator==(const RationalDecay&, const RationalDecay&) = default;
};

// Fluctuation decay function: bounds how far a user's bid may move in round n.
class DecayPolicy {
 public:
  using Kind = std::variant<NoDecay, ExponentialDecay, RationalDecay>;

  DecayPolicy() = default;
  static DecayPolicy none() { return DecayPolicy(); }
  static DecayPolicy exponential(double l1, double l2);
  static DecayPolicy rational(double l3);

  const Kind& kind() const { return kind_; }
  bool is_none() const { return std::holds_alternative<NoDecay>(kind_); }

  // Largest bid step allowed in round n >= 1; +inf for NoDecay.
  double envelope(int n) const;

  friend bool operator==(const DecayPolicy&, const DecayPolicy&) = default;

 private:
  explicit DecayPolicy(Kind kind) : kind_(kind) {}
  Kind kind_;
};

struct AllocationConfig {
  double delta = 1e-3;  // convergence threshold on the max-norm bid step
  int max_iter = 1000;
  double initial_bid = 10.0;
  DecayPolicy decay;
  SolverConfig solver;

  void validate() const;

  friend bool operator==(const AllocationConfig&, const AllocationConfig&) = default;
};

// State after round n: the price announced for the incoming bids and each
// user's response to it.
struct IterationRecord {
  int n;
  double price;
  std::vector<double> bids;   // bids sent back in response to `price`
  std::vector<double> rates;  // rates solved at `price`
  double max_step;            // max_i |bids_i - previous bid_i|
};

enum class AllocationStatus { Converged, IterationCapReached };

struct AllocationResult {
  AllocationStatus status;
  std::vector<double> final_rates;
  std::vector<double> final_bids;
  double final_price;
  int iterations_used;
  std::vector<IterationRecord> trajectory;
  std::vector<std::size_t> clamped_users;  // ascending, users ever pinned at bracket_lo

  bool converged() const { return status == AllocationStatus::Converged; }
};

// Base station price: sum of bids over the total rate. Throws ParameterError
// for total_rate <= 0 or negative bids, PriceError when every bid is zero.
double compute_shadow_price(std::span<const double> bids, double total_rate);

struct UserResponse {
  double rate;
  double bid;  // price * rate
  bool clamped;
};

UserResponse user_respond(const UtilityFunction& u, double price, const AllocationConfig& cfg);

// Limits the move from w_old to w_new to the policy's envelope at round n.
double apply_decay(double w_new, double w_old, int n, const DecayPolicy& policy);

// max_i |bids_i - prev_i| <= delta. Throws ParameterError on length mismatch.
bool check_convergence(std::span<const double> bids, std::span<const double> prev, double delta);

// Synchronous bidding loop. Every user starts from cfg.initial_bid; each round
// the base station prices the current bids, all users respond to that price
// (damped user-side by cfg.decay) and the loop stops once no bid moved by more
// than cfg.delta or after cfg.max_iter rounds.
AllocationResult run_allocation(std::span<const UtilityFunction> utilities, double total_rate,
                                const AllocationConfig& cfg);

}  // namespace upf
