#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "upf/utility.hpp"

namespace upf {

struct SolverConfig {
  double bracket_lo = 1e-3;
  double bracket_hi = 1e3;
  // Ceiling for doubling bracket_hi when the price is below the curve there.
  double hi_cap = 1e9;
  double rel_tol = 1e-10;
  int max_iter = 200;

  // Throws ParameterError on 0 < lo < hi <= cap, 0 < rel_tol < 1, max_iter >= 1 violations.
  void validate() const;

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

struct RateSolution {
  double rate;
  // The price exceeded the log-utility slope at bracket_lo; rate is pinned there.
  bool clamped;
};

// Rate maximizing ln U(r) - price * r, i.e. the root of U.dlog(r) = price,
// found by bisection on the decreasing slope. Throws PriceError for
// price <= 0 and NoRootError when the bracket would exceed hi_cap.
RateSolution solve_user_rate(const UtilityFunction& u, double price, const SolverConfig& cfg = {});

// Exhaustive scan: the grid point maximizing ln U(r) - price * r. The grid must
// be non-empty, strictly ascending and positive.
double grid_oracle(const UtilityFunction& u, double price, std::span<const double> grid);

// n >= 2 points from lo to hi inclusive with a constant ratio.
std::vector<double> geometric_grid(double lo, double hi, std::size_t n);

}  // namespace upf
