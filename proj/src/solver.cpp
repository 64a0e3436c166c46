#include "upf/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "upf/error.hpp"

namespace upf {

void SolverConfig::validate() const {
  if (!(bracket_lo > 0.0 && bracket_lo < bracket_hi && bracket_hi <= hi_cap && std::isfinite(hi_cap))) {
    throw ParameterError("solver bracket needs 0 < bracket_lo < bracket_hi <= hi_cap");
  }
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw ParameterError("solver rel_tol must lie in (0, 1)");
  if (max_iter < 1) throw ParameterError("solver max_iter must be >= 1");
}

RateSolution solve_user_rate(const UtilityFunction& u, double price, const SolverConfig& cfg) {
  if (!(price > 0.0) || !std::isfinite(price)) {
    throw PriceError("user rate solve needs a positive finite price, got " + std::to_string(price));
  }
  cfg.validate();

  double lo = cfg.bracket_lo;
  if (u.dlog(lo) < price) return {lo, true};

  double hi = cfg.bracket_hi;
  while (u.dlog(hi) > price) {
    lo = hi;
    hi *= 2.0;
    if (hi > cfg.hi_cap) {
      throw NoRootError("no rate within hi_cap for price " + std::to_string(price));
    }
  }

  // Invariant: dlog(lo) >= price >= dlog(hi).
  for (int i = 0; i < cfg.max_iter && hi - lo > cfg.rel_tol * hi; ++i) {
    const double mid = lo + (hi - lo) / 2.0;
    if (u.dlog(mid) > price) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo + (hi - lo) / 2.0, false};
}

double grid_oracle(const UtilityFunction& u, double price, std::span<const double> grid) {
  if (grid.empty()) throw ParameterError("grid oracle needs a non-empty grid");
  if (!(grid.front() > 0.0)) throw ParameterError("grid oracle rates must be positive");
  double best_rate = grid.front();
  double best = -std::numeric_limits<double>::infinity();
  double prev = 0.0;
  for (double r : grid) {
    if (!(r > prev)) throw ParameterError("grid oracle rates must be strictly ascending");
    prev = r;
    const double objective = u.log_eval(r) - price * r;
    if (objective > best) {
      best = objective;
      best_rate = r;
    }
  }
  return best_rate;
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0 && lo < hi) || n < 2) throw ParameterError("geometric grid needs 0 < lo < hi and n >= 2");
  std::vector<double> grid(n);
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) grid[i] = std::exp(log_lo + step * static_cast<double>(i));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace upf
