#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "table_utilities.hpp"
#include "upf/error.hpp"
#include "upf/solver.hpp"

using namespace upf;
using upf::testing::table_utilities;

TEST_CASE("root round trips through the slope") {
  const auto u = make_log(0.5, 100);
  CHECK(solve_user_rate(u, u.dlog(17.3)).rate == doctest::Approx(17.3).epsilon(1e-9));
  CHECK(solve_user_rate(u, 0.5 / (2 * std::log(2.0))).rate == doctest::Approx(2.0).epsilon(1e-9));

  const auto sig = make_sigmoid(5, 10);
  const RateSolution s = solve_user_rate(sig, sig.dlog(10));
  CHECK(s.rate == doctest::Approx(10).epsilon(1e-9));
  CHECK_FALSE(s.clamped);
}

TEST_CASE("bracketing invariant holds at the returned rate") {
  const SolverConfig cfg;
  for (const auto& [name, u] : table_utilities()) {
    for (double p : {1e-3, 0.02, 0.3, 0.9, 2.0, 4.0}) {
      CAPTURE(name);
      CAPTURE(p);
      const RateSolution s = solve_user_rate(u, p, cfg);
      if (s.clamped) continue;
      CHECK(u.dlog(s.rate * (1 - 1e-9)) >= p);
      CHECK(u.dlog(s.rate * (1 + 1e-9)) <= p);
    }
  }
}

TEST_CASE("price above the slope at bracket_lo pins the rate") {
  const auto u = make_sigmoid(3, 20);
  SolverConfig cfg;
  const double p = 2 * u.dlog(cfg.bracket_lo);
  const RateSolution s = solve_user_rate(u, p, cfg);
  CHECK(s.clamped);
  CHECK(s.rate == cfg.bracket_lo);
}

TEST_CASE("small prices expand the upper bracket up to hi_cap") {
  const auto u = make_log(0.5, 100);
  const double p = u.dlog(5000.0);
  const RateSolution s = solve_user_rate(u, p);
  CHECK(s.rate == doctest::Approx(5000.0).epsilon(1e-9));

  SolverConfig capped;
  capped.hi_cap = 3000;
  CHECK_THROWS_AS(solve_user_rate(u, p, capped), NoRootError);
}

TEST_CASE("solver argument errors") {
  const auto u = make_log(3, 100);
  CHECK_THROWS_AS(solve_user_rate(u, 0.0), PriceError);
  CHECK_THROWS_AS(solve_user_rate(u, -1.0), PriceError);
  CHECK_THROWS_AS(solve_user_rate(u, std::nan("")), PriceError);

  SolverConfig bad;
  bad.bracket_lo = 10;
  bad.bracket_hi = 1;
  CHECK_THROWS_AS(solve_user_rate(u, 0.1, bad), ParameterError);
  bad = {};
  bad.rel_tol = 0;
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  bad = {};
  bad.max_iter = 0;
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  bad = {};
  bad.hi_cap = 10;
  CHECK_THROWS_AS(bad.validate(), ParameterError);
}

TEST_CASE("deterministic and monotone in price") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_p(std::log(1e-3), std::log(10.0));
  const auto table = table_utilities();
  for (int trial = 0; trial < 200; ++trial) {
    const auto& u = table[trial % table.size()].u;
    double p1 = std::exp(log_p(rng));
    double p2 = std::exp(log_p(rng));
    if (p1 > p2) std::swap(p1, p2);
    CAPTURE(p1);
    CAPTURE(p2);
    const double r1 = solve_user_rate(u, p1).rate;
    CHECK(r1 == solve_user_rate(u, p1).rate);
    CHECK(r1 >= solve_user_rate(u, p2).rate);
  }
}

TEST_CASE("grid oracle") {
  const auto u = make_log(3, 100);
  const std::vector<double> one{4.2};
  CHECK(grid_oracle(u, 0.1, one) == 4.2);
  CHECK_THROWS_AS(grid_oracle(u, 0.1, std::vector<double>{}), ParameterError);
  CHECK_THROWS_AS(grid_oracle(u, 0.1, std::vector<double>{1.0, 3.0, 2.0}), ParameterError);
  CHECK_THROWS_AS(grid_oracle(u, 0.1, std::vector<double>{0.0, 1.0}), ParameterError);

  std::vector<double> linear(100000);
  for (std::size_t i = 0; i < linear.size(); ++i) linear[i] = 0.01 * static_cast<double>(i + 1);
  CHECK(std::abs(grid_oracle(u, 0.1, linear) - solve_user_rate(u, 0.1).rate) <= 0.01);

  const auto sig = make_sigmoid(3, 20);
  CHECK(std::abs(grid_oracle(sig, 0.05, linear) - solve_user_rate(sig, 0.05).rate) <= 0.01);
}

TEST_CASE("solver agrees with the grid oracle on random cases") {
  const auto grid = geometric_grid(1e-3, 1e3, 100001);
  const double ratio = grid[1] / grid[0];
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> log_p(std::log(1e-3), std::log(10.0));
  std::uniform_int_distribution<int> pick(0, 5);
  const auto table = table_utilities();
  for (int trial = 0; trial < 25; ++trial) {
    const auto& [name, u] = table[pick(rng)];
    const double p = std::exp(log_p(rng));
    CAPTURE(name);
    CAPTURE(p);
    const double oracle = grid_oracle(u, p, grid);
    const double solved = solve_user_rate(u, p).rate;
    CHECK(std::abs(solved - oracle) <= oracle * (ratio - 1) * 1.0000001);
  }
}

TEST_CASE("geometric grid") {
  const auto g = geometric_grid(1e-3, 1e3, 7);
  REQUIRE(g.size() == 7);
  CHECK(g.front() == 1e-3);
  CHECK(g.back() == 1e3);
  CHECK(g[3] == doctest::Approx(1.0));
  CHECK_THROWS_AS(geometric_grid(1, 1, 5), ParameterError);
  CHECK_THROWS_AS(geometric_grid(1, 2, 1), ParameterError);
}
