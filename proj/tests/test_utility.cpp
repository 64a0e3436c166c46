#include <doctest.h>

#include <cfloat>
#include <cmath>
#include <limits>

#include "table_utilities.hpp"
#include "upf/error.hpp"
#include "upf/utility.hpp"

using namespace upf;
using upf::testing::table_utilities;

namespace {

// The MATLAB-listing form of the sigmoid log-slope, used as a second route.
double listing_sigmoid_dlog(const Sigmoid& s, double r) {
  const double m = std::exp(-s.a * (r - s.b));
  return s.a * m / ((1.0 + m) * (1.0 - s.d * (1.0 + m)));
}

}  // namespace

TEST_CASE("sigmoid constants") {
  const auto u = make_sigmoid(5, 10);
  const auto& s = std::get<Sigmoid>(u.shape());
  CHECK(s.a == 5);
  CHECK(s.b == 10);
  // 1 / (1 + e^50), evaluated to 40 digits offline.
  CHECK(s.d == doctest::Approx(1.928749847963917783e-22).epsilon(1e-14));
  CHECK(s.c == doctest::Approx(1.0).epsilon(1e-15));

  // e^{ab} alone would overflow here.
  const auto wide = make_sigmoid(2, 1000);
  const auto& w = std::get<Sigmoid>(wide.shape());
  CHECK(w.c == 1.0);
  CHECK(w.d == 0.0);
  CHECK(wide.eval(0) == 0.0);
  CHECK(wide.eval(1000) == doctest::Approx(0.5));
  CHECK(wide.eval(2000) == 1.0);
  CHECK(std::isfinite(wide.log_eval(1.0)));
}

TEST_CASE("constructor parameter errors") {
  CHECK_THROWS_AS(make_sigmoid(0, 10), ParameterError);
  CHECK_THROWS_AS(make_sigmoid(-1, 10), ParameterError);
  CHECK_THROWS_AS(make_sigmoid(5, 0), ParameterError);
  CHECK_THROWS_AS(make_sigmoid(std::nan(""), 1), ParameterError);
  CHECK_THROWS_AS(make_log(0, 100), ParameterError);
  CHECK_THROWS_AS(make_log(3, -100), ParameterError);
  CHECK_THROWS_AS(make_log(std::numeric_limits<double>::infinity(), 100), ParameterError);
}

TEST_CASE("eval") {
  for (const auto& [name, u] : table_utilities()) {
    CAPTURE(name);
    CHECK(u.eval(0.0) == 0.0);
  }
  CHECK(make_log(3, 100).eval(100) == 1.0);
  CHECK(make_log(1, 1).eval(1) == 1.0);
  CHECK(make_sigmoid(5, 10).eval(10) == doctest::Approx(0.5).epsilon(1e-15));

  // c * (sigma(r) - d) computed directly where it is well conditioned.
  const auto u = make_sigmoid(1, 30);
  const auto& s = std::get<Sigmoid>(u.shape());
  for (double r : {0.5, 10.0, 29.0, 31.0, 45.0}) {
    const double direct = s.c * (1.0 / (1.0 + std::exp(-s.a * (r - s.b))) - s.d);
    CHECK(u.eval(r) == doctest::Approx(direct).epsilon(1e-12));
  }

  CHECK_THROWS_AS(u.eval(-1e-9), DomainError);
  CHECK_THROWS_AS(make_log(3, 100).eval(-1), DomainError);
}

TEST_CASE("eval is strictly increasing and sigmoids approach 1") {
  for (const auto& [name, u] : table_utilities()) {
    CAPTURE(name);
    double prev = u.eval(0.0);
    // Sigmoids round to 1.0 past ~b + 37/a, so only scan the rising part for them.
    const double top = u.is_sigmoid() ? u.inflection_point() + 7.0 / std::get<Sigmoid>(u.shape()).a : 100.0;
    for (double r = top / 200; r <= top; r += top / 200) {
      const double v = u.eval(r);
      CHECK(v > prev);
      prev = v;
    }
    if (u.is_sigmoid()) CHECK(u.eval(10 * u.inflection_point()) > 0.999);
  }
}

TEST_CASE("dlog closed forms") {
  CHECK(make_log(0.5, 100).dlog(2) == doctest::Approx(0.36067376022224085).epsilon(1e-14));
  CHECK(make_sigmoid(5, 10).dlog(10) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK_THROWS_AS(make_log(0.5, 100).dlog(0), DomainError);
  CHECK_THROWS_AS(make_sigmoid(5, 10).dlog(-2), DomainError);
  CHECK_THROWS_AS(make_sigmoid(5, 10).log_eval(0), DomainError);

  // Agreement with the listing's a m / ((1+m)(1 - d(1+m))) away from its cancellation region.
  for (const auto& [name, u] : table_utilities()) {
    if (!u.is_sigmoid()) continue;
    CAPTURE(name);
    const auto& s = std::get<Sigmoid>(u.shape());
    for (double r : {0.5, 0.9 * s.b, s.b, 1.2 * s.b}) {
      CAPTURE(r);
      CHECK(u.dlog(r) == doctest::Approx(listing_sigmoid_dlog(s, r)).epsilon(1e-9));
    }
  }
}

TEST_CASE("dlog is strictly decreasing on a geometric grid") {
  for (const auto& [name, u] : table_utilities()) {
    CAPTURE(name);
    double prev = u.dlog(1e-3);
    for (int i = 1; i <= 120; ++i) {
      const double r = 1e-3 * std::pow(10.0, i / 20.0);
      const double v = u.dlog(r);
      CAPTURE(r);
      CHECK(v >= 0.0);
      if (v >= DBL_MIN) {
        CHECK(v < prev);
      } else {
        CHECK(v <= prev);
      }
      prev = v;
    }
  }
}

TEST_CASE("dlog matches finite differences of ln U") {
  for (const auto& [name, u] : table_utilities()) {
    for (double r : {1.0, 5.0, 10.0, 20.0, 30.0, 50.0, 80.0}) {
      CAPTURE(name);
      CAPTURE(r);
      const double h = 1e-6 * r;
      const double fd = (u.log_eval(r + h) - u.log_eval(r - h)) / (2 * h);
      const double exact = u.dlog(r);
      REQUIRE(exact > 0.0);
      CHECK(std::abs(exact - fd) / exact < 1e-6);
    }
  }
}

TEST_CASE("log_eval agrees with log of eval where U is away from 1") {
  for (const auto& [name, u] : table_utilities()) {
    for (double r : {0.01, 1.0, 7.0, 15.0, 25.0, 33.0}) {
      const double v = u.eval(r);
      if (v > 1 - 1e-3) continue;
      CAPTURE(name);
      CAPTURE(r);
      CHECK(u.log_eval(r) == doctest::Approx(std::log(v)).epsilon(1e-10));
    }
  }
}

TEST_CASE("inflection points") {
  CHECK(make_sigmoid(3, 20).inflection_point() == 20);
  CHECK(make_log(15, 100).inflection_point() == 0);
  CHECK(make_sigmoid(0.174, 470).inflection_point() == 470);
}

TEST_CASE("sigmoid from two QoE points") {
  const auto u = fit_sigmoid_from_qoe({200, 0.05}, {740, 0.99});
  const auto& s = std::get<Sigmoid>(u.shape());
  CHECK(s.b == 470.0);
  CHECK(s.a == doctest::Approx(0.174).epsilon(0.001 / 0.174));
  CHECK(s.a == doctest::Approx(94.0 / 540.0).epsilon(1e-14));
  CHECK(u.eval(470) == doctest::Approx(0.5).epsilon(1e-15));

  const auto sym = fit_sigmoid_from_qoe({95, 0.2}, {105, 0.3});
  CHECK(std::get<Sigmoid>(sym.shape()).b == 100.0);
  CHECK(std::get<Sigmoid>(sym.shape()).a == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(fit_sigmoid_from_qoe({740, 0.99}, {200, 0.05}), ParameterError);
  CHECK_THROWS_AS(fit_sigmoid_from_qoe({200, 0.5}, {740, 0.4}), ParameterError);
  CHECK_THROWS_AS(fit_sigmoid_from_qoe({0, 0.05}, {740, 0.99}), ParameterError);
  CHECK_THROWS_AS(fit_sigmoid_from_qoe({200, 0.05}, {740, 1.0}), ParameterError);
}
