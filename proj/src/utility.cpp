#include "upf/utility.hpp"

#include <cmath>
#include <string>

#include "upf/error.hpp"

namespace upf {
namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

// ln(1 + e^x) without overflow.
double log1p_exp(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

// ln(1 - e^{-x}) for x > 0.
double log1m_exp_neg(double x) {
  return x < M_LN2 ? std::log(-std::expm1(-x)) : std::log1p(-std::exp(-x));
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

UtilityFunction make_sigmoid(double a, double b) {
  if (!positive_finite(a) || !positive_finite(b)) {
    throw ParameterError("sigmoid utility needs a > 0 and b > 0, got a=" + std::to_string(a) +
                         " b=" + std::to_string(b));
  }
  // c = 1 + e^{-ab}, d = e^{-ab} / (1 + e^{-ab}); the e^{ab} forms overflow past ab ~ 709.
  const double t = std::exp(-a * b);
  return UtilityFunction(Sigmoid{a, b, 1.0 + t, t / (1.0 + t)});
}

UtilityFunction make_log(double k, double r_max) {
  if (!positive_finite(k) || !positive_finite(r_max)) {
    throw ParameterError("logarithmic utility needs k > 0 and r_max > 0, got k=" +
                         std::to_string(k) + " r_max=" + std::to_string(r_max));
  }
  return UtilityFunction(Logarithmic{k, r_max});
}

double UtilityFunction::eval(double r) const {
  if (!(r >= 0.0)) throw DomainError("utility evaluated at negative rate " + std::to_string(r));
  return std::visit(
      Overloaded{
          // c * (sigma(r) - d) simplifies to (1 - e^{-ar}) / (1 + e^{-a(r-b)}).
          [r](const Sigmoid& s) { return -std::expm1(-s.a * r) / (1.0 + std::exp(-s.a * (r - s.b))); },
          [r](const Logarithmic& l) { return std::log1p(l.k * r) / std::log1p(l.k * l.r_max); },
      },
      shape_);
}

double UtilityFunction::log_eval(double r) const {
  if (!(r > 0.0)) throw DomainError("log utility needs r > 0, got " + std::to_string(r));
  return std::visit(
      Overloaded{
          [r](const Sigmoid& s) { return log1m_exp_neg(s.a * r) - log1p_exp(-s.a * (r - s.b)); },
          [r](const Logarithmic& l) {
            return std::log(std::log1p(l.k * r)) - std::log(std::log1p(l.k * l.r_max));
          },
      },
      shape_);
}

double UtilityFunction::dlog(double r) const {
  if (!(r > 0.0)) throw DomainError("log-utility slope needs r > 0, got " + std::to_string(r));
  return std::visit(
      Overloaded{
          // a m / ((1 + m)(1 - d(1 + m))) with m = e^{-a(r-b)}, split into the two
          // terms of d/dr [ln(1 - e^{-ar}) - ln(1 + m)].
          [r](const Sigmoid& s) {
            return s.a / (1.0 + std::exp(s.a * (r - s.b))) + s.a / std::expm1(s.a * r);
          },
          [r](const Logarithmic& l) {
            const double kr = l.k * r;
            return l.k / ((1.0 + kr) * std::log1p(kr));
          },
      },
      shape_);
}

double UtilityFunction::inflection_point() const {
  if (const auto* s = std::get_if<Sigmoid>(&shape_)) return s->b;
  return 0.0;
}

UtilityFunction fit_sigmoid_from_qoe(QoePoint low, QoePoint high) {
  const bool rates_ok = low.rate > 0.0 && low.rate < high.rate && std::isfinite(high.rate);
  const bool sat_ok = low.satisfaction > 0.0 && low.satisfaction < high.satisfaction &&
                      high.satisfaction < 1.0;
  if (!rates_ok || !sat_ok) {
    throw ParameterError(
        "QoE fit needs 0 < r_low < r_high and 0 < s_low < s_high < 1");
  }
  const double b = (low.rate + high.rate) / 2.0;
  const double a = (high.satisfaction - low.satisfaction) * 100.0 / (high.rate - low.rate);
  return make_sigmoid(a, b);
}

}  // namespace upf
