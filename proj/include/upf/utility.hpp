#pragma once

#include <variant>

namespace upf {

// Normalized sigmoid satisfaction curve
//   U(r) = c * (1 / (1 + e^{-a(r-b)}) - d),  c = (1 + e^{ab}) / e^{ab},  d = 1 / (1 + e^{ab})
// so that U(0) = 0 and U(r) -> 1 as r -> inf. Models inelastic (real-time) traffic;
// `b` is the inflection rate.
struct Sigmoid {
  double a;  // steepness, per unit rate
  double b;  // inflection rate
  double c;
  double d;

  friend bool operator==(const Sigmoid&, const Sigmoid&) = default;
};

// Normalized logarithmic curve U(r) = log(1 + k r) / log(1 + k r_max), for
// elastic (delay tolerant) traffic. U(r_max) = 1.
struct Logarithmic {
  double k;      // growth rate, per unit rate
  double r_max;  // rate giving full satisfaction

  friend bool operator==(const Logarithmic&, const Logarithmic&) = default;
};

// Immutable user utility. Construct through make_sigmoid / make_log, which
// validate the parameters.
class UtilityFunction {
 public:
  using Shape = std::variant<Sigmoid, Logarithmic>;

  const Shape& shape() const { return shape_; }
  bool is_sigmoid() const { return std::holds_alternative<Sigmoid>(shape_); }

  // U(r) for r >= 0. Exactly 0 at r = 0. The logarithmic curve is not
  // clamped, so it exceeds 1 beyond r_max.
  double eval(double r) const;

  // ln U(r) for r > 0, computed without forming U first so that it keeps full
  // relative precision where U rounds to 1.
  double log_eval(double r) const;

  // d/dr ln U(r) for r > 0. Strictly positive and strictly decreasing in exact
  // arithmetic; underflows to 0 far past a sigmoid's inflection.
  double dlog(double r) const;

  // Rate where the curvature of U changes sign: b for sigmoids, 0 for logs.
  double inflection_point() const;

  friend bool operator==(const UtilityFunction&, const UtilityFunction&) = default;

 private:
  explicit UtilityFunction(Shape shape) : shape_(shape) {}

  friend UtilityFunction make_sigmoid(double a, double b);
  friend UtilityFunction make_log(double k, double r_max);

  Shape shape_;
};

// Throws ParameterError unless a > 0 and b > 0 (both finite).
UtilityFunction make_sigmoid(double a, double b);

// Throws ParameterError unless k > 0 and r_max > 0 (both finite).
UtilityFunction make_log(double k, double r_max);

// A measured (rate, satisfaction fraction) pair.
struct QoePoint {
  double rate;
  double satisfaction;
};

// Rough sigmoid through two measured satisfaction points: the inflection is
// the rate midpoint and the steepness is the satisfaction slope expressed in
// percent per rate unit. With (200 kbps, 5%) and (740 kbps, 99%) this gives
// b = 470, a ~= 0.174.
//
// Requires 0 < low.rate < high.rate and 0 < low.satisfaction < high.satisfaction < 1.
UtilityFunction fit_sigmoid_from_qoe(QoePoint low, QoePoint high);

}  // namespace upf
