#pragma once

// Monotone gauges u -> g(u) on [0, inf) with g(0) = 0, as used by the strong
// means, and the numerical comparison of two gauges at infinity.

#include <functional>
#include <string>
#include <string_view>

namespace vilenkin {

class GaugeFunction {
public:
  using Evaluator = std::function<double(double)>;

  /// Throws std::invalid_argument unless g(0) = 0 and g is non-decreasing on
  /// a lattice of test points in [0, 1e6].
  GaugeFunction(std::string descriptor, Evaluator evaluator);

  double operator()(double u) const { return evaluator_(u); }
  const std::string& descriptor() const noexcept { return descriptor_; }

  /// u -> 0
  static GaugeFunction zero();
  /// u -> scale * u^exponent
  static GaugeFunction power(double scale, double exponent);
  /// u -> scale * sqrt(u), the gauge of the exponential means e^{A|.|^{1/2}}
  static GaugeFunction exp_sqrt(double scale);
  /// u -> e^{scale * u} - 1
  static GaugeFunction expm1(double scale);
  /// u -> scale * ln(1 + u)
  static GaugeFunction log1p(double scale);
  /// u -> scale * sqrt(u) * ln(e + u), for which g(u)/sqrt(u) is unbounded
  static GaugeFunction sqrt_log(double scale);

  /// Parses "zero", "pow:1.5", "pow:A=2,alpha=1.5", "exp-sqrt:A=1",
  /// "linear:A=1", "expm1:A=1", "log1p:A=1", "sqrt-log:A=1". Parameters may
  /// be separated by ',' or ';'. Throws std::invalid_argument.
  static GaugeFunction parse(std::string_view spec);

  /// Given the two-dimensional gauge phi(u) = lambda(u) sqrt(u), the
  /// one-dimensional gauge psi(u) = lambda(u^2) u = phi(u^2).
  static GaugeFunction one_dimensional_profile(const GaugeFunction& phi);
  /// Inverse of one_dimensional_profile: phi(u) = psi(sqrt(u)).
  static GaugeFunction two_dimensional_lift(const GaugeFunction& psi);

private:
  std::string descriptor_;
  Evaluator evaluator_;
};

struct DominanceReport {
  bool dominated = false;
  /// max of phi/psi over the top decade [u_max/10, u_max]
  double limsup_estimate = 0.0;
  /// least-squares slope of ln(phi/psi) against ln(u) over the top decade
  double log_slope = 0.0;
  double ratio_at_max = 0.0;
};

/// Estimates limsup_{u->inf} phi(u)/psi(u) on a log-spaced lattice of
/// (0, u_max]. The pair counts as dominated when the ratio stays finite and
/// its log-log slope over the top decade does not exceed 0.05.
DominanceReport gauge_dominates(const GaugeFunction& phi, const GaugeFunction& psi, double u_max);

}  // namespace vilenkin
