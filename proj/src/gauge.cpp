#include "vilenkin/gauge.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "vilenkin/csv.hpp"

namespace vilenkin {

namespace {

std::vector<double> log_lattice(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return out;
}

double parse_real(std::string_view text, std::string_view spec) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw std::invalid_argument("bad number '" + std::string(text) + "' in gauge '" +
                                std::string(spec) + "'");
  }
  return value;
}

// "A=2,alpha=1.5" or a single positional value stored under `positional`.
std::map<std::string, double> parse_params(std::string_view body, std::string_view spec,
                                           const std::string& positional) {
  std::map<std::string, double> out;
  std::size_t pos = 0;
  while (pos <= body.size() && !body.empty()) {
    auto end = body.find_first_of(",;", pos);
    if (end == std::string_view::npos) end = body.size();
    auto token = body.substr(pos, end - pos);
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) {
      if (positional.empty() || out.count(positional)) {
        throw std::invalid_argument("gauge '" + std::string(spec) + "' needs key=value parameters");
      }
      out[positional] = parse_real(token, spec);
    } else {
      out[std::string(token.substr(0, eq))] = parse_real(token.substr(eq + 1), spec);
    }
    pos = end + 1;
    if (end == body.size()) break;
  }
  return out;
}

double take(std::map<std::string, double>& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const double v = it->second;
  params.erase(it);
  return v;
}

std::string tag(const std::string& name, std::initializer_list<std::pair<const char*, double>> params) {
  std::string out = name;
  char sep = ':';
  for (const auto& [key, value] : params) {
    out += sep;
    out += key;
    out += '=';
    out += format_number(value);
    sep = ';';
  }
  return out;
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string("gauge parameter ") + what + " must be positive");
  }
}

}  // namespace

GaugeFunction::GaugeFunction(std::string descriptor, Evaluator evaluator)
    : descriptor_(std::move(descriptor)), evaluator_(std::move(evaluator)) {
  if (!evaluator_) throw std::invalid_argument("gauge without evaluator");
  if (evaluator_(0.0) != 0.0) {
    throw std::invalid_argument("gauge " + descriptor_ + " does not vanish at 0");
  }
  double prev = 0.0;
  for (double u : log_lattice(1e-6, 1e6, 241)) {
    const double v = evaluator_(u);
    if (std::isnan(v) || v < 0.0 || v < prev - 1e-12 * std::abs(prev)) {
      throw std::invalid_argument("gauge " + descriptor_ + " is not monotone on [0, 1e6]");
    }
    prev = v;
  }
}

GaugeFunction GaugeFunction::zero() {
  return GaugeFunction("zero", [](double) { return 0.0; });
}

GaugeFunction GaugeFunction::power(double scale, double exponent) {
  require_positive(scale, "A");
  require_positive(exponent, "alpha");
  return GaugeFunction(tag("pow", {{"A", scale}, {"alpha", exponent}}),
                       [scale, exponent](double u) { return scale * std::pow(u, exponent); });
}

GaugeFunction GaugeFunction::exp_sqrt(double scale) {
  require_positive(scale, "A");
  return GaugeFunction(tag("exp-sqrt", {{"A", scale}}),
                       [scale](double u) { return scale * std::sqrt(u); });
}

GaugeFunction GaugeFunction::expm1(double scale) {
  require_positive(scale, "A");
  return GaugeFunction(tag("expm1", {{"A", scale}}),
                       [scale](double u) { return std::expm1(scale * u); });
}

GaugeFunction GaugeFunction::log1p(double scale) {
  require_positive(scale, "A");
  return GaugeFunction(tag("log1p", {{"A", scale}}),
                       [scale](double u) { return scale * std::log1p(u); });
}

GaugeFunction GaugeFunction::sqrt_log(double scale) {
  require_positive(scale, "A");
  return GaugeFunction(tag("sqrt-log", {{"A", scale}}), [scale](double u) {
    return scale * std::sqrt(u) * std::log(std::numbers::e + u);
  });
}

GaugeFunction GaugeFunction::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string name(spec.substr(0, colon));
  const std::string_view body = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  auto finish = [&](std::map<std::string, double>& params) {
    if (!params.empty()) {
      throw std::invalid_argument("unknown parameter '" + params.begin()->first + "' in gauge '" +
                                  std::string(spec) + "'");
    }
  };

  if (name == "zero") {
    if (!body.empty()) throw std::invalid_argument("gauge 'zero' takes no parameters");
    return zero();
  }
  if (name == "pow") {
    auto params = parse_params(body, spec, "alpha");
    const double alpha = take(params, "alpha", NAN);
    const double scale = take(params, "A", 1.0);
    finish(params);
    if (std::isnan(alpha)) throw std::invalid_argument("gauge 'pow' needs an exponent");
    return power(scale, alpha);
  }
  const std::map<std::string, GaugeFunction (*)(double)> scaled = {
      {"exp-sqrt", &exp_sqrt}, {"sqrt", &exp_sqrt},   {"expm1", &expm1},
      {"log1p", &log1p},       {"sqrt-log", &sqrt_log}};
  if (name == "linear") {
    auto params = parse_params(body, spec, "A");
    const double scale = take(params, "A", 1.0);
    finish(params);
    return power(scale, 1.0);
  }
  if (auto it = scaled.find(name); it != scaled.end()) {
    auto params = parse_params(body, spec, "A");
    const double scale = take(params, "A", 1.0);
    finish(params);
    return it->second(scale);
  }
  throw std::invalid_argument("unknown gauge '" + std::string(spec) + "'");
}

GaugeFunction GaugeFunction::one_dimensional_profile(const GaugeFunction& phi) {
  return GaugeFunction("profile(" + phi.descriptor() + ")",
                       [phi](double u) { return phi(u * u); });
}

GaugeFunction GaugeFunction::two_dimensional_lift(const GaugeFunction& psi) {
  return GaugeFunction("lift(" + psi.descriptor() + ")",
                       [psi](double u) { return psi(std::sqrt(u)); });
}

DominanceReport gauge_dominates(const GaugeFunction& phi, const GaugeFunction& psi, double u_max) {
  if (!(u_max > 10.0)) throw std::invalid_argument("u_max must exceed 10");
  const auto lattice = log_lattice(u_max * 1e-8, u_max, 321);
  auto ratio = [&](double u) {
    const double num = phi(u);
    const double den = psi(u);
    if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
    return num / den;
  };

  DominanceReport report;
  // Top decade: the last 41 lattice points span [u_max/10, u_max].
  const std::size_t top = lattice.size() - 41;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  bool finite = true;
  for (std::size_t i = top; i < lattice.size(); ++i) {
    const double r = ratio(lattice[i]);
    if (!std::isfinite(r)) {
      finite = false;
      continue;
    }
    report.limsup_estimate = std::max(report.limsup_estimate, r);
    if (r > 0.0) {
      const double x = std::log(lattice[i]);
      const double y = std::log(r);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++count;
    }
  }
  report.ratio_at_max = ratio(u_max);
  if (!finite) {
    report.limsup_estimate = INFINITY;
    report.log_slope = INFINITY;
    report.dominated = false;
    return report;
  }
  if (count >= 2) {
    const double n = static_cast<double>(count);
    report.log_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  report.dominated = report.log_slope <= 0.05;
  return report;
}

}  // namespace vilenkin
