#include "vilenkin/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace vilenkin {

namespace {

constexpr Index kScanLimit = 10'000'000;

Index saturating_pow(Index base, std::size_t exponent) {
  Index out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (out > std::numeric_limits<Index>::max() / base) return std::numeric_limits<Index>::max();
    out *= base;
  }
  return out;
}

std::size_t a_from(Index B, std::size_t j, double c_prime) {
  return static_cast<std::size_t>(std::floor(static_cast<double>(j) * static_cast<double>(B) / c_prime)) + 1;
}

double log_sum_exp_add(double acc, double term) {
  if (acc == -INFINITY) return term;
  if (term == -INFINITY) return acc;
  const double hi = std::max(acc, term);
  return hi + std::log1p(std::exp(std::min(acc, term) - hi));
}

}  // namespace

double CounterexampleParams::ratio_threshold(std::size_t j) const {
  return 5.0 * static_cast<double>(j) * std::log(static_cast<double>(ms.bound())) / c_prime;
}

CounterexampleParams choose_params(const ModulusSequence& ms, const GaugeFunction& psi,
                                   double c_prime, std::size_t blocks, std::size_t depth_budget) {
  if (!(c_prime > 0.0) || !std::isfinite(c_prime)) throw std::invalid_argument("c' must be positive");
  const auto probe = gauge_dominates(psi, GaugeFunction::power(1.0, 1.0), 1e6);
  if (probe.dominated) {
    throw std::invalid_argument("gauge " + psi.descriptor() +
                                " is not superlinear on the probe lattice (log slope of psi(u)/u = " +
                                std::to_string(probe.log_slope) + ")");
  }

  CounterexampleParams params{ms, psi, c_prime, {0}, {1}, {0}};
  const std::size_t max_depth = std::min(depth_budget, ms.depth());
  for (std::size_t j = 1; j <= blocks; ++j) {
    const double threshold = params.ratio_threshold(j);
    Index B = 2 * params.B.back() + 1;
    for (;; ++B) {
      if (B > kScanLimit) {
        throw std::invalid_argument("no B_" + std::to_string(j) + " below " +
                                    std::to_string(kScanLimit) + " satisfies the growth constraints");
      }
      const double b = static_cast<double>(B);
      if (psi(b) / b > threshold && a_from(B, j, c_prime) > params.A.back()) break;
    }
    const std::size_t A = a_from(B, j, c_prime);
    if (2 * A > max_depth) {
      throw BudgetExceeded("block " + std::to_string(j) + " needs depth 2A_" + std::to_string(j) +
                           " = " + std::to_string(2 * A) + " (B_" + std::to_string(j) + " = " +
                           std::to_string(B) + ", A_" + std::to_string(j) + " = " +
                           std::to_string(A) + "), depth budget is " + std::to_string(max_depth));
    }
    Index N = 0;
    for (std::size_t k = params.A.back(); k < A; ++k) N += (ms.modulus(2 * k) / 2) * ms.scale(2 * k);
    params.B.push_back(B);
    params.A.push_back(A);
    params.N.push_back(N);
  }
  return params;
}

ParamCheck check_params(const CounterexampleParams& params) {
  ParamCheck check;
  for (std::size_t j = 1; j <= params.blocks(); ++j) {
    const double b = static_cast<double>(params.B[j]);
    check.doubling = check.doubling && params.B[j] > 2 * params.B[j - 1];
    check.ratio = check.ratio && params.psi(b) / b > params.ratio_threshold(j);
    check.increasing = check.increasing && params.A[j] > params.A[j - 1];
    check.scale_bound =
        check.scale_bound && params.N[j] <= saturating_pow(params.ms.bound(), 2 * params.A[j]);
  }
  return check;
}

std::vector<Index> block_support(const CounterexampleParams& params, std::size_t j, std::size_t d) {
  if (j < 1 || j > params.blocks()) throw std::out_of_range("block index out of range");
  if (d < 2 * params.A[j] || d > params.ms.depth()) throw std::out_of_range("bad support depth");
  const auto& ms = params.ms;
  std::vector<Index> cells;
  for (std::size_t s = params.A[j - 1]; s < params.A[j]; ++s) {
    const Index lead = (ms.modulus(2 * s) - 1) * ms.scale(2 * s);
    const Index stride = ms.scale(2 * s + 1);
    const Index count = ms.scale(d) / stride;
    for (Index t = 0; t < count; ++t) cells.push_back(lead + t * stride);
  }
  return cells;
}

BlockFunction build_block(const CounterexampleParams& params, std::size_t j) {
  if (j < 1 || j > params.blocks()) throw std::out_of_range("block index out of range");
  const std::size_t d = 2 * params.A[j];
  if (d > params.ms.depth()) throw BudgetExceeded("block depth exceeds K");
  const RootTable roots(params.ms);
  CylinderGrid1D grid(params.ms, d);
  const double amplitude = 1.0 / static_cast<double>(j + 1);
  for (Index cell : block_support(params, j, d)) {
    const Complex kernel = dirichlet_on_cell(params.ms, roots, d, params.N[j], cell);
    const double modulus = std::abs(kernel);
    const Complex phase = modulus < 1e-9 ? Complex{1.0, 0.0} : kernel / modulus;
    grid[cell] = amplitude * phase;
  }
  return {j, std::move(grid)};
}

CylinderGrid1D build_f(const CounterexampleParams& params) {
  if (params.blocks() == 0) return CylinderGrid1D(params.ms, 0);
  CylinderGrid1D f(params.ms, params.depth());
  for (std::size_t j = 1; j <= params.blocks(); ++j) {
    const auto block = build_block(params, j);
    const Index coarse = block.grid.size();
    for (Index c = 0; c < f.size(); ++c) f[c] += block.grid[c % coarse];
  }
  return f;
}

CylinderGrid2D build_F(const CounterexampleParams& params) {
  const auto f = build_f(params);
  return CylinderGrid2D::tensor(f, f);
}

// Counterexample -------------------------------------------------------------

Counterexample::Counterexample(CounterexampleParams params)
    : params_(std::move(params)), f_(build_f(params_)), spectrum_(forward_transform(f_)) {
  for (std::size_t j = 1; j <= params_.blocks(); ++j) blocks_.push_back(build_block(params_, j));
}

Complex Counterexample::partial_sum_at_zero(std::size_t k) const {
  return vilenkin::partial_sum_at_zero(spectrum_, kernel_index(k));
}

JDecomposition Counterexample::j_decomposition(std::size_t k) const {
  if (k < 1 || k > params_.blocks()) throw std::out_of_range("block index out of range");
  const auto& ms = params_.ms;
  const std::size_t d = params_.depth();
  const RootTable roots(ms);
  const Index N = kernel_index(k);
  const double weight = 1.0 / static_cast<double>(ms.scale(d));
  JDecomposition out;
  for (const auto& block : blocks_) {
    const Index coarse = block.grid.size();
    Complex integral{};
    for (Index cell : block_support(params_, block.j, d)) {
      integral += block.grid[cell % coarse] * std::conj(dirichlet_on_cell(ms, roots, d, N, cell));
    }
    const double value = std::abs(integral * weight);
    if (block.j == k)
      out.J1 = value;
    else if (block.j > k)
      out.J2 += value;
    else
      out.J3 += value;
  }
  return out;
}

double Counterexample::j2_bound(std::size_t k) const {
  const auto& ms = params_.ms;
  const double N = static_cast<double>(kernel_index(k));
  double bound = 0.0;
  for (std::size_t j = k + 1; j <= params_.blocks(); ++j) {
    double inner = 0.0;
    for (std::size_t s = params_.A[j - 1]; s < params_.A[j]; ++s) inner += N / static_cast<double>(ms.scale(2 * s));
    bound += inner / static_cast<double>(j + 1);
  }
  return bound;
}

double Counterexample::kernel_lower_constant(std::size_t k) const {
  if (k < 1 || k > params_.blocks()) throw std::out_of_range("block index out of range");
  const auto& ms = params_.ms;
  const std::size_t d = params_.depth();
  const RootTable roots(ms);
  double best = INFINITY;
  for (Index cell : block_support(params_, k, d)) {
    // Recover the shell s from the position of the first nonzero digit.
    std::size_t p = 0;
    Index rest = cell;
    while (rest % ms.modulus(p) == 0) {
      rest /= ms.modulus(p);
      ++p;
    }
    const double value = std::abs(dirichlet_on_cell(ms, roots, d, kernel_index(k), cell));
    best = std::min(best, value / static_cast<double>(ms.scale(p)));
  }
  return best;
}

double Counterexample::phase_alignment_error(std::size_t j) const {
  const auto& block = blocks_.at(j - 1);
  const auto& ms = params_.ms;
  const std::size_t d = block.grid.depth();
  const RootTable roots(ms);
  double worst = 0.0;
  for (Index cell : block_support(params_, j, d)) {
    const Complex kernel = dirichlet_on_cell(ms, roots, d, kernel_index(j), cell);
    const Complex lhs = block.grid[cell] * std::conj(kernel);
    const double rhs = std::abs(kernel) / static_cast<double>(j + 1);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

DivergenceDiagnostic Counterexample::divergence_diagnostic(std::size_t k) const {
  DivergenceDiagnostic out;
  out.partial_sum_abs = std::abs(partial_sum_at_zero(k));
  // phi(|S_{N,N}(F;0,0)|) = phi(|S_N(f;0)|^2) = psi(|S_N(f;0)|)
  const double exponent = params_.psi(out.partial_sum_abs);
  out.overflowed = !std::isfinite(exponent);
  out.log_value = out.overflowed ? INFINITY
                                 : exponent - 2.0 * std::log(static_cast<double>(kernel_index(k)));
  return out;
}

std::optional<double> Counterexample::full_log_mean(std::size_t k, double max_terms) const {
  const Index N = kernel_index(k);
  if (static_cast<double>(N) * static_cast<double>(N) > max_terms) return std::nullopt;
  std::vector<double> s_abs(N);
  Complex running{};
  for (Index i = 1; i <= N; ++i) {
    running += spectrum_[i - 1];
    s_abs[i - 1] = std::abs(running);
  }
  const auto phi = GaugeFunction::two_dimensional_lift(params_.psi);
  double acc = -INFINITY;
  for (Index i = 0; i < N; ++i)
    for (Index j = 0; j < N; ++j) acc = log_sum_exp_add(acc, phi(s_abs[i] * s_abs[j]));
  return acc - 2.0 * std::log(static_cast<double>(N));
}

CsvTable Counterexample::report() const {
  CsvTable table({"k", "A_k", "N_A_k", "J1", "J2", "J3", "abs_S", "B_k", "diagnostic_log"});
  for (std::size_t k = 1; k <= params_.blocks(); ++k) {
    const auto j = j_decomposition(k);
    const auto diag = divergence_diagnostic(k);
    table.add_row({format_number(Index{k}), format_number(Index{params_.A[k]}),
                   format_number(params_.N[k]), format_number(j.J1), format_number(j.J2),
                   format_number(j.J3), format_number(diag.partial_sum_abs),
                   format_number(params_.B[k]), format_number(diag.log_value)});
  }
  return table;
}

JDecomposition j_decomposition(const CounterexampleParams& params, std::size_t k) {
  return Counterexample(params).j_decomposition(k);
}

DivergenceDiagnostic divergence_diagnostic(const CounterexampleParams& params, std::size_t k) {
  return Counterexample(params).divergence_diagnostic(k);
}

}  // namespace vilenkin
