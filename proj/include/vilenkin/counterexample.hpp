#pragma once

// The divergence construction showing that the exponent 1/2 in the strong
// means cannot be raised: phase-aligned blocks f_j whose partial sums at zero
// grow, the tensor F(x, y) = f(x) f(y), and the diagnostics that track it.

#include <optional>
#include <vector>

#include "vilenkin/csv.hpp"
#include "vilenkin/gauge.hpp"
#include "vilenkin/summability.hpp"

namespace vilenkin {

/// Parameter ladder of the construction. Entry 0 of every sequence is the
/// seed (B_0 = 0, A_0 = 1, N_{A_0} = 0); blocks run over j = 1..J.
struct CounterexampleParams {
  ModulusSequence ms;
  GaugeFunction psi;
  double c_prime;
  std::vector<Index> B;
  std::vector<std::size_t> A;
  std::vector<Index> N;

  std::size_t blocks() const noexcept { return A.size() - 1; }
  /// 2 A_J, the depth at which f is represented exactly.
  std::size_t depth() const noexcept { return blocks() == 0 ? 0 : 2 * A.back(); }
  /// 5 j ln(a) / c'
  double ratio_threshold(std::size_t j) const;
};

/// Chooses B_j as the smallest integer with B_j > 2 B_{j-1},
/// psi(B_j)/B_j > 5 j ln(a)/c' and A_j = floor(j B_j / c') + 1 > A_{j-1};
/// then N_{A_j} = sum_{k=A_{j-1}}^{A_j - 1} floor(m_{2k}/2) M_{2k}.
/// Throws std::invalid_argument when psi(u)/u does not grow on the probe
/// lattice, and BudgetExceeded naming the first block whose depth 2 A_j
/// exceeds min(depth_budget, K).
CounterexampleParams choose_params(const ModulusSequence& ms, const GaugeFunction& psi,
                                   double c_prime, std::size_t blocks, std::size_t depth_budget);

struct ParamCheck {
  bool doubling = true;    // B_j > 2 B_{j-1}
  bool ratio = true;       // psi(B_j)/B_j > 5 j ln a / c'
  bool increasing = true;  // A_j > A_{j-1}
  bool scale_bound = true; // N_{A_j} <= a^{2 A_j}
  bool ok() const noexcept { return doubling && ratio && increasing && scale_bound; }
};

ParamCheck check_params(const CounterexampleParams& params);

struct BlockFunction {
  std::size_t j;
  CylinderGrid1D grid;  // depth 2 A_j
};

/// f_j = (1/(j+1)) e^{i arg D_{N_{A_j}}} on the cylinders with
/// x_0 = ... = x_{2s-1} = 0, x_{2s} = m_{2s} - 1 for A_{j-1} <= s < A_j, and 0
/// elsewhere. Where D_{N_{A_j}} vanishes the phase is 1.
BlockFunction build_block(const CounterexampleParams& params, std::size_t j);
/// f = sum_j f_j at depth 2 A_J.
CylinderGrid1D build_f(const CounterexampleParams& params);
/// F(x, y) = f(x) f(y).
CylinderGrid2D build_F(const CounterexampleParams& params);

struct JDecomposition {
  double J1 = 0.0;  // |int f_k conj D_N|
  double J2 = 0.0;  // sum_{j>k} |int f_j conj D_N|
  double J3 = 0.0;  // sum_{j<k} |int f_j conj D_N|
};

struct DivergenceDiagnostic {
  double partial_sum_abs = 0.0;  // |S_N(f; 0)|
  /// ln( e^{phi(|S_{N,N}(F;0,0)|)} / N^2 ) = psi(|S_N(f;0)|) - 2 ln N
  double log_value = 0.0;
  bool overflowed = false;
};

/// The construction with its blocks, f and spectrum built once.
class Counterexample {
public:
  explicit Counterexample(CounterexampleParams params);

  const CounterexampleParams& params() const noexcept { return params_; }
  const std::vector<BlockFunction>& blocks() const noexcept { return blocks_; }
  const CylinderGrid1D& f() const noexcept { return f_; }

  /// N_{A_k}
  Index kernel_index(std::size_t k) const { return params_.N.at(k); }
  /// S_{N_{A_k}}(f; 0)
  Complex partial_sum_at_zero(std::size_t k) const;
  JDecomposition j_decomposition(std::size_t k) const;
  /// sum_{j=k+1}^{J} (1/(j+1)) sum_{s=A_{j-1}}^{A_j - 1} N_{A_k} / M_{2s}
  double j2_bound(std::size_t k) const;
  /// min over A_{k-1} <= s < A_k and t in I_{2s+1}(0,...,0, m_{2s}-1) of
  /// |D_{N_{A_k}}(t)| / M_{2s}.
  double kernel_lower_constant(std::size_t k) const;
  /// max over support cells of | f_j conj(D_{N_{A_j}}) - |D_{N_{A_j}}|/(j+1) |
  double phase_alignment_error(std::size_t j) const;
  DivergenceDiagnostic divergence_diagnostic(std::size_t k) const;
  /// ln( (1/N^2) sum_{i,j=1}^{N} e^{phi(|S_ij(F;0,0)|)} ) through the rank-one
  /// identity S_ij(F;0,0) = S_i(f;0) S_j(f;0); empty when N^2 > max_terms.
  std::optional<double> full_log_mean(std::size_t k, double max_terms = 1.6e7) const;

  /// k, A_k, N_{A_k}, J1, J2, J3, |S|, B_k, diagnostic_log
  CsvTable report() const;

private:
  CounterexampleParams params_;
  std::vector<BlockFunction> blocks_;
  CylinderGrid1D f_;
  Spectrum1D spectrum_;
};

JDecomposition j_decomposition(const CounterexampleParams& params, std::size_t k);
DivergenceDiagnostic divergence_diagnostic(const CounterexampleParams& params, std::size_t k);

/// Support cells of block j at depth d >= 2 A_j, grouped by shell s.
std::vector<Index> block_support(const CounterexampleParams& params, std::size_t j, std::size_t d);

}  // namespace vilenkin
