#pragma once

// Two-dimensional Vilenkin-Fourier partial sums on G_m x G_m, marginal sums,
// strong means with exponential gauges, and the power means that control
// them.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "vilenkin/basis.hpp"
#include "vilenkin/gauge.hpp"

namespace vilenkin {

/// f(x, y) constant on depth-d cylinder products, stored row-major with the
/// x cell as the row: values[x * M_d + y].
class CylinderGrid2D {
public:
  CylinderGrid2D(ModulusSequence ms, std::size_t depth);
  CylinderGrid2D(ModulusSequence ms, std::size_t depth, std::vector<Complex> values);

  /// F(x, y) = f(x) g(y).
  static CylinderGrid2D tensor(const CylinderGrid1D& f, const CylinderGrid1D& g);

  const ModulusSequence& modulus() const noexcept { return ms_; }
  std::size_t depth() const noexcept { return depth_; }
  /// M_d, the side length.
  Index side() const noexcept { return side_; }

  Complex& operator()(Index x, Index y) { return values_[x * side_ + y]; }
  const Complex& operator()(Index x, Index y) const { return values_[x * side_ + y]; }
  std::span<Complex> values() noexcept { return values_; }
  std::span<const Complex> values() const noexcept { return values_; }

  double sup_norm() const noexcept;
  CylinderGrid2D refined(std::size_t depth) const;

private:
  ModulusSequence ms_;
  std::size_t depth_;
  Index side_;
  std::vector<Complex> values_;
};

/// hat f(i, j), stored as coeffs[i * M_d + j].
class Spectrum2D {
public:
  Spectrum2D(ModulusSequence ms, std::size_t depth, std::vector<Complex> coeffs);

  const ModulusSequence& modulus() const noexcept { return ms_; }
  std::size_t depth() const noexcept { return depth_; }
  Index side() const noexcept { return side_; }
  Complex& operator()(Index i, Index j) { return coeffs_[i * side_ + j]; }
  const Complex& operator()(Index i, Index j) const { return coeffs_[i * side_ + j]; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

private:
  ModulusSequence ms_;
  std::size_t depth_;
  Index side_;
  std::vector<Complex> coeffs_;
};

Spectrum2D forward_transform_2d(const CylinderGrid2D& f);
CylinderGrid2D inverse_transform_2d(const Spectrum2D& s);

/// S_{M,N} f = sum_{i<M} sum_{j<N} hat f(i,j) psi_i(x) psi_j(y).
CylinderGrid2D rect_partial_sum(const CylinderGrid2D& f, Index M, Index N);
/// Partial sum in the first variable only.
CylinderGrid2D marginal_sum_1(const CylinderGrid2D& f, Index n);
/// Partial sum in the second variable only.
CylinderGrid2D marginal_sum_2(const CylinderGrid2D& f, Index n);

/// The matrix psi_k(cell), k and cell below M_d, stored as [k * M_d + cell].
std::vector<Complex> character_matrix(const ModulusSequence& ms, std::size_t d);

/// Visits S_{l,r} f for r in [r_lo, r_hi] (outer) and l in [l_lo, l_hi]
/// (inner), both ascending. The callback receives the M_d x M_d grid of
/// S_{l,r} f in the CylinderGrid2D layout; the span is only valid during the
/// call.
using PartialSumVisitor = std::function<void(Index l, Index r, std::span<const Complex> sum)>;
void for_each_rect_partial_sum(const Spectrum2D& s, Index l_lo, Index l_hi, Index r_lo, Index r_hi,
                               const PartialSumVisitor& visit);

/// Sup-norm means sup_cells (1/(n m)) sum_{l=1}^{n} sum_{r=1}^{m} term(|S_lr f - f|)
/// for every requested (n, m). Entries are +inf once a term is +inf.
struct MeanTable {
  std::vector<Index> ns;
  std::vector<Index> ms;
  std::vector<double> values;  // values[i * ms.size() + j] for (ns[i], ms[j])

  double at(std::size_t i, std::size_t j) const { return values[i * ms.size() + j]; }
  /// Value for the pair (n, m); throws std::out_of_range if not tabulated.
  double value(Index n, Index m) const;
};

MeanTable deviation_mean_table(const CylinderGrid2D& f, std::span<const Index> ns,
                               std::span<const Index> ms,
                               const std::function<double(double)>& term);

/// Exponents above this are treated as overflow of e^{g}.
inline constexpr double kExponentLimit = 700.0;

struct StrongMean {
  double value = 0.0;
  bool overflowed = false;
};

/// || (1/(n m)) sum_{l=1}^{n} sum_{r=1}^{m} (e^{g(|S_lr f - f|)} - 1) ||_C.
/// Any exponent above kExponentLimit reports +inf with the overflow flag.
StrongMean strong_mean_2d(const CylinderGrid2D& f, Index n, Index m, const GaugeFunction& g);
MeanTable strong_mean_table(const CylinderGrid2D& f, std::span<const Index> ns,
                            std::span<const Index> ms, const GaugeFunction& g);

/// sup_x (1/n) sum_{k=1}^{n} g(|S_k f(x) - f(x)|).
StrongMean fridli_schipp_mean_1d(const CylinderGrid1D& f, Index n, const GaugeFunction& g);
/// The same mean for every n in `ns`, in order.
std::vector<StrongMean> fridli_schipp_table(const CylinderGrid1D& f, std::span<const Index> ns,
                                            const GaugeFunction& g);

struct BlockPowerMean {
  std::vector<double> cells;  // per-cell mean, CylinderGrid2D layout
  double sup = 0.0;
};

/// { (1/(M_A M_B)) sum_{n=M_A}^{M_{A+1}-1} sum_{l=M_B}^{M_{B+1}-1} |S_nl f|^p }^{1/p}
/// at every cell. Requires A, B < d; throws std::domain_error for p <= 0.
BlockPowerMean power_mean_block(const CylinderGrid2D& f, std::size_t A, std::size_t B, double p);

/// int_{G_m^p} (1/M_n) | sum_{l=M_n}^{M_{n+1}-1} prod_{k=1}^{p} D_l(s_k) | dmu,
/// evaluated as an exact sum over the M_{n+1}^p product cells. Throws
/// BudgetExceeded when M_{n+1}^p exceeds `cell_budget`.
double glukhov_integral(const ModulusSequence& ms, unsigned p, std::size_t n,
                        double cell_budget = 1e7);

}  // namespace vilenkin
