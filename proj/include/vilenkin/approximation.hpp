#pragma once

// Computable surrogates for best uniform approximation by Vilenkin
// polynomials. Each surrogate is the sup-norm defect of a partial sum on the
// scale ladder, which brackets the true best approximation E by E <= E~ <= 2E.

#include <vector>

#include "vilenkin/csv.hpp"
#include "vilenkin/summability.hpp"

namespace vilenkin {

/// ||f - S_{M_L, M_R} f||_C
double block_approx_surrogate(const CylinderGrid2D& f, std::size_t L, std::size_t R);
/// ||f - S^{(1)}_{M_L} f||_C
double marginal_approx_surrogate_1(const CylinderGrid2D& f, std::size_t L);
/// ||f - S^{(2)}_{M_R} f||_C
double marginal_approx_surrogate_2(const CylinderGrid2D& f, std::size_t R);

/// Ladder surrogates for scales 0..d.
struct ApproxReport {
  std::vector<double> first;   // E^{(1)} surrogate at M_L
  std::vector<double> second;  // E^{(2)} surrogate at M_R
  std::vector<double> block;   // E_{M_L, M_L} surrogate

  std::size_t scales() const noexcept { return first.size(); }
};

ApproxReport approx_report(const CylinderGrid2D& f);
CsvTable to_csv(const ApproxReport& report);

/// Per-degree value from ladder values: E_l := ladder[L] for M_L <= l < M_{L+1},
/// and ladder[d] for l >= M_d.
double staircase(const std::vector<double>& ladder, const ModulusSequence& ms, Index l);

/// (c/n) sum_{l=1}^{n} sqrt(E_l^{(1)}) + (c/m) sum_{r=1}^{m} sqrt(E_r^{(2)})
/// with staircase surrogates.
double theorem1_rhs(const ApproxReport& report, const ModulusSequence& ms, Index n, Index m,
                    double constant);
double theorem1_rhs(const CylinderGrid2D& f, Index n, Index m, double constant);

/// (1/n) sum_{l=1}^{n} (E_l^{(1)})^p + (1/k) sum_{r=1}^{k} (E_r^{(2)})^p with
/// staircase surrogates: the braced factor of the power-mean bound.
double approximation_power_average(const ApproxReport& report, const ModulusSequence& ms, Index n,
                                   Index k, double p);

}  // namespace vilenkin
