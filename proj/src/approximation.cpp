#include "vilenkin/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vilenkin {

namespace {

double defect(const CylinderGrid2D& f, const CylinderGrid2D& g) {
  double best = 0.0;
  const auto a = f.values();
  const auto b = g.values();
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

void check_scale(const CylinderGrid2D& f, std::size_t L) {
  if (L > f.depth()) {
    throw std::out_of_range("scale " + std::to_string(L) + " exceeds grid depth " +
                            std::to_string(f.depth()));
  }
}

}  // namespace

double block_approx_surrogate(const CylinderGrid2D& f, std::size_t L, std::size_t R) {
  check_scale(f, L);
  check_scale(f, R);
  const auto& ms = f.modulus();
  return defect(f, rect_partial_sum(f, ms.scale(L), ms.scale(R)));
}

double marginal_approx_surrogate_1(const CylinderGrid2D& f, std::size_t L) {
  check_scale(f, L);
  return defect(f, marginal_sum_1(f, f.modulus().scale(L)));
}

double marginal_approx_surrogate_2(const CylinderGrid2D& f, std::size_t R) {
  check_scale(f, R);
  return defect(f, marginal_sum_2(f, f.modulus().scale(R)));
}

ApproxReport approx_report(const CylinderGrid2D& f) {
  ApproxReport report;
  for (std::size_t L = 0; L <= f.depth(); ++L) {
    report.first.push_back(marginal_approx_surrogate_1(f, L));
    report.second.push_back(marginal_approx_surrogate_2(f, L));
    report.block.push_back(block_approx_surrogate(f, L, L));
  }
  return report;
}

CsvTable to_csv(const ApproxReport& report) {
  CsvTable table({"scale", "E1", "E2", "Eblock"});
  for (std::size_t L = 0; L < report.scales(); ++L) {
    table.add_row({format_number(Index{L}), format_number(report.first[L]),
                   format_number(report.second[L]), format_number(report.block[L])});
  }
  return table;
}

double staircase(const std::vector<double>& ladder, const ModulusSequence& ms, Index l) {
  if (ladder.empty()) throw std::invalid_argument("empty ladder");
  std::size_t L = 0;
  while (L + 1 < ladder.size() && ms.scale(L + 1) <= l) ++L;
  return ladder[L];
}

double theorem1_rhs(const ApproxReport& report, const ModulusSequence& ms, Index n, Index m,
                    double constant) {
  if (n < 1 || m < 1) throw std::out_of_range("n and m start at 1");
  double first = 0.0;
  for (Index l = 1; l <= n; ++l) first += std::sqrt(staircase(report.first, ms, l));
  double second = 0.0;
  for (Index r = 1; r <= m; ++r) second += std::sqrt(staircase(report.second, ms, r));
  return constant * (first / static_cast<double>(n) + second / static_cast<double>(m));
}

double theorem1_rhs(const CylinderGrid2D& f, Index n, Index m, double constant) {
  return theorem1_rhs(approx_report(f), f.modulus(), n, m, constant);
}

double approximation_power_average(const ApproxReport& report, const ModulusSequence& ms, Index n,
                                   Index k, double p) {
  if (n < 1 || k < 1) throw std::out_of_range("n and k start at 1");
  double first = 0.0;
  for (Index l = 1; l <= n; ++l) first += std::pow(staircase(report.first, ms, l), p);
  double second = 0.0;
  for (Index r = 1; r <= k; ++r) second += std::pow(staircase(report.second, ms, r), p);
  return first / static_cast<double>(n) + second / static_cast<double>(k);
}

}  // namespace vilenkin
