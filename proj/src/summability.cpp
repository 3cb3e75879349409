#include "vilenkin/summability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace vilenkin {

// Grids ----------------------------------------------------------------------

CylinderGrid2D::CylinderGrid2D(ModulusSequence ms, std::size_t depth)
    : ms_(std::move(ms)), depth_(depth) {
  if (depth_ > ms_.depth()) throw std::out_of_range("grid depth exceeds K");
  side_ = ms_.scale(depth_);
  values_.assign(side_ * side_, Complex{});
}

CylinderGrid2D::CylinderGrid2D(ModulusSequence ms, std::size_t depth, std::vector<Complex> values)
    : ms_(std::move(ms)), depth_(depth), values_(std::move(values)) {
  if (depth_ > ms_.depth()) throw std::out_of_range("grid depth exceeds K");
  side_ = ms_.scale(depth_);
  if (values_.size() != side_ * side_) {
    throw std::invalid_argument("2D grid needs M_d^2 values");
  }
}

CylinderGrid2D CylinderGrid2D::tensor(const CylinderGrid1D& f, const CylinderGrid1D& g) {
  if (!(f.modulus() == g.modulus()) || f.depth() != g.depth()) {
    throw StructuralError("tensor factors must share modulus sequence and depth");
  }
  CylinderGrid2D out(f.modulus(), f.depth());
  for (Index x = 0; x < out.side(); ++x)
    for (Index y = 0; y < out.side(); ++y) out(x, y) = f[x] * g[y];
  return out;
}

double CylinderGrid2D::sup_norm() const noexcept {
  double best = 0.0;
  for (const auto& v : values_) best = std::max(best, std::abs(v));
  return best;
}

CylinderGrid2D CylinderGrid2D::refined(std::size_t depth) const {
  if (depth < depth_) throw std::invalid_argument("refinement cannot lower the depth");
  CylinderGrid2D out(ms_, depth);
  for (Index x = 0; x < out.side(); ++x)
    for (Index y = 0; y < out.side(); ++y) out(x, y) = (*this)(x % side_, y % side_);
  return out;
}

Spectrum2D::Spectrum2D(ModulusSequence ms, std::size_t depth, std::vector<Complex> coeffs)
    : ms_(std::move(ms)), depth_(depth), coeffs_(std::move(coeffs)) {
  if (depth_ > ms_.depth()) throw std::out_of_range("spectrum depth exceeds K");
  side_ = ms_.scale(depth_);
  if (coeffs_.size() != side_ * side_) throw std::invalid_argument("2D spectrum needs M_d^2 values");
}

// Transforms -----------------------------------------------------------------

namespace {

enum class Axis { first, second, both };

void transform_axes(std::vector<Complex>& data, const ModulusSequence& ms, std::size_t d, Axis axis,
                    TransformDirection dir) {
  RootTable roots(ms);
  const Index side = ms.scale(d);
  if (axis != Axis::first) {
    // Along y: each row x is contiguous.
    for (Index x = 0; x < side; ++x) transform_strided(data, ms, roots, d, x * side, 1, dir);
  }
  if (axis != Axis::second) {
    // Along x: column y has stride M_d.
    for (Index y = 0; y < side; ++y) transform_strided(data, ms, roots, d, y, side, dir);
  }
}

void check_index(Index n, Index side, const char* what) {
  if (n > side) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(n) + " exceeds M_d = " +
                            std::to_string(side));
  }
}

CylinderGrid2D truncate(const CylinderGrid2D& f, Index rows, Index cols, Axis axis) {
  std::vector<Complex> buf(f.values().begin(), f.values().end());
  const Index side = f.side();
  transform_axes(buf, f.modulus(), f.depth(), axis, TransformDirection::forward);
  for (Index i = 0; i < side; ++i)
    for (Index j = 0; j < side; ++j)
      if (i >= rows || j >= cols) buf[i * side + j] = {};
  transform_axes(buf, f.modulus(), f.depth(), axis, TransformDirection::inverse);
  return CylinderGrid2D(f.modulus(), f.depth(), std::move(buf));
}

std::vector<Index> sorted_unique(std::span<const Index> in, Index side, const char* what) {
  std::vector<Index> out(in.begin(), in.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw std::invalid_argument(std::string(what) + " list is empty");
  if (out.front() < 1) throw std::out_of_range(std::string(what) + " indices start at 1");
  check_index(out.back(), side, what);
  return out;
}

}  // namespace

Spectrum2D forward_transform_2d(const CylinderGrid2D& f) {
  std::vector<Complex> buf(f.values().begin(), f.values().end());
  transform_axes(buf, f.modulus(), f.depth(), Axis::both, TransformDirection::forward);
  return Spectrum2D(f.modulus(), f.depth(), std::move(buf));
}

CylinderGrid2D inverse_transform_2d(const Spectrum2D& s) {
  std::vector<Complex> buf(s.coeffs().begin(), s.coeffs().end());
  transform_axes(buf, s.modulus(), s.depth(), Axis::both, TransformDirection::inverse);
  return CylinderGrid2D(s.modulus(), s.depth(), std::move(buf));
}

CylinderGrid2D rect_partial_sum(const CylinderGrid2D& f, Index M, Index N) {
  check_index(M, f.side(), "rectangular partial sum");
  check_index(N, f.side(), "rectangular partial sum");
  return truncate(f, M, N, Axis::both);
}

CylinderGrid2D marginal_sum_1(const CylinderGrid2D& f, Index n) {
  check_index(n, f.side(), "marginal sum");
  return truncate(f, n, f.side(), Axis::first);
}

CylinderGrid2D marginal_sum_2(const CylinderGrid2D& f, Index n) {
  check_index(n, f.side(), "marginal sum");
  return truncate(f, f.side(), n, Axis::second);
}

std::vector<Complex> character_matrix(const ModulusSequence& ms, std::size_t d) {
  RootTable roots(ms);
  const Index side = ms.scale(d);
  std::vector<Complex> out(side * side);
  for (Index k = 0; k < side; ++k)
    for (Index c = 0; c < side; ++c) out[k * side + c] = vilenkin_on_cell(ms, roots, d, k, c);
  return out;
}

// Partial-sum stream -----------------------------------------------------------

void for_each_rect_partial_sum(const Spectrum2D& s, Index l_lo, Index l_hi, Index r_lo, Index r_hi,
                               const PartialSumVisitor& visit) {
  const Index side = s.side();
  check_index(l_hi, side, "partial sum");
  check_index(r_hi, side, "partial sum");
  if (l_lo > l_hi || r_lo > r_hi) return;
  const auto psi = character_matrix(s.modulus(), s.depth());

  // partial[i][y] = sum_{j<r} hat f(i, j) psi_j(y) for the current r.
  std::vector<Complex> partial(l_hi * side, Complex{});
  for (Index i = 0; i < l_hi; ++i) {
    Complex* row = &partial[i * side];
    for (Index j = 0; j < r_lo; ++j) {
      const Complex c = s(i, j);
      if (c == Complex{}) continue;
      const Complex* chr = &psi[j * side];
      for (Index y = 0; y < side; ++y) row[y] += c * chr[y];
    }
  }

  std::vector<Complex> sum(side * side);
  for (Index r = r_lo; r <= r_hi; ++r) {
    if (r > r_lo) {
      const Complex* chr = &psi[(r - 1) * side];
      for (Index i = 0; i < l_hi; ++i) {
        const Complex c = s(i, r - 1);
        if (c == Complex{}) continue;
        Complex* row = &partial[i * side];
        for (Index y = 0; y < side; ++y) row[y] += c * chr[y];
      }
    }
    std::fill(sum.begin(), sum.end(), Complex{});
    auto add_row = [&](Index i) {
      const Complex* chr = &psi[i * side];
      const Complex* row = &partial[i * side];
      for (Index x = 0; x < side; ++x) {
        const Complex w = chr[x];
        Complex* out = &sum[x * side];
        for (Index y = 0; y < side; ++y) out[y] += w * row[y];
      }
    };
    for (Index i = 0; i < l_lo; ++i) add_row(i);
    for (Index l = l_lo; l <= l_hi; ++l) {
      visit(l, r, sum);
      if (l < l_hi) add_row(l);
    }
  }
}

// Strong means ---------------------------------------------------------------

double MeanTable::value(Index n, Index m) const {
  auto i = std::find(ns.begin(), ns.end(), n);
  auto j = std::find(ms.begin(), ms.end(), m);
  if (i == ns.end() || j == ms.end()) throw std::out_of_range("pair not tabulated");
  return at(static_cast<std::size_t>(i - ns.begin()), static_cast<std::size_t>(j - ms.begin()));
}

MeanTable deviation_mean_table(const CylinderGrid2D& f, std::span<const Index> ns_in,
                               std::span<const Index> ms_in,
                               const std::function<double(double)>& term) {
  MeanTable table;
  table.ns = sorted_unique(ns_in, f.side(), "n");
  table.ms = sorted_unique(ms_in, f.side(), "m");
  table.values.assign(table.ns.size() * table.ms.size(), 0.0);

  const Index cells = f.side() * f.side();
  const auto fv = f.values();
  std::vector<double> running(cells);
  std::vector<std::vector<double>> totals(table.ns.size(), std::vector<double>(cells, 0.0));

  std::size_t next_n = 0;
  std::size_t next_m = 0;
  const Index n_max = table.ns.back();
  for_each_rect_partial_sum(
      forward_transform_2d(f), 1, n_max, 1, table.ms.back(),
      [&](Index l, Index r, std::span<const Complex> sum) {
        if (l == 1) {
          std::fill(running.begin(), running.end(), 0.0);
          next_n = 0;
        }
        for (Index c = 0; c < cells; ++c) running[c] += term(std::abs(sum[c] - fv[c]));
        if (next_n < table.ns.size() && table.ns[next_n] == l) {
          auto& total = totals[next_n];
          for (Index c = 0; c < cells; ++c) total[c] += running[c];
          ++next_n;
        }
        if (l == n_max && next_m < table.ms.size() && table.ms[next_m] == r) {
          for (std::size_t i = 0; i < table.ns.size(); ++i) {
            const double best = *std::max_element(totals[i].begin(), totals[i].end());
            table.values[i * table.ms.size() + next_m] =
                best / (static_cast<double>(table.ns[i]) * static_cast<double>(r));
          }
          ++next_m;
        }
      });
  return table;
}

namespace {

double exponential_term(const GaugeFunction& g, double u) {
  const double e = g(u);
  if (e > kExponentLimit) return std::numeric_limits<double>::infinity();
  return std::expm1(e);
}

}  // namespace

MeanTable strong_mean_table(const CylinderGrid2D& f, std::span<const Index> ns,
                            std::span<const Index> ms, const GaugeFunction& g) {
  return deviation_mean_table(f, ns, ms, [&g](double u) { return exponential_term(g, u); });
}

StrongMean strong_mean_2d(const CylinderGrid2D& f, Index n, Index m, const GaugeFunction& g) {
  const Index ns[] = {n};
  const Index ms[] = {m};
  const double v = strong_mean_table(f, ns, ms, g).at(0, 0);
  return {v, std::isinf(v)};
}

std::vector<StrongMean> fridli_schipp_table(const CylinderGrid1D& f, std::span<const Index> ns_in,
                                            const GaugeFunction& g) {
  const Index side = f.size();
  std::vector<Index> order(ns_in.begin(), ns_in.end());
  for (auto n : order) {
    if (n < 1) throw std::out_of_range("n starts at 1");
    check_index(n, side, "Fridli-Schipp mean");
  }
  std::vector<StrongMean> out(order.size());
  if (order.empty()) return out;
  const Index n_max = *std::max_element(order.begin(), order.end());

  const auto spectrum = forward_transform(f);
  RootTable roots(f.modulus());
  std::vector<Complex> sum(side, Complex{});
  std::vector<double> total(side, 0.0);
  std::vector<double> sup_at(n_max + 1, 0.0);
  for (Index k = 1; k <= n_max; ++k) {
    const Complex c = spectrum[k - 1];
    if (c != Complex{}) {
      for (Index x = 0; x < side; ++x) sum[x] += c * vilenkin_on_cell(f.modulus(), roots, f.depth(), k - 1, x);
    }
    double best = 0.0;
    for (Index x = 0; x < side; ++x) {
      total[x] += g(std::abs(sum[x] - f[x]));
      best = std::max(best, total[x]);
    }
    sup_at[k] = best / static_cast<double>(k);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    out[i].value = sup_at[order[i]];
    out[i].overflowed = std::isinf(out[i].value);
  }
  return out;
}

StrongMean fridli_schipp_mean_1d(const CylinderGrid1D& f, Index n, const GaugeFunction& g) {
  const Index ns[] = {n};
  return fridli_schipp_table(f, ns, g).front();
}

// Power means ----------------------------------------------------------------

BlockPowerMean power_mean_block(const CylinderGrid2D& f, std::size_t A, std::size_t B, double p) {
  if (!(p > 0.0)) throw std::domain_error("power mean exponent must be positive");
  const auto& ms = f.modulus();
  if (A >= f.depth() || B >= f.depth()) {
    throw std::out_of_range("block scales need M_{A+1}, M_{B+1} <= M_d");
  }
  const Index cells = f.side() * f.side();
  BlockPowerMean out;
  out.cells.assign(cells, 0.0);
  for_each_rect_partial_sum(forward_transform_2d(f), ms.scale(A), ms.scale(A + 1) - 1, ms.scale(B),
                            ms.scale(B + 1) - 1,
                            [&](Index, Index, std::span<const Complex> sum) {
                              for (Index c = 0; c < cells; ++c) out.cells[c] += std::pow(std::abs(sum[c]), p);
                            });
  const double norm = 1.0 / (static_cast<double>(ms.scale(A)) * static_cast<double>(ms.scale(B)));
  for (auto& v : out.cells) {
    v = std::pow(v * norm, 1.0 / p);
    out.sup = std::max(out.sup, v);
  }
  return out;
}

double glukhov_integral(const ModulusSequence& ms, unsigned p, std::size_t n, double cell_budget) {
  if (p == 0) throw std::domain_error("Glukhov integral needs p >= 1");
  if (n + 1 > ms.depth()) throw std::out_of_range("Glukhov integral needs n + 1 <= K");
  const std::size_t d = n + 1;
  const Index side = ms.scale(d);
  const double tuples = std::pow(static_cast<double>(side), static_cast<double>(p));
  if (tuples > cell_budget) {
    throw BudgetExceeded("Glukhov integral at p = " + std::to_string(p) + ", n = " +
                         std::to_string(n) + " needs " + std::to_string(static_cast<long double>(tuples)) +
                         " product cells, budget is " + std::to_string(static_cast<long double>(cell_budget)));
  }
  const Index lo = ms.scale(n);
  const Index hi = ms.scale(d);
  // D_l for l < M_{n+1} is constant on depth-(n+1) cylinders.
  std::vector<std::vector<Complex>> kernels;
  kernels.reserve(hi - lo);
  for (Index l = lo; l < hi; ++l) {
    auto grid = dirichlet_grid(ms, d, l);
    kernels.emplace_back(grid.values().begin(), grid.values().end());
  }

  const auto count = static_cast<Index>(tuples);
  std::vector<Index> tuple(p, 0);
  double total = 0.0;
  for (Index t = 0; t < count; ++t) {
    Complex acc{};
    for (const auto& kernel : kernels) {
      Complex prod{1.0, 0.0};
      for (unsigned k = 0; k < p; ++k) prod *= kernel[tuple[k]];
      acc += prod;
    }
    total += std::abs(acc);
    for (unsigned k = 0; k < p; ++k) {
      if (++tuple[k] < side) break;
      tuple[k] = 0;
    }
  }
  return total / (tuples * static_cast<double>(lo));
}

}  // namespace vilenkin
