#include "vilenkin/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vilenkin {

Complex unit_root(std::uint64_t q, std::uint32_t m) {
  q %= m;
  if ((4 * q) % m == 0) {
    switch ((4 * q) / m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(q) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

RootTable::RootTable(const ModulusSequence& ms) {
  table_.reserve(ms.depth());
  for (auto m : ms.moduli()) {
    std::vector<Complex> row(m);
    for (std::uint32_t q = 0; q < m; ++q) row[q] = unit_root(q, m);
    table_.push_back(std::move(row));
  }
}

Complex rademacher(std::size_t k, const GroupPoint& x) {
  const auto& ms = x.modulus();
  if (k >= ms.depth()) {
    throw std::out_of_range("Rademacher index " + std::to_string(k) + " beyond K");
  }
  return unit_root(x.digit(k), ms.modulus(k));
}

Complex vilenkin(Index n, const GroupPoint& x) {
  const auto& ms = x.modulus();
  const auto nd = decompose_index(n, ms);
  Complex value{1.0, 0.0};
  for (std::size_t k = 0; k < ms.depth(); ++k) {
    if (nd.digits[k] == 0 || x.digit(k) == 0) continue;
    value *= unit_root(static_cast<std::uint64_t>(nd.digits[k]) * x.digit(k), ms.modulus(k));
  }
  return value;
}

Complex vilenkin_on_cell(const ModulusSequence& ms, const RootTable& roots, std::size_t d, Index n,
                         Index cell) {
  Complex value{1.0, 0.0};
  for (std::size_t k = 0; k < d && n != 0; ++k) {
    const auto m = ms.modulus(k);
    const auto nk = n % m;
    const auto xk = cell % m;
    if (nk != 0 && xk != 0) value *= roots(k, nk * xk);
    n /= m;
    cell /= m;
  }
  return value;
}

// CylinderGrid1D -------------------------------------------------------------

CylinderGrid1D::CylinderGrid1D(ModulusSequence ms, std::size_t depth)
    : ms_(std::move(ms)), depth_(depth) {
  if (depth_ > ms_.depth()) throw std::out_of_range("grid depth exceeds K");
  values_.assign(ms_.scale(depth_), Complex{});
}

CylinderGrid1D::CylinderGrid1D(ModulusSequence ms, std::size_t depth, std::vector<Complex> values)
    : ms_(std::move(ms)), depth_(depth), values_(std::move(values)) {
  if (depth_ > ms_.depth()) throw std::out_of_range("grid depth exceeds K");
  if (values_.size() != ms_.scale(depth_)) {
    throw std::invalid_argument("grid needs M_d = " + std::to_string(ms_.scale(depth_)) +
                                " values, got " + std::to_string(values_.size()));
  }
}

double CylinderGrid1D::sup_norm() const noexcept {
  double best = 0.0;
  for (const auto& v : values_) best = std::max(best, std::abs(v));
  return best;
}

CylinderGrid1D CylinderGrid1D::refined(std::size_t depth) const {
  if (depth < depth_) throw std::invalid_argument("refinement cannot lower the depth");
  CylinderGrid1D out(ms_, depth);
  const Index coarse = values_.size();
  for (Index c = 0; c < out.size(); ++c) out[c] = values_[c % coarse];
  return out;
}

Spectrum1D::Spectrum1D(ModulusSequence ms, std::size_t depth) : ms_(std::move(ms)), depth_(depth) {
  if (depth_ > ms_.depth()) throw std::out_of_range("spectrum depth exceeds K");
  coeffs_.assign(ms_.scale(depth_), Complex{});
}

Spectrum1D::Spectrum1D(ModulusSequence ms, std::size_t depth, std::vector<Complex> coeffs)
    : ms_(std::move(ms)), depth_(depth), coeffs_(std::move(coeffs)) {
  if (depth_ > ms_.depth()) throw std::out_of_range("spectrum depth exceeds K");
  if (coeffs_.size() != ms_.scale(depth_)) {
    throw std::invalid_argument("spectrum needs M_d coefficients");
  }
}

// Transform ------------------------------------------------------------------

void transform_strided(std::span<Complex> data, const ModulusSequence& ms, const RootTable& roots,
                       std::size_t d, std::size_t offset, std::size_t stride,
                       TransformDirection dir) {
  const Index total = ms.scale(d);
  std::vector<Complex> in;
  std::vector<Complex> out;
  // Digit axes are independent: axis k has stride M_k and length m_k.
  for (std::size_t kk = d; kk-- > 0;) {
    const std::size_t m = ms.modulus(kk);
    const Index inner = ms.scale(kk);
    const Index block = ms.scale(kk + 1);
    in.resize(m);
    out.resize(m);
    for (Index base = 0; base < total; base += block) {
      for (Index i = 0; i < inner; ++i) {
        const Index start = base + i;
        for (std::size_t q = 0; q < m; ++q) in[q] = data[offset + (start + q * inner) * stride];
        for (std::size_t n = 0; n < m; ++n) {
          Complex acc = in[0];
          for (std::size_t q = 1; q < m; ++q) {
            const std::uint64_t e = (dir == TransformDirection::forward) ? (m - (n * q) % m) : n * q;
            acc += in[q] * roots(kk, e);
          }
          out[n] = acc;
        }
        for (std::size_t n = 0; n < m; ++n) data[offset + (start + n * inner) * stride] = out[n];
      }
    }
  }
  if (dir == TransformDirection::forward) {
    const double scale = 1.0 / static_cast<double>(total);
    for (Index c = 0; c < total; ++c) data[offset + c * stride] *= scale;
  }
}

Spectrum1D forward_transform(const CylinderGrid1D& f) {
  std::vector<Complex> buf(f.values().begin(), f.values().end());
  RootTable roots(f.modulus());
  transform_strided(buf, f.modulus(), roots, f.depth(), 0, 1, TransformDirection::forward);
  return Spectrum1D(f.modulus(), f.depth(), std::move(buf));
}

CylinderGrid1D inverse_transform(const Spectrum1D& s) {
  std::vector<Complex> buf(s.coeffs().begin(), s.coeffs().end());
  RootTable roots(s.modulus());
  transform_strided(buf, s.modulus(), roots, s.depth(), 0, 1, TransformDirection::inverse);
  return CylinderGrid1D(s.modulus(), s.depth(), std::move(buf));
}

CylinderGrid1D sample_character(const ModulusSequence& ms, std::size_t d, Index n) {
  if (n >= ms.scale(d)) throw std::out_of_range("character index must be below M_d");
  RootTable roots(ms);
  CylinderGrid1D out(ms, d);
  for (Index c = 0; c < out.size(); ++c) out[c] = vilenkin_on_cell(ms, roots, d, n, c);
  return out;
}

// Dirichlet kernels ----------------------------------------------------------

namespace {

void check_kernel_index(Index n, const ModulusSequence& ms) {
  if (n > ms.order()) {
    throw std::out_of_range("Dirichlet index " + std::to_string(n) + " exceeds M_K = " +
                            std::to_string(ms.order()));
  }
}

// Number of leading zero digits of x, i.e. the largest j with x in I_j.
std::size_t zero_prefix(std::span<const std::uint32_t> x) {
  std::size_t p = 0;
  while (p < x.size() && x[p] == 0) ++p;
  return p;
}

Complex closed_form(Index n, std::span<const std::uint32_t> x, const ModulusSequence& ms,
                    const RootTable& roots) {
  if (n == 0) return {};
  const std::size_t prefix = zero_prefix(x);
  if (n == ms.order()) {
    return prefix == ms.depth() ? Complex(static_cast<double>(n), 0.0) : Complex{};
  }
  // Digits of n and psi_n(x).
  Complex psi{1.0, 0.0};
  Complex sum{};
  Index rest = n;
  for (std::size_t j = 0; j < ms.depth() && rest != 0; ++j) {
    const std::uint32_t m = ms.modulus(j);
    const auto nj = static_cast<std::uint32_t>(rest % m);
    rest /= m;
    if (nj != 0 && x[j] != 0) psi *= roots(j, static_cast<std::uint64_t>(nj) * x[j]);
    // D_{M_j}(x) vanishes once j passes the zero prefix; the inner sum is
    // empty when n_j = 0.
    if (j > prefix || nj == 0) continue;
    Complex inner{};
    for (std::uint32_t q = m - nj; q < m; ++q) inner += roots(j, static_cast<std::uint64_t>(q) * x[j]);
    sum += static_cast<double>(ms.scale(j)) * inner;
  }
  return psi * sum;
}

}  // namespace

Complex dirichlet_block(std::size_t j, const GroupPoint& x) {
  const auto& ms = x.modulus();
  if (j > ms.depth()) throw std::out_of_range("block index beyond K");
  return zero_prefix(x.digits()) >= j ? Complex(static_cast<double>(ms.scale(j)), 0.0) : Complex{};
}

Complex dirichlet_direct(Index n, const GroupPoint& x) {
  const auto& ms = x.modulus();
  check_kernel_index(n, ms);
  RootTable roots(ms);
  const Index cell = cylinder_index(x, ms.depth());
  Complex sum{};
  for (Index k = 0; k < n; ++k) sum += vilenkin_on_cell(ms, roots, ms.depth(), k, cell);
  return sum;
}

Complex dirichlet_closed(Index n, const GroupPoint& x) {
  const auto& ms = x.modulus();
  check_kernel_index(n, ms);
  RootTable roots(ms);
  return closed_form(n, x.digits(), ms, roots);
}

Complex dirichlet_on_cell(const ModulusSequence& ms, const RootTable& roots, std::size_t d, Index n,
                          Index cell) {
  if (d > ms.depth()) throw std::out_of_range("cell depth exceeds K");
  if (n > ms.scale(d)) throw std::out_of_range("Dirichlet index exceeds M_d");
  std::vector<std::uint32_t> digits(ms.depth(), 0);
  for (std::size_t k = 0; k < d; ++k) {
    digits[k] = static_cast<std::uint32_t>(cell % ms.modulus(k));
    cell /= ms.modulus(k);
  }
  return closed_form(n, digits, ms, roots);
}

CylinderGrid1D dirichlet_grid(const ModulusSequence& ms, std::size_t d, Index n) {
  if (d > ms.depth()) throw std::out_of_range("grid depth exceeds K");
  if (n > ms.scale(d)) throw std::out_of_range("Dirichlet index exceeds M_d");
  RootTable roots(ms);
  CylinderGrid1D out(ms, d);
  std::vector<std::uint32_t> digits(ms.depth(), 0);
  // For n = M_d with d < K the general closed form applies; it reads digit d,
  // which is zero for every depth-d cell.
  for (Index c = 0; c < out.size(); ++c) {
    Index rest = c;
    for (std::size_t k = 0; k < d; ++k) {
      digits[k] = static_cast<std::uint32_t>(rest % ms.modulus(k));
      rest /= ms.modulus(k);
    }
    out[c] = closed_form(n, digits, ms, roots);
  }
  return out;
}

CylinderGrid1D partial_sum_1d(const CylinderGrid1D& f, Index n) {
  if (n > f.size()) {
    throw std::out_of_range("partial sum index " + std::to_string(n) + " exceeds M_d = " +
                            std::to_string(f.size()));
  }
  auto spectrum = forward_transform(f);
  for (Index k = n; k < spectrum.size(); ++k) spectrum[k] = {};
  return inverse_transform(spectrum);
}

Complex partial_sum_at_zero(const Spectrum1D& s, Index n) {
  if (n > s.size()) throw std::out_of_range("partial sum index exceeds M_d");
  Complex sum{};
  for (Index k = 0; k < n; ++k) sum += s[k];
  return sum;
}

}  // namespace vilenkin
