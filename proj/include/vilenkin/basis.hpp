#pragma once

// The Vilenkin character system on a truncated group, cylinder-constant
// functions, their spectra, the mixed-radix character transform and the
// Dirichlet kernels.

#include <complex>
#include <span>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

using Complex = std::complex<double>;

/// exp(2 pi i q / m). Quarter-turn multiples are returned exactly.
Complex unit_root(std::uint64_t q, std::uint32_t m);

/// Per-digit tables of exp(2 pi i q / m_k), q < m_k.
class RootTable {
public:
  explicit RootTable(const ModulusSequence& ms);

  /// exp(2 pi i q / m_k) with q reduced modulo m_k.
  Complex operator()(std::size_t k, std::uint64_t q) const {
    const auto& row = table_[k];
    return row[q % row.size()];
  }

private:
  std::vector<std::vector<Complex>> table_;
};

/// Generalized Rademacher function r_k(x) = exp(2 pi i x_k / m_k).
Complex rademacher(std::size_t k, const GroupPoint& x);

/// psi_n(x) = prod_k r_k(x)^{n_k}, for n < M_K.
Complex vilenkin(Index n, const GroupPoint& x);

/// psi_n on the depth-d cell with rank `cell`; requires n < M_d.
Complex vilenkin_on_cell(const ModulusSequence& ms, const RootTable& roots, std::size_t d, Index n,
                         Index cell);

/// A function constant on the M_d cylinders of depth d, stored by cell rank.
class CylinderGrid1D {
public:
  CylinderGrid1D(ModulusSequence ms, std::size_t depth);
  CylinderGrid1D(ModulusSequence ms, std::size_t depth, std::vector<Complex> values);

  const ModulusSequence& modulus() const noexcept { return ms_; }
  std::size_t depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return values_.size(); }

  Complex& operator[](Index cell) { return values_[cell]; }
  const Complex& operator[](Index cell) const { return values_[cell]; }
  std::span<Complex> values() noexcept { return values_; }
  std::span<const Complex> values() const noexcept { return values_; }

  Complex at(const GroupPoint& x) const { return values_[cylinder_index(x, depth_)]; }

  /// ||f||_C, exact for cylinder-constant functions.
  double sup_norm() const noexcept;

  /// The same function represented on the finer depth `depth`.
  CylinderGrid1D refined(std::size_t depth) const;

private:
  ModulusSequence ms_;
  std::size_t depth_;
  std::vector<Complex> values_;
};

/// Fourier coefficients hat f(k), k < M_d, of a depth-d grid.
class Spectrum1D {
public:
  Spectrum1D(ModulusSequence ms, std::size_t depth);
  Spectrum1D(ModulusSequence ms, std::size_t depth, std::vector<Complex> coeffs);

  const ModulusSequence& modulus() const noexcept { return ms_; }
  std::size_t depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Complex& operator[](Index k) { return coeffs_[k]; }
  const Complex& operator[](Index k) const { return coeffs_[k]; }
  std::span<Complex> coeffs() noexcept { return coeffs_; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

private:
  ModulusSequence ms_;
  std::size_t depth_;
  std::vector<Complex> coeffs_;
};

enum class TransformDirection { forward, inverse };

/// In-place character transform of the M_d values data[offset + i*stride].
/// Forward computes sum_c f(c) conj(psi_k(c)) / M_d; inverse computes
/// sum_k c_k psi_k(x). Cost O(M_d * sum_{k<d} m_k).
void transform_strided(std::span<Complex> data, const ModulusSequence& ms, const RootTable& roots,
                       std::size_t d, std::size_t offset, std::size_t stride,
                       TransformDirection dir);

Spectrum1D forward_transform(const CylinderGrid1D& f);
CylinderGrid1D inverse_transform(const Spectrum1D& s);

/// psi_n sampled on the depth-d cells.
CylinderGrid1D sample_character(const ModulusSequence& ms, std::size_t d, Index n);

/// D_n(x) = sum_{k<n} psi_k(x), summed literally. Requires n <= M_K.
Complex dirichlet_direct(Index n, const GroupPoint& x);

/// D_n(x) from the closed form
///   psi_n(x) sum_{j <= |n|} D_{M_j}(x) sum_{q = m_j - n_j}^{m_j - 1} r_j^q(x),
/// with D_{M_j}(x) = M_j on I_j and 0 elsewhere. Requires n <= M_K.
Complex dirichlet_closed(Index n, const GroupPoint& x);

/// D_{M_j}(x): M_j if x lies in I_j, 0 otherwise.
Complex dirichlet_block(std::size_t j, const GroupPoint& x);

/// D_n via the closed form on the depth-d cell with rank `cell`, for
/// n <= M_d (digits beyond d read as zero).
Complex dirichlet_on_cell(const ModulusSequence& ms, const RootTable& roots, std::size_t d, Index n,
                          Index cell);

/// D_n on the depth-d cells via the closed form; requires n <= M_d.
CylinderGrid1D dirichlet_grid(const ModulusSequence& ms, std::size_t d, Index n);

/// S_n f = sum_{k<n} hat f(k) psi_k, with S_0 f = 0. Throws
/// std::out_of_range for n > M_d.
CylinderGrid1D partial_sum_1d(const CylinderGrid1D& f, Index n);

/// S_n f evaluated at the zero point: sum_{k<n} hat f(k).
Complex partial_sum_at_zero(const Spectrum1D& s, Index n);

}  // namespace vilenkin
