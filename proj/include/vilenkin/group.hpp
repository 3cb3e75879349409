#pragma once

// Truncated bounded Vilenkin group G_m: modulus sequences, the generalized
// number system M_0 = 1, M_{k+1} = m_k M_k, digit vectors and cylinders.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vilenkin {

using Index = std::uint64_t;

/// Raised when two objects built over different modulus sequences are mixed.
class StructuralError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised when a requested computation exceeds a configured size budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The moduli (m_0, ..., m_{K-1}) together with their scale ladder
/// (M_0, ..., M_K). Cheap to copy; copies share storage.
class ModulusSequence {
public:
  /// Throws std::invalid_argument on an empty sequence or a modulus < 2, and
  /// std::overflow_error when M_K does not fit in 64 bits.
  explicit ModulusSequence(std::vector<std::uint32_t> moduli);

  /// Parses "2,3,4", "2^10" (ten moduli equal to 2), "2,3^4" and the group
  /// repeat "[2,3]^5". Throws std::invalid_argument on malformed input.
  static ModulusSequence parse(std::string_view text);

  std::size_t depth() const noexcept { return data_->moduli.size(); }
  std::uint32_t modulus(std::size_t k) const { return data_->moduli.at(k); }
  std::span<const std::uint32_t> moduli() const noexcept { return data_->moduli; }
  /// a := sup_k m_k
  std::uint32_t bound() const noexcept { return data_->bound; }

  /// M_k for 0 <= k <= depth().
  Index scale(std::size_t k) const { return data_->scales.at(k); }
  std::span<const Index> scales() const noexcept { return data_->scales; }
  /// M_K, the number of points of the truncated group.
  Index order() const noexcept { return data_->scales.back(); }

  /// Largest d <= depth() with M_d <= max_cells.
  std::size_t depth_within(Index max_cells) const noexcept;

  /// Canonical text form, e.g. "2,3,4".
  std::string to_string() const;

  friend bool operator==(const ModulusSequence& a, const ModulusSequence& b) noexcept {
    return a.data_ == b.data_ || a.data_->moduli == b.data_->moduli;
  }

private:
  struct Data {
    std::vector<std::uint32_t> moduli;
    std::vector<Index> scales;
    std::uint32_t bound = 0;
  };
  std::shared_ptr<const Data> data_;
};

/// Mixed-radix digits (n_0, ..., n_{K-1}) of an index n = sum n_j M_j.
struct IndexDigits {
  std::vector<std::uint32_t> digits;
  /// |n| = max{k : n_k != 0}; empty for n = 0.
  std::optional<std::size_t> order;
};

IndexDigits decompose_index(Index n, const ModulusSequence& ms);
Index compose_index(std::span<const std::uint32_t> digits, const ModulusSequence& ms);

/// An element x = (x_0, ..., x_{K-1}) of the truncated group.
class GroupPoint {
public:
  /// The zero point.
  explicit GroupPoint(ModulusSequence ms);
  /// Throws std::invalid_argument if the digit count or a digit bound is wrong.
  GroupPoint(ModulusSequence ms, std::vector<std::uint32_t> digits);

  /// The point whose first d digits spell the depth-d cylinder rank `cell`
  /// and whose remaining digits are zero.
  static GroupPoint from_cell(const ModulusSequence& ms, Index cell, std::size_t d);
  /// e_n: digit n equal to 1, all others zero.
  static GroupPoint unit(const ModulusSequence& ms, std::size_t n);

  const ModulusSequence& modulus() const noexcept { return ms_; }
  std::span<const std::uint32_t> digits() const noexcept { return digits_; }
  std::uint32_t digit(std::size_t k) const { return digits_.at(k); }
  bool is_zero() const noexcept;

  friend bool operator==(const GroupPoint& a, const GroupPoint& b) noexcept {
    return a.ms_ == b.ms_ && a.digits_ == b.digits_;
  }

private:
  ModulusSequence ms_;
  std::vector<std::uint32_t> digits_;
};

/// Coordinatewise sum modulo m_k. Throws StructuralError on mismatched moduli.
GroupPoint add(const GroupPoint& x, const GroupPoint& y);
GroupPoint neg(const GroupPoint& x);
inline GroupPoint sub(const GroupPoint& x, const GroupPoint& y) { return add(x, neg(y)); }

/// Rank of the cylinder I_d(x) among the M_d cylinders of depth d:
/// sum_{k<d} x_k M_k. Throws std::out_of_range for d > K.
Index cylinder_index(const GroupPoint& x, std::size_t d);

/// Haar measure of a depth-d cylinder, kept as the exact fraction 1/M_d.
struct CylinderMeasure {
  Index numerator = 1;
  Index denominator = 1;
  double value() const noexcept {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
};

CylinderMeasure cylinder_measure(const ModulusSequence& ms, std::size_t d);

/// Cell arithmetic on depth-d ranks without materializing points.
Index cell_add(const ModulusSequence& ms, std::size_t d, Index a, Index b);
Index cell_neg(const ModulusSequence& ms, std::size_t d, Index a);

}  // namespace vilenkin
