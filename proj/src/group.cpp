#include "vilenkin/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace vilenkin {

namespace {

// Recursive-descent parser for modulus lists:
//   list := item (',' item)*
//   item := (number | '[' list ']') ('^' number)?
class ModulusParser {
public:
  explicit ModulusParser(std::string_view text) : text_(text) {}

  std::vector<std::uint32_t> run() {
    auto out = list();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

private:
  std::vector<std::uint32_t> list() {
    std::vector<std::uint32_t> out;
    for (;;) {
      auto part = item();
      out.insert(out.end(), part.begin(), part.end());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      return out;
    }
  }

  std::vector<std::uint32_t> item() {
    skip_space();
    std::vector<std::uint32_t> base;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      base = list();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      ++pos_;
    } else {
      base.push_back(static_cast<std::uint32_t>(number()));
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const auto count = number();
      if (count == 0) fail("repeat count must be positive");
      if (count * base.size() > 4096) fail("sequence too long");
      std::vector<std::uint32_t> out;
      out.reserve(base.size() * count);
      for (std::uint64_t i = 0; i < count; ++i) out.insert(out.end(), base.begin(), base.end());
      return out;
    }
    return base;
  }

  std::uint64_t number() {
    skip_space();
    std::uint64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected a positive integer");
    if (value > std::numeric_limits<std::uint32_t>::max()) fail("number too large");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const char* what) const {
    std::ostringstream os;
    os << "bad modulus sequence '" << text_ << "' at position " << pos_ << ": " << what;
    throw std::invalid_argument(os.str());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void require_same(const ModulusSequence& a, const ModulusSequence& b) {
  if (!(a == b)) {
    throw StructuralError("group points over different modulus sequences: " + a.to_string() +
                          " vs " + b.to_string());
  }
}

}  // namespace

ModulusSequence::ModulusSequence(std::vector<std::uint32_t> moduli) {
  if (moduli.empty()) throw std::invalid_argument("modulus sequence must be non-empty");
  auto data = std::make_shared<Data>();
  data->scales.reserve(moduli.size() + 1);
  data->scales.push_back(1);
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    const auto m = moduli[k];
    if (m < 2) {
      throw std::invalid_argument("modulus m_" + std::to_string(k) + " = " + std::to_string(m) +
                                  " is below 2");
    }
    const Index prev = data->scales.back();
    if (prev > std::numeric_limits<Index>::max() / m) {
      throw std::overflow_error("scale M_" + std::to_string(k + 1) + " overflows 64 bits");
    }
    data->scales.push_back(prev * m);
    data->bound = std::max(data->bound, m);
  }
  data->moduli = std::move(moduli);
  data_ = std::move(data);
}

ModulusSequence ModulusSequence::parse(std::string_view text) {
  return ModulusSequence(ModulusParser(text).run());
}

std::size_t ModulusSequence::depth_within(Index max_cells) const noexcept {
  std::size_t d = 0;
  while (d < depth() && data_->scales[d + 1] <= max_cells) ++d;
  return d;
}

std::string ModulusSequence::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < depth(); ++k) {
    if (k) out += ',';
    out += std::to_string(data_->moduli[k]);
  }
  return out;
}

IndexDigits decompose_index(Index n, const ModulusSequence& ms) {
  if (n >= ms.order()) {
    throw std::out_of_range("index " + std::to_string(n) + " is not below M_K = " +
                            std::to_string(ms.order()));
  }
  IndexDigits out;
  out.digits.resize(ms.depth());
  for (std::size_t j = 0; j < ms.depth(); ++j) {
    out.digits[j] = static_cast<std::uint32_t>(n % ms.modulus(j));
    n /= ms.modulus(j);
    if (out.digits[j] != 0) out.order = j;
  }
  return out;
}

Index compose_index(std::span<const std::uint32_t> digits, const ModulusSequence& ms) {
  if (digits.size() > ms.depth()) throw std::out_of_range("too many digits");
  Index n = 0;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (digits[j] >= ms.modulus(j)) throw std::out_of_range("digit exceeds its modulus");
    n += digits[j] * ms.scale(j);
  }
  return n;
}

GroupPoint::GroupPoint(ModulusSequence ms) : ms_(std::move(ms)), digits_(ms_.depth(), 0) {}

GroupPoint::GroupPoint(ModulusSequence ms, std::vector<std::uint32_t> digits)
    : ms_(std::move(ms)), digits_(std::move(digits)) {
  if (digits_.size() != ms_.depth()) {
    throw std::invalid_argument("point has " + std::to_string(digits_.size()) +
                                " digits, expected " + std::to_string(ms_.depth()));
  }
  for (std::size_t k = 0; k < digits_.size(); ++k) {
    if (digits_[k] >= ms_.modulus(k)) {
      throw std::invalid_argument("digit x_" + std::to_string(k) + " out of range");
    }
  }
}

GroupPoint GroupPoint::from_cell(const ModulusSequence& ms, Index cell, std::size_t d) {
  if (d > ms.depth()) throw std::out_of_range("cylinder depth exceeds K");
  if (cell >= ms.scale(d)) throw std::out_of_range("cell rank exceeds M_d");
  std::vector<std::uint32_t> digits(ms.depth(), 0);
  for (std::size_t k = 0; k < d; ++k) {
    digits[k] = static_cast<std::uint32_t>(cell % ms.modulus(k));
    cell /= ms.modulus(k);
  }
  return GroupPoint(ms, std::move(digits));
}

GroupPoint GroupPoint::unit(const ModulusSequence& ms, std::size_t n) {
  if (n >= ms.depth()) throw std::out_of_range("unit digit beyond K");
  std::vector<std::uint32_t> digits(ms.depth(), 0);
  digits[n] = 1;
  return GroupPoint(ms, std::move(digits));
}

bool GroupPoint::is_zero() const noexcept {
  for (auto d : digits_)
    if (d != 0) return false;
  return true;
}

GroupPoint add(const GroupPoint& x, const GroupPoint& y) {
  require_same(x.modulus(), y.modulus());
  const auto& ms = x.modulus();
  std::vector<std::uint32_t> digits(ms.depth());
  for (std::size_t k = 0; k < digits.size(); ++k) {
    digits[k] = (x.digit(k) + y.digit(k)) % ms.modulus(k);
  }
  return GroupPoint(ms, std::move(digits));
}

GroupPoint neg(const GroupPoint& x) {
  const auto& ms = x.modulus();
  std::vector<std::uint32_t> digits(ms.depth());
  for (std::size_t k = 0; k < digits.size(); ++k) {
    digits[k] = (ms.modulus(k) - x.digit(k)) % ms.modulus(k);
  }
  return GroupPoint(ms, std::move(digits));
}

Index cylinder_index(const GroupPoint& x, std::size_t d) {
  const auto& ms = x.modulus();
  if (d > ms.depth()) {
    throw std::out_of_range("cylinder depth " + std::to_string(d) + " exceeds K = " +
                            std::to_string(ms.depth()));
  }
  Index rank = 0;
  for (std::size_t k = 0; k < d; ++k) rank += x.digit(k) * ms.scale(k);
  return rank;
}

CylinderMeasure cylinder_measure(const ModulusSequence& ms, std::size_t d) {
  if (d > ms.depth()) throw std::out_of_range("cylinder depth exceeds K");
  return {1, ms.scale(d)};
}

Index cell_add(const ModulusSequence& ms, std::size_t d, Index a, Index b) {
  Index out = 0;
  for (std::size_t k = 0; k < d; ++k) {
    const auto m = ms.modulus(k);
    out += ((a % m + b % m) % m) * ms.scale(k);
    a /= m;
    b /= m;
  }
  return out;
}

Index cell_neg(const ModulusSequence& ms, std::size_t d, Index a) {
  Index out = 0;
  for (std::size_t k = 0; k < d; ++k) {
    const auto m = ms.modulus(k);
    out += ((m - a % m) % m) * ms.scale(k);
    a /= m;
  }
  return out;
}

}  // namespace vilenkin
